#include "hq3/grid.hpp"

#include "hq3/catalog.hpp"
#include "hq3/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace hq3 {

namespace {

using nlohmann::json;

std::vector<Rational> int_range(long lo, long hi) {
    std::vector<Rational> out;
    for (long v = lo; v <= hi; ++v) out.emplace_back(v);
    return out;
}

auto key(const PgqParams& l) { return std::make_tuple(l.l1(), l.l2(), l.l3()); }

std::vector<PgqParams> standard_required() {
    return {PgqParams(1, 1, 1), PgqParams(0, 0, 0), PgqParams(-1, 2, 1)};
}

Rational rational_from(const json& v, const std::string& field) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError("grid field '" + field + "': " + e.what());
        }
    }
    throw ParseError("grid field '" + field + "' must hold integers or rational strings");
}

std::vector<Rational> rational_list(const json& v, const std::string& field) {
    if (!v.is_array()) throw ParseError("grid field '" + field + "' must be an array");
    std::vector<Rational> out;
    for (const auto& x : v) out.push_back(rational_from(x, field));
    if (out.empty()) throw ParseError("grid field '" + field + "' is empty");
    return out;
}

std::size_t size_from(const json& v, const std::string& field) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ParseError("grid field '" + field + "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

}  // namespace

std::vector<PgqParams> sample_lambdas(const std::vector<Rational>& values, std::size_t count, std::uint64_t seed,
                                      const std::vector<PgqParams>& required) {
    std::vector<Rational> vals = values;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());

    std::set<std::tuple<Rational, Rational, Rational>> chosen;
    std::vector<PgqParams> out;
    for (const auto& r : required) {
        if (out.size() == count) break;
        if (chosen.insert(key(r)).second) out.push_back(r);
    }

    std::vector<PgqParams> pool;
    for (const auto& a : vals) {
        for (const auto& b : vals) {
            for (const auto& c : vals) {
                if (!chosen.count(std::make_tuple(a, b, c))) pool.emplace_back(a, b, c);
            }
        }
    }
    // Raw engine output keeps the draw identical across standard libraries.
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; out.size() < count && i < pool.size(); ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    std::sort(out.begin(), out.end(), [](const PgqParams& x, const PgqParams& y) { return key(x) < key(y); });
    return out;
}

GridSpec default_grid(std::uint64_t seed) {
    GridSpec g;
    g.p = int_range(-3, 3);
    g.q = int_range(-3, 3);
    g.W0 = int_range(-2, 2);
    g.W1 = int_range(-2, 2);
    g.s = {1, 2, 3};
    g.n_max = 12;
    g.seed = seed;
    g.lambdas = sample_lambdas(int_range(-1, 2), 16, seed, standard_required());
    return g;
}

GridSpec quick_grid(std::uint64_t seed) {
    GridSpec g = default_grid(seed);
    g.p = int_range(-2, 2);
    g.q = int_range(-2, 2);
    g.n_max = 8;
    g.lambdas = sample_lambdas(int_range(-1, 2), 4, seed, standard_required());
    return g;
}

GridSpec grid_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("grid file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("grid file must hold a JSON object");

    static const std::set<std::string> known = {"p",      "q",      "W0",           "W1",
                                                "s",      "lambda", "lambda_values", "lambda_count",
                                                "n_max",  "m_policy", "identities",  "seed",
                                                "force_zero_q"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!known.count(it.key())) throw ParseError("unknown grid field '" + it.key() + "'");
    }

    std::uint64_t seed = GridSpec{}.seed;
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw ParseError("grid field 'seed' must be a non-negative integer");
        seed = j["seed"].get<std::uint64_t>();
    }
    GridSpec g = default_grid(seed);

    if (j.contains("p")) g.p = rational_list(j["p"], "p");
    if (j.contains("q")) g.q = rational_list(j["q"], "q");
    if (j.contains("W0")) g.W0 = rational_list(j["W0"], "W0");
    if (j.contains("W1")) g.W1 = rational_list(j["W1"], "W1");
    if (j.contains("s")) {
        if (!j["s"].is_array() || j["s"].empty()) throw ParseError("grid field 's' must be a non-empty array");
        g.s.clear();
        for (const auto& v : j["s"]) {
            if (!v.is_number_integer() || v.get<long>() < 1 || v.get<long>() > 8) {
                throw ParseError("grid field 's' holds integers in [1, 8]");
            }
            g.s.push_back(v.get<int>());
        }
    }
    if (j.contains("n_max")) {
        g.n_max = size_from(j["n_max"], "n_max");
        if (g.n_max > 64) throw ParseError("grid field 'n_max' is at most 64");
    }
    if (j.contains("lambda")) {
        if (!j["lambda"].is_array() || j["lambda"].empty()) {
            throw ParseError("grid field 'lambda' must be a non-empty array of triples");
        }
        g.lambdas.clear();
        for (const auto& t : j["lambda"]) {
            if (!t.is_array() || t.size() != 3) throw ParseError("each lambda entry must be a triple");
            g.lambdas.emplace_back(rational_from(t[0], "lambda"), rational_from(t[1], "lambda"),
                                   rational_from(t[2], "lambda"));
        }
    } else if (j.contains("lambda_values") || j.contains("lambda_count")) {
        const std::vector<Rational> values =
            j.contains("lambda_values") ? rational_list(j["lambda_values"], "lambda_values") : int_range(-1, 2);
        const std::size_t count = j.contains("lambda_count") ? size_from(j["lambda_count"], "lambda_count") : 16;
        if (count == 0) throw ParseError("grid field 'lambda_count' must be positive");
        std::vector<PgqParams> required;
        for (const auto& r : standard_required()) {
            auto in_values = [&](const Rational& x) { return std::find(values.begin(), values.end(), x) != values.end(); };
            if (in_values(r.l1()) && in_values(r.l2()) && in_values(r.l3())) required.push_back(r);
        }
        g.lambdas = sample_lambdas(values, count, seed, required);
    }
    if (j.contains("m_policy")) {
        const auto& m = j["m_policy"];
        if (m.is_string() && m.get<std::string>() == "all") {
            g.m_list.reset();
        } else if (m.is_array()) {
            std::vector<std::size_t> ms;
            for (const auto& v : m) ms.push_back(size_from(v, "m_policy"));
            std::sort(ms.begin(), ms.end());
            ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
            g.m_list = std::move(ms);
        } else {
            throw ParseError("grid field 'm_policy' must be \"all\" or an array of integers");
        }
    }
    if (j.contains("identities")) {
        if (!j["identities"].is_array()) throw ParseError("grid field 'identities' must be an array");
        g.identities.clear();
        for (const auto& v : j["identities"]) {
            if (!v.is_string()) throw ParseError("grid field 'identities' holds strings");
            g.identities.push_back(v.get<std::string>());
        }
    }
    if (j.contains("force_zero_q")) {
        if (!j["force_zero_q"].is_boolean()) throw ParseError("grid field 'force_zero_q' must be a boolean");
        g.force_zero_q = j["force_zero_q"].get<bool>();
    }
    return g;
}

GridSpec grid_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open grid file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return grid_from_json_text(buf.str());
}

std::vector<BasePoint> base_points(const GridSpec& grid) {
    std::vector<BasePoint> out;
    for (const auto& p : grid.p) {
        for (const auto& q : grid.q) {
            if (q.is_zero() && !grid.force_zero_q) continue;
            for (const auto& w0 : grid.W0) {
                for (const auto& w1 : grid.W1) {
                    for (int s : grid.s) out.push_back({p, q, w0, w1, s});
                }
            }
        }
    }
    return out;
}

std::vector<std::string> selected_identities(const GridSpec& grid) {
    std::vector<std::string> out;
    if (grid.identities.empty()) {
        for (const auto& info : identity_catalog()) out.push_back(info.id);
        return out;
    }
    for (const auto& id : grid.identities) find_identity(id);
    for (const auto& info : identity_catalog()) {
        if (std::find(grid.identities.begin(), grid.identities.end(), info.id) != grid.identities.end()) {
            out.push_back(info.id);
        }
    }
    return out;
}

std::vector<std::size_t> m_values(const GridSpec& grid, std::size_t n, std::size_t m_min) {
    std::vector<std::size_t> out;
    if (!grid.m_list) {
        for (std::size_t m = m_min; m <= n; ++m) out.push_back(m);
    } else {
        for (std::size_t m : *grid.m_list) {
            if (m >= m_min && m <= n) out.push_back(m);
        }
    }
    return out;
}

}  // namespace hq3
