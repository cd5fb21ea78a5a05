#include "hq3/campaign.hpp"

#include "hq3/catalog.hpp"
#include "hq3/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace hq3 {

using nlohmann::json;

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Degenerate: return "degenerate";
    }
    return "?";
}

json to_json(const Rational& x) { return x.str(); }

json to_json(const QuadExt& x) {
    json j = {{"a", x.a().str()}, {"b", x.b().str()}};
    if (auto D = x.D()) j["D"] = D->str();
    return j;
}

json to_json(const PgqParams& l) { return json::array({l.l1().str(), l.l2().str(), l.l3().str()}); }

json to_json(const QuatQ& x) {
    return {{"x0", x[0].str()}, {"x1", x[1].str()}, {"x2", x[2].str()}, {"x3", x[3].str()}, {"lambda", to_json(x.params())}};
}

json to_json(const QuatK& x) {
    return {{"x0", to_json(x[0])},
            {"x1", to_json(x[1])},
            {"x2", to_json(x[2])},
            {"x3", to_json(x[3])},
            {"lambda", to_json(x.params())}};
}

json to_json(const BasePoint& bp) {
    return {{"p", bp.p.str()}, {"q", bp.q.str()}, {"W0", bp.W0.str()}, {"W1", bp.W1.str()}, {"s", bp.s}};
}

std::optional<std::string> point_degeneracy(const BasePoint& bp) { return root_degeneracy(bp.p, bp.q); }

std::size_t resolve_jobs(std::optional<std::size_t> flag) {
    if (const char* env = std::getenv("HQ3_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    if (flag && *flag > 0) return *flag;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace {

using QuatKList = Sides<std::vector<QuatK>, std::vector<QuatK>>;

template <class T>
json to_json(const SeqMatrix2<T>& x) {
    return json::array({json::array({to_json(x(0, 0)), to_json(x(0, 1))}), json::array({to_json(x(1, 0)), to_json(x(1, 1))})});
}

template <class T>
json to_json(const std::vector<T>& xs) {
    json j = json::array();
    for (const auto& x : xs) j.push_back(to_json(x));
    return j;
}

// ---------------------------------------------------------------- judging

bool judge(const ScalarSides& s) { return s.holds(); }
bool judge(const SeriesSides& s) { return s.holds(); }
bool judge(const QuatSides& s) { return matches(s.lhs, s.rhs); }
bool judge(const QuatSeriesSides& s) { return matches(s.lhs, s.rhs); }
bool judge(const QuatRationalSides& s) { return s.lhs == s.rhs; }
bool judge(const QuatMatrixSides& s) { return s.lhs == s.rhs; }
bool judge(const QuatKList& s) { return s.lhs == s.rhs; }
bool judge(const NormSides& s) { return s.closed.is_rational() && s.closed.a() == s.direct; }
bool judge(const HPowerSides& s) { return s.lhs == s.rhs && s.det == s.det_expected; }

// Negative control: shift the scalar part of the right-hand side by one.
void bump(ScalarSides& s) {
    s.rhs += Rational(1);
    if (s.rhs_binet) *s.rhs_binet += QuadExt(1);
}
void bump(SeriesSides& s) {
    if (!s.rhs.empty()) s.rhs[0] += Rational(1);
}
void bump(QuatSides& s) { s.rhs[0] += QuadExt(1); }
void bump(QuatSeriesSides& s) {
    if (!s.rhs.empty()) s.rhs[0][0] += QuadExt(1);
}
void bump(QuatRationalSides& s) { s.rhs[0] += Rational(1); }
void bump(QuatMatrixSides& s) { s.rhs(0, 0)[0] += Rational(1); }
void bump(QuatKList& s) {
    if (!s.rhs.empty()) s.rhs[0][0] += QuadExt(1);
}
void bump(NormSides& s) { s.closed += QuadExt(1); }
void bump(HPowerSides& s) { s.rhs(0, 0) += Rational(1); }

json witness(const ScalarSides& s) {
    json j = {{"lhs", s.lhs.str()}, {"rhs", s.rhs.str()}};
    if (s.rhs_binet) j["rhs_binet"] = to_json(*s.rhs_binet);
    return j;
}
json witness(const SeriesSides& s) {
    json l = json::array(), r = json::array();
    for (const auto& x : s.lhs) l.push_back(x.str());
    for (const auto& x : s.rhs) r.push_back(x.str());
    return {{"lhs", l}, {"rhs", r}};
}
json witness(const NormSides& s) { return {{"lhs", s.direct.str()}, {"rhs", to_json(s.closed)}}; }
json witness(const HPowerSides& s) {
    return {{"lhs", to_json(s.lhs)}, {"rhs", to_json(s.rhs)}, {"det", s.det.str()}, {"det_expected", s.det_expected.str()}};
}
template <class L, class R>
json witness(const Sides<L, R>& s) {
    return {{"lhs", to_json(s.lhs)}, {"rhs", to_json(s.rhs)}};
}

// -------------------------------------------------------------- instances

class Runner {
public:
    Runner(const GridSpec& grid, const IdentityInfo& info, bool perturb, IdentityRecord& rec)
        : grid_(grid), info_(info), perturb_(perturb), rec_(rec) {}

    template <class Eval>
    void run(Eval&& eval) {
        switch (info_.shape) {
            case IndexShape::Once: one(eval, 0, std::nullopt); break;
            case IndexShape::Series: one(eval, grid_.n_max, std::nullopt); break;
            case IndexShape::Single:
                for (std::size_t n = info_.n_min; n <= grid_.n_max; ++n) one(eval, n, std::nullopt);
                break;
            case IndexShape::Pair:
                for (std::size_t n = info_.n_min; n <= grid_.n_max; ++n) {
                    for (std::size_t m : m_values(grid_, n, info_.m_min)) one(eval, n, m);
                }
                break;
        }
    }

private:
    template <class Eval>
    void one(Eval& eval, std::size_t n, std::optional<std::size_t> m) {
        ++rec_.instances;
        json sides;
        bool ok = false;
        try {
            auto s = eval(n, m.value_or(0));
            if (perturb_) bump(s);
            ok = judge(s);
            if (!ok && rec_.status != Status::Fail) sides = witness(s);
        } catch (const Error& e) {
            sides = {{"error", e.what()}};
        }
        if (ok || rec_.status == Status::Fail) return;
        rec_.status = Status::Fail;
        auto w = std::make_shared<FailureWitness>();
        w->n = n;
        w->m = m;
        w->sides = std::move(sides);
        rec_.witness = std::move(w);
    }

    const GridSpec& grid_;
    const IdentityInfo& info_;
    bool perturb_;
    IdentityRecord& rec_;
};

void run_scalar(const std::string& id, const SequenceBasis& b, Runner& r) {
    if (id == "eq1") return r.run([&](std::size_t n, std::size_t) { return definition_sides_w(b, n); });
    if (id == "eq2") return r.run([&](std::size_t n, std::size_t) { return recurrence_sides_w(b, n); });
    if (id == "eq3") return r.run([&](std::size_t n, std::size_t) { return definition_sides_u(b, n); });
    if (id == "ab") return r.run([&](std::size_t, std::size_t) { return ab_sides(b); });
    if (id == "cassini_w") return r.run([&](std::size_t n, std::size_t) { return scalar_cassini_w(b, n); });
    if (id == "catalan_w") return r.run([&](std::size_t n, std::size_t m) { return scalar_catalan_w(b, n, m); });
    if (id == "docagne_w") return r.run([&](std::size_t n, std::size_t m) { return scalar_docagne_w(b, n, m); });
    if (id == "cassini_u") return r.run([&](std::size_t n, std::size_t) { return scalar_cassini_u(b, n); });
    if (id == "catalan_u") return r.run([&](std::size_t n, std::size_t m) { return scalar_catalan_u(b, n, m); });
    if (id == "docagne_u") return r.run([&](std::size_t n, std::size_t m) { return scalar_docagne_u(b, n, m); });
    if (id == "id1") return r.run([&](std::size_t n, std::size_t) { return scalar_sum_w(b, n); });
    if (id == "id2") return r.run([&](std::size_t N, std::size_t) { return scalar_ogf_sides(b, N); });
    if (id == "id3") return r.run([&](std::size_t n, std::size_t) { return scalar_decompose_sides(b, n); });
    if (id == "thm5.3") return r.run([&](std::size_t n, std::size_t) { return h_power_sides(b, n); });
    throw UnknownIdentity(id);
}

void run_quat(const std::string& id, const QuatSeqContext& c, Runner& r) {
    if (id == "thm2.1") return r.run([&](std::size_t n, std::size_t) { return qw_recurrence_sides(c, n); });
    if (id == "thm2.2") return r.run([&](std::size_t n, std::size_t) { return qw_norm_check(c, n); });
    if (id == "thm2.3") return r.run([&](std::size_t n, std::size_t) { return QuatSides{c.qw_at(n), qw_binet(c, n)}; });
    if (id == "cor2.3") return r.run([&](std::size_t n, std::size_t) { return QuatSides{c.qu_at(n), qu_binet(c, n)}; });
    if (id == "prod3") {
        return r.run([&](std::size_t, std::size_t) {
            const ThetaProducts closed = theta_products(c);
            return QuatKList{{c.theta_ab(), c.theta_ba()}, {closed.ab, closed.ba}};
        });
    }
    if (id == "eqc") {
        return r.run([&](std::size_t, std::size_t) {
            QuatK direct = c.theta_ba() - c.theta_ab();
            return QuatKList{{direct, direct}, {theta_commutator(c), theta_commutator_rationalized(c)}};
        });
    }
    if (id == "thm3.1") return r.run([&](std::size_t n, std::size_t m) { return catalan_check(c, n, m); });
    if (id == "cor3.1") return r.run([&](std::size_t n, std::size_t) { return cassini_check(c, n); });
    if (id == "thm3.2") return r.run([&](std::size_t n, std::size_t m) { return docagne_check(c, n, m); });
    if (id == "cor3.2") return r.run([&](std::size_t n, std::size_t) { return docagne_corollary_check(c, n); });
    if (id == "thm4.1") return r.run([&](std::size_t n, std::size_t) { return qw_sum_check(c, n); });
    if (id == "thm4.2") return r.run([&](std::size_t n, std::size_t m) { return mixed_product_check(c, n, m); });
    if (id == "cor4.2") return r.run([&](std::size_t n, std::size_t) { return mixed_product_corollary_check(c, n); });
    if (id == "thm5.1") return r.run([&](std::size_t N, std::size_t) { return qw_ogf_sides(c, N); });
    if (id == "cor5.1") return r.run([&](std::size_t N, std::size_t) { return qu_ogf_sides(c, N); });
    if (id == "thm5.2") return r.run([&](std::size_t n, std::size_t) { return qw_egf_sides(c, n); });
    if (id == "thm5.4") return r.run([&](std::size_t n, std::size_t) { return qw_matrix_sides(c, n); });
    if (id == "cor5.4a") return r.run([&](std::size_t n, std::size_t m) { return index_reduction_sum_sides(c, n, m); });
    if (id == "cor5.4b") return r.run([&](std::size_t n, std::size_t) { return index_reduction_double_sides(c, n); });
    throw UnknownIdentity(id);
}

std::optional<std::string> identity_degeneracy(const IdentityInfo& info, const SequenceBasis& b) {
    if (info.needs_ws && b.ws_zero()) return "W_s = 0";
    if (info.needs_us && b.us_zero()) return "U_s = 0";
    if (info.needs_sum_den && b.sum_den_zero()) return "q^s - V_s + 1 = 0";
    return std::nullopt;
}

struct Plan {
    std::vector<const IdentityInfo*> scalar, quat;
    std::vector<std::uint16_t> scalar_index, quat_index;
    std::optional<std::string> perturb;
};

std::vector<IdentityRecord> run_point(const GridSpec& grid, const Plan& plan, std::uint32_t point_index,
                                      const BasePoint& bp) {
    std::vector<IdentityRecord> out;
    out.reserve(plan.scalar.size() + plan.quat.size() * grid.lambdas.size());
    auto record = [&](std::uint16_t identity, std::int32_t lambda) -> IdentityRecord& {
        IdentityRecord& r = out.emplace_back();
        r.point = point_index;
        r.lambda = lambda;
        r.identity = identity;
        return r;
    };

    if (auto why = point_degeneracy(bp)) {
        for (std::size_t i = 0; i < plan.scalar.size(); ++i) {
            auto& r = record(plan.scalar_index[i], -1);
            r.status = Status::Degenerate;
            r.reason = *why;
        }
        for (std::size_t l = 0; l < grid.lambdas.size(); ++l) {
            for (std::size_t i = 0; i < plan.quat.size(); ++i) {
                auto& r = record(plan.quat_index[i], static_cast<std::int32_t>(l));
                r.status = Status::Degenerate;
                r.reason = *why;
            }
        }
        return out;
    }

    const HoradamParams P(bp.p, bp.q, bp.W0, bp.W1, bp.s);
    auto basis = std::make_shared<const SequenceBasis>(P, 2 * grid.n_max + 4);

    for (std::size_t i = 0; i < plan.scalar.size(); ++i) {
        const IdentityInfo& info = *plan.scalar[i];
        auto& r = record(plan.scalar_index[i], -1);
        if (auto why = identity_degeneracy(info, *basis)) {
            r.status = Status::Degenerate;
            r.reason = *why;
            continue;
        }
        Runner runner(grid, info, plan.perturb && *plan.perturb == info.id, r);
        run_scalar(info.id, *basis, runner);
    }
    if (plan.quat.empty()) return out;

    for (std::size_t l = 0; l < grid.lambdas.size(); ++l) {
        const QuatSeqContext ctx(basis, grid.lambdas[l], grid.n_max);
        for (std::size_t i = 0; i < plan.quat.size(); ++i) {
            const IdentityInfo& info = *plan.quat[i];
            auto& r = record(plan.quat_index[i], static_cast<std::int32_t>(l));
            if (auto why = identity_degeneracy(info, *basis)) {
                r.status = Status::Degenerate;
                r.reason = *why;
                continue;
            }
            Runner runner(grid, info, plan.perturb && *plan.perturb == info.id, r);
            run_quat(info.id, ctx, runner);
        }
    }
    return out;
}

}  // namespace

CampaignResult run_campaign(const GridSpec& grid, const CampaignOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    CampaignResult result;
    result.identities = selected_identities(grid);
    result.points = base_points(grid);
    if (options.perturb) find_identity(*options.perturb);
    if (grid.lambdas.empty()) throw InvalidArgument("grid has no lambda triples");

    Plan plan;
    plan.perturb = options.perturb;
    for (std::size_t i = 0; i < result.identities.size(); ++i) {
        const IdentityInfo& info = find_identity(result.identities[i]);
        auto& list = info.scope == Scope::Scalar ? plan.scalar : plan.quat;
        auto& index = info.scope == Scope::Scalar ? plan.scalar_index : plan.quat_index;
        list.push_back(&info);
        index.push_back(static_cast<std::uint16_t>(i));
        result.tallies.push_back({info.id});
    }

    const std::size_t count = result.points.size();
    const std::size_t jobs =
        std::clamp<std::size_t>(resolve_jobs(options.jobs ? std::optional(options.jobs) : std::nullopt), 1,
                                std::max<std::size_t>(count, 1));

    // Results land in per-point slots, so the final order is canonical whatever the scheduling.
    std::vector<std::vector<IdentityRecord>> per_point(count);
    std::vector<std::vector<IdentityTally>> slot_tallies(jobs, result.tallies);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&](std::size_t slot) {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= count || failed.load()) return;
            try {
                auto records = run_point(grid, plan, static_cast<std::uint32_t>(k), result.points[k]);
                for (const auto& r : records) {
                    auto& t = slot_tallies[slot][r.identity];
                    t.instances += r.instances;
                    (r.status == Status::Pass ? t.pass : r.status == Status::Fail ? t.fail : t.degenerate) += 1;
                }
                if (!options.keep_records) {
                    std::erase_if(records, [](const IdentityRecord& r) { return r.status != Status::Fail; });
                }
                per_point[k] = std::move(records);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                failed = true;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker, t);
    worker(0);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    for (auto& records : per_point) {
        for (auto& r : records) result.records.push_back(std::move(r));
    }
    for (const auto& slot : slot_tallies) {
        for (std::size_t i = 0; i < slot.size(); ++i) {
            result.tallies[i].pass += slot[i].pass;
            result.tallies[i].fail += slot[i].fail;
            result.tallies[i].degenerate += slot[i].degenerate;
            result.tallies[i].instances += slot[i].instances;
        }
    }
    for (const auto& t : result.tallies) result.fails += t.fail;

    bool cube = false, summation = false;
    for (std::size_t i = 0; i < result.identities.size(); ++i) {
        const IdentityInfo& info = find_identity(result.identities[i]);
        const auto& t = result.tallies[i];
        if (t.pass + t.fail == 0) continue;
        cube = cube || info.cube_exponent_note;
        summation = summation || info.id == "thm4.1";
    }
    if (cube) {
        result.notes.push_back(
            "Theta product closed forms use alpha^{3s} + beta^{3s} in the k-coefficient");
    }
    if (summation) {
        result.notes.push_back(
            "summation correction k-coefficient taken literally as (1 - q^s) W_0(s) + (1 + V_s) W_1(s), which equals "
            "W_0(s) + W_1(s) + W_2(s)");
    }
    if (options.perturb) result.notes.push_back("negative control: right-hand side of " + *options.perturb + " shifted by 1");

    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace hq3
