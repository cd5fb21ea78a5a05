#include "hq3/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <ostream>

namespace hq3 {

using nlohmann::json;

namespace {

json grid_json(const GridSpec& g) {
    auto list = [](const std::vector<Rational>& xs) {
        json j = json::array();
        for (const auto& x : xs) j.push_back(x.str());
        return j;
    };
    json lambdas = json::array();
    for (const auto& l : g.lambdas) lambdas.push_back(to_json(l));
    json j = {{"p", list(g.p)},          {"q", list(g.q)},       {"W0", list(g.W0)}, {"W1", list(g.W1)},
              {"s", g.s},                {"lambda", lambdas},    {"n_max", g.n_max}, {"seed", g.seed},
              {"force_zero_q", g.force_zero_q}};
    if (g.m_list) {
        j["m_policy"] = *g.m_list;
    } else {
        j["m_policy"] = "all";
    }
    return j;
}

}  // namespace

json record_json(const GridSpec& grid, const CampaignResult& result, const IdentityRecord& r) {
    json j = {{"type", "record"}, {"point", to_json(result.points[r.point])}};
    j["lambda"] = r.lambda < 0 ? json(nullptr) : to_json(grid.lambdas[static_cast<std::size_t>(r.lambda)]);
    j["id"] = result.identities[r.identity];
    j["instances"] = r.instances;
    j["status"] = status_name(r.status);
    if (r.status == Status::Degenerate) j["reason"] = r.reason;
    if (r.witness) {
        j["n"] = r.witness->n;
        j["m"] = r.witness->m ? json(*r.witness->m) : json(nullptr);
        j["witness"] = r.witness->sides;
    }
    return j;
}

json summary_json(const GridSpec& grid, const CampaignResult& result) {
    json ids = json::object();
    std::size_t pass = 0, fail = 0, degenerate = 0;
    for (const auto& t : result.tallies) {
        ids[t.id] = {{"pass", t.pass}, {"fail", t.fail}, {"degenerate", t.degenerate}, {"instances", t.instances}};
        pass += t.pass;
        fail += t.fail;
        degenerate += t.degenerate;
    }
    return {{"type", "summary"},
            {"base_points", result.points.size()},
            {"lambda_triples", grid.lambdas.size()},
            {"identities", ids},
            {"totals", {{"pass", pass}, {"fail", fail}, {"degenerate", degenerate}}},
            {"notes", result.notes},
            {"exit_code", result.exit_code()}};
}

void write_jsonl(std::ostream& os, const GridSpec& grid, const CampaignResult& result, const std::string& timestamp) {
    os << json{{"type", "header"}, {"tool", "hq3"}, {"timestamp", timestamp}, {"grid", grid_json(grid)}}.dump() << '\n';
    for (const auto& r : result.records) os << record_json(grid, result, r).dump() << '\n';
    os << summary_json(grid, result).dump() << '\n';
}

void write_csv(std::ostream& os, const CampaignResult& result) {
    os << "identity,pass,fail,degenerate,instances\n";
    for (const auto& t : result.tallies) {
        os << t.id << ',' << t.pass << ',' << t.fail << ',' << t.degenerate << ',' << t.instances << '\n';
    }
}

void print_summary(std::ostream& os, const GridSpec& grid, const CampaignResult& result) {
    os << "base points: " << result.points.size() << ", lambda triples: " << grid.lambdas.size()
       << ", n_max: " << grid.n_max << "\n";
    os << std::left << std::setw(12) << "identity" << std::right << std::setw(10) << "pass" << std::setw(10) << "fail"
       << std::setw(12) << "degenerate" << std::setw(14) << "instances" << "\n";
    for (const auto& t : result.tallies) {
        os << std::left << std::setw(12) << t.id << std::right << std::setw(10) << t.pass << std::setw(10) << t.fail
           << std::setw(12) << t.degenerate << std::setw(14) << t.instances << "\n";
    }
    for (const auto& n : result.notes) os << "note: " << n << "\n";
    os << (result.fails == 0 ? "OK" : "FAILED") << ": " << result.fails << " failing record(s) in " << std::fixed
       << std::setprecision(2) << result.seconds << " s\n";
    os.unsetf(std::ios::floatfield);
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace hq3
