// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Set HQ3_JOBS to control the worker count of the grid campaigns.

#include "hq3/campaign.hpp"
#include "hq3/catalog.hpp"
#include "hq3/errors.hpp"
#include "hq3/grid.hpp"
#include "hq3/horadam.hpp"
#include "hq3/quat_sequences.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#ifndef HQ3_BINARY
#error "HQ3_BINARY must name the hq3 executable"
#endif

namespace {

using hq3::PgqParams;
using hq3::Rational;
using Clock = std::chrono::steady_clock;

int failures = 0;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(int criterion, bool ok, const std::string& what, double secs) {
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s (%.1f s)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(), secs);
    std::fflush(stdout);
}

hq3::HoradamParams params(const hq3::BasePoint& bp) { return {bp.p, bp.q, bp.W0, bp.W1, bp.s}; }

void dual_oracle() {
    const auto t0 = Clock::now();
    const hq3::GridSpec grid = hq3::default_grid();
    std::size_t checked = 0, skipped = 0, mismatches = 0;
    for (const auto& bp : hq3::base_points(grid)) {
        if (hq3::point_degeneracy(bp)) {
            ++skipped;
            continue;
        }
        const auto P = params(bp);
        if (hq3::horadam_w(P, static_cast<std::size_t>(P.s)).is_zero()) {
            ++skipped;
            continue;
        }
        for (std::size_t n = 0; n <= grid.n_max; ++n) {
            ++checked;
            if (hq3::higher_w_ratio(P, n) != hq3::higher_w_rec(P, n)) ++mismatches;
        }
    }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << "W_{sn}/W_s equals the recurrence value at " << checked << " (point, n) pairs, " << mismatches
       << " mismatches, " << skipped << " degenerate points skipped";
    report(1, mismatches == 0 && checked > 0 && secs < 60.0, os.str(), secs);
}

const hq3::IdentityTally* tally(const hq3::CampaignResult& r, const std::string& id) {
    for (const auto& t : r.tallies) {
        if (t.id == id) return &t;
    }
    return nullptr;
}

void identity_suites(std::size_t jobs) {
    const auto t0 = Clock::now();
    const hq3::GridSpec grid = hq3::default_grid();
    const hq3::CampaignResult full = hq3::run_campaign(grid, {.jobs = jobs, .keep_records = false});
    const double secs = seconds_since(t0);

    bool binet_ok = true;
    std::size_t binet_pass = 0;
    for (const char* id : {"thm2.3", "cor2.3"}) {
        const auto* t = tally(full, id);
        binet_ok = binet_ok && t && t->fail == 0 && t->pass > 0;
        if (t) binet_pass += t->pass;
    }
    std::ostringstream b;
    b << "Binet forms rational and equal to the recurrence on the default grid, " << binet_pass << " passing records";
    report(2, binet_ok, b.str(), secs);

    bool all_ok = full.fails == 0 && full.tallies.size() == hq3::identity_catalog().size();
    std::size_t pass = 0, degenerate = 0;
    for (const auto& t : full.tallies) {
        all_ok = all_ok && t.fail == 0 && t.pass > 0;
        pass += t.pass;
        degenerate += t.degenerate;
    }
    std::ostringstream a;
    a << full.tallies.size() << " identities over " << full.points.size() << " base points x " << grid.lambdas.size()
      << " lambda triples: " << pass << " pass, " << full.fails << " fail, " << degenerate << " degenerate";
    report(3, all_ok && secs < 600.0, a.str() + " (default grid, limit 600 s)", secs);

    // The quick grid, with every record kept so the degenerate bookkeeping can be audited.
    const auto t1 = Clock::now();
    const hq3::GridSpec qgrid = hq3::quick_grid();
    const hq3::CampaignResult quick = hq3::run_campaign(qgrid, {.jobs = jobs, .keep_records = true});
    const double qsecs = seconds_since(t1);
    bool bookkeeping = quick.fails == 0;
    std::size_t root_degenerate = 0;
    for (const auto& rec : quick.records) {
        const bool bad_roots = hq3::point_degeneracy(quick.points[rec.point]).has_value();
        if (bad_roots) ++root_degenerate;
        if (bad_roots && rec.status != hq3::Status::Degenerate) bookkeeping = false;
        if (rec.status == hq3::Status::Degenerate && rec.reason.empty()) bookkeeping = false;
    }
    std::ostringstream q;
    q << "quick grid: " << quick.records.size() << " records, " << quick.fails << " fail, " << root_degenerate
      << " on root-degenerate points all marked degenerate (limit 30 s)";
    report(3, bookkeeping && root_degenerate > 0 && qsecs < 30.0, q.str(), qsecs);
}

void golden_tables() {
    const auto t0 = Clock::now();
    bool ok = true;
    const hq3::HoradamParams fib2(1, -1, 0, 1, 2), luc2(1, -1, 2, 1, 2);
    const long u2[] = {0, 1, 3, 8, 21, 55};
    for (std::size_t n = 0; n < 6; ++n) ok = ok && hq3::higher_u(fib2, n) == Rational(u2[n]);
    const Rational w2[] = {Rational(2, 3), Rational(1), Rational(7, 3), Rational(6)};
    for (std::size_t n = 0; n < 4; ++n) ok = ok && hq3::higher_w_rec(luc2, n) == w2[n];

    const hq3::QuatSeqContext ctx(hq3::HoradamParams(1, -1, 0, 1, 1, PgqParams(1, 1, 1)), 6);
    const auto norm = hq3::qw_norm_check(ctx, 0);
    ok = ok && norm.direct == Rational(6) && norm.closed == hq3::QuadExt(6);

    const hq3::SequenceBasis b(fib2, 6);
    const hq3::SeqMatrix2<Rational> cube{{{{Rational(21), Rational(-8)}, {Rational(8), Rational(-3)}}}};
    ok = ok && hq3::h_power(b, 3) == cube && hq3::h_power_closed(b, 3) == cube;
    report(4, ok, "U_n(2), Lucas W_n(2), Fibonacci norm at n = 0 and H(2)^3 match exactly", seconds_since(t0));
}

void algebra_laws() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    auto rational = [&] { return Rational(num(rng), den(rng)); };
    std::size_t triples = 0, checks = 0, bad = 0;
    for (long l1 = -1; l1 <= 2; ++l1) {
        for (long l2 = -1; l2 <= 2; ++l2) {
            for (long l3 = -1; l3 <= 2; ++l3) {
                const PgqParams l(l1, l2, l3);
                ++triples;
                auto quat = [&] { return hq3::QuatQ(rational(), rational(), rational(), rational(), l); };
                for (int trial = 0; trial < 1000; ++trial) {
                    const auto P = quat(), Q = quat(), R = quat();
                    bad += (P * Q) * R != P * (Q * R);
                    bad += hq3::pgq_conj(P * Q) != hq3::pgq_conj(Q) * hq3::pgq_conj(P);
                    bad += hq3::pgq_norm(P * Q) != hq3::pgq_norm(P) * hq3::pgq_norm(Q);
                    checks += 3;
                }
            }
        }
    }
    std::ostringstream os;
    os << checks << " associativity, conjugate-reversal and norm-multiplicativity checks over " << triples
       << " lambda triples, " << bad << " violations";
    report(5, bad == 0 && triples == 64, os.str(), seconds_since(t0));
}

void negative_control(std::size_t jobs) {
    const auto t0 = Clock::now();
    std::size_t caught = 0;
    std::string missed;
    for (const auto& info : hq3::identity_catalog()) {
        const std::string cmd = std::string("'") + HQ3_BINARY + "' verify --quick --jobs " + std::to_string(jobs) +
                                " --perturb " + info.id + " --identities " + info.id + " > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        const bool nonzero = status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 1;
        if (nonzero) {
            ++caught;
        } else {
            missed += " " + info.id;
        }
    }
    const std::size_t total = hq3::identity_catalog().size();
    std::ostringstream os;
    os << caught << "/" << total << " perturbed identities fail on the quick grid with exit status 1";
    if (!missed.empty()) os << "; missed:" << missed;
    report(6, caught == total, os.str(), seconds_since(t0));
}

}  // namespace

int main() {
    const std::size_t jobs = hq3::resolve_jobs(std::nullopt);
    std::printf("acceptance run with %zu worker thread(s)\n", jobs);
    try {
        dual_oracle();
        identity_suites(jobs);
        golden_tables();
        algebra_laws();
        negative_control(jobs);
    } catch (const std::exception& e) {
        std::printf("FAIL: unexpected exception: %s\n", e.what());
        return 1;
    }
    std::printf("%s: %d failing criterion line(s)\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
