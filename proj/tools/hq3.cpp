// hq3: sequence tables and identity-verification campaigns for higher-order
// Horadam quaternions.

#include "hq3/commands.hpp"
#include "hq3/errors.hpp"
#include "hq3/grid.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

hq3::PgqParams parse_lambda(const std::string& text) {
    const auto l = hq3::parse_rational_list(text);
    if (l.size() != 3) throw hq3::InvalidArgument("--lambda takes three values l1,l2,l3");
    return {l[0], l[1], l[2]};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Higher-order Horadam quaternion toolkit"};
    app.require_subcommand(1);

    std::string kind, params, lambda, format, grid_file, out_path, perturb, identities;
    int s = 1;
    std::size_t n_max = 10, jobs = 0;
    std::uint64_t seed = hq3::GridSpec{}.seed;
    bool quick = false;
    std::vector<std::string> explain_id;

    auto* seq = app.add_subcommand("seq", "Print a table of exact sequence values");
    seq->add_option("kind", kind, "W, U, V, W(s), U(s), QW(s) or QU(s)")->required();
    seq->add_option("--params", params, "p,q[,W0,W1]; W0,W1 default to 0,1")->required();
    seq->add_option("--s", s, "order s >= 1")->check(CLI::Range(1, 64));
    seq->add_option("--lambda", lambda, "l1,l2,l3 for quaternion kinds (default 1,1,1)");
    seq->add_option("--n-max", n_max, "last index")->check(CLI::Range(0, 4096));
    seq->add_option("--format", format, "table (default), json or csv");

    auto* verify = app.add_subcommand("verify", "Run identity checks over a parameter grid");
    verify->add_option("--grid", grid_file, "JSON grid description (default: built-in grid)");
    verify->add_flag("--quick", quick, "use the small built-in grid");
    verify->add_option("--out", out_path, "report file (JSON lines, or CSV with --format csv)");
    verify->add_option("--format", format, "json (default) or csv");
    verify->add_option("--jobs", jobs, "worker threads (HQ3_JOBS overrides; default: processors)");
    verify->add_option("--perturb", perturb, "negative control: shift one identity's right-hand side");
    verify->add_option("--seed", seed, "lambda sampling seed for built-in grids");
    verify->add_option("--identities", identities, "comma-separated identity ids to run");
    verify->add_option("--n-max", n_max, "override the grid's n_max")->check(CLI::Range(0, 64));

    auto* explain = app.add_subcommand("explain", "Describe an identity (no id: list all)");
    explain->add_option("id", explain_id, "identity id")->expected(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*seq) {
            hq3::SeqRequest req;
            req.kind = hq3::parse_seq_kind(kind);
            req.params = hq3::parse_rational_list(params);
            req.s = s;
            if (!lambda.empty()) req.lambda = parse_lambda(lambda);
            req.n_max = n_max;
            if (!format.empty()) req.format = hq3::parse_format(format);
            return hq3::cmd_seq(req, std::cout, std::cerr);
        }
        if (*verify) {
            hq3::VerifyRequest req;
            if (!grid_file.empty() && quick) throw hq3::InvalidArgument("--grid and --quick are exclusive");
            req.grid = !grid_file.empty() ? hq3::grid_from_file(grid_file)
                       : quick            ? hq3::quick_grid(seed)
                                          : hq3::default_grid(seed);
            if (verify->count("--n-max")) req.grid.n_max = n_max;
            if (!identities.empty()) {
                req.grid.identities.clear();
                std::size_t start = 0;
                for (;;) {
                    const auto comma = identities.find(',', start);
                    req.grid.identities.push_back(identities.substr(start, comma == std::string::npos ? comma : comma - start));
                    if (comma == std::string::npos) break;
                    start = comma + 1;
                }
            }
            req.options.jobs = hq3::resolve_jobs(verify->count("--jobs") ? std::optional(jobs) : std::nullopt);
            if (!perturb.empty()) req.options.perturb = perturb;
            if (!out_path.empty()) req.out_path = out_path;
            if (!format.empty()) req.format = hq3::parse_format(format);
            return hq3::cmd_verify(req, std::cout, std::cerr);
        }
        return hq3::cmd_explain(explain_id.empty() ? std::nullopt : std::optional(explain_id.front()), std::cout,
                                std::cerr);
    } catch (const hq3::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
