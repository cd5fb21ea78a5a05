#include "hq3/commands.hpp"

#include "hq3/catalog.hpp"
#include "hq3/errors.hpp"
#include "hq3/report.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace hq3 {

using nlohmann::json;

SeqKind parse_seq_kind(const std::string& text) {
    if (text == "W") return SeqKind::W;
    if (text == "U") return SeqKind::U;
    if (text == "V") return SeqKind::V;
    if (text == "W(s)" || text == "Ws") return SeqKind::Ws;
    if (text == "U(s)" || text == "Us") return SeqKind::Us;
    if (text == "QW(s)" || text == "QWs" || text == "QW") return SeqKind::QWs;
    if (text == "QU(s)" || text == "QUs" || text == "QU") return SeqKind::QUs;
    throw InvalidArgument("unknown sequence kind '" + text + "' (expected W, U, V, W(s), U(s), QW(s) or QU(s))");
}

OutputFormat parse_format(const std::string& text) {
    if (text == "table" || text == "tsv") return OutputFormat::Table;
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    throw InvalidArgument("unknown format '" + text + "' (expected json or csv)");
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(Rational::parse(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

namespace {

void emit_scalar(const SeqRequest& req, const std::vector<Rational>& values, std::ostream& out) {
    switch (req.format) {
        case OutputFormat::Table:
            out << "n\tvalue\n";
            for (std::size_t n = 0; n < values.size(); ++n) out << n << '\t' << values[n] << '\n';
            break;
        case OutputFormat::Csv:
            out << "n,value\n";
            for (std::size_t n = 0; n < values.size(); ++n) out << n << ',' << values[n] << '\n';
            break;
        case OutputFormat::Json: {
            json j = json::array();
            for (const auto& v : values) j.push_back(v.str());
            out << j.dump() << '\n';
            break;
        }
    }
}

void emit_quat(const SeqRequest& req, const std::vector<QuatQ>& values, std::ostream& out) {
    const char sep = req.format == OutputFormat::Csv ? ',' : '\t';
    if (req.format == OutputFormat::Json) {
        json j = json::array();
        for (const auto& v : values) j.push_back(to_json(v));
        out << j.dump() << '\n';
        return;
    }
    out << 'n' << sep << "x0" << sep << "x1" << sep << "x2" << sep << "x3" << '\n';
    for (std::size_t n = 0; n < values.size(); ++n) {
        out << n;
        for (std::size_t r = 0; r < 4; ++r) out << sep << values[n][r];
        out << '\n';
    }
}

}  // namespace

int cmd_seq(const SeqRequest& req, std::ostream& out, std::ostream& err) {
    if (req.params.size() != 2 && req.params.size() != 4) {
        err << "error: --params takes p,q or p,q,W0,W1\n";
        return 2;
    }
    const Rational W0 = req.params.size() == 4 ? req.params[2] : Rational(0);
    const Rational W1 = req.params.size() == 4 ? req.params[3] : Rational(1);
    if (auto why = root_degeneracy(req.params[0], req.params[1])) {
        err << "error: degenerate parameters: " << *why << "\n";
        return 2;
    }
    try {
        const HoradamParams P(req.params[0], req.params[1], W0, W1, req.s, req.lambda);
        const std::size_t N = req.n_max;
        std::vector<Rational> values;
        switch (req.kind) {
            case SeqKind::W:
            case SeqKind::U:
            case SeqKind::V: {
                SeqCache cache(P);
                for (std::size_t n = 0; n <= N; ++n) {
                    values.push_back(req.kind == SeqKind::W ? cache.w(n) : req.kind == SeqKind::U ? cache.u(n) : cache.v(n));
                }
                emit_scalar(req, values, out);
                return 0;
            }
            case SeqKind::Ws:
            case SeqKind::Us: {
                const SequenceBasis b(P, N);
                if (req.kind == SeqKind::Ws && b.ws_zero()) throw UndefinedSequence("W_s = 0");
                if (req.kind == SeqKind::Us && b.us_zero()) throw UndefinedSequence("U_s = 0");
                for (std::size_t n = 0; n <= N; ++n) values.push_back(req.kind == SeqKind::Ws ? b.ws(n) : b.us(n));
                emit_scalar(req, values, out);
                return 0;
            }
            case SeqKind::QWs:
            case SeqKind::QUs: {
                const QuatSeqContext ctx(P, N + 3);
                std::vector<QuatQ> quats;
                for (std::size_t n = 0; n <= N; ++n) quats.push_back(req.kind == SeqKind::QWs ? ctx.qw_at(n) : ctx.qu_at(n));
                emit_quat(req, quats, out);
                return 0;
            }
        }
    } catch (const UndefinedSequence& e) {
        err << "error: degenerate parameters: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int cmd_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err) {
    CampaignOptions options = req.options;
    options.keep_records = req.out_path && req.format == OutputFormat::Json;
    CampaignResult result;
    try {
        result = run_campaign(req.grid, options);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (req.out_path) {
        std::ofstream file(*req.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << *req.out_path << "' for writing\n";
            return 2;
        }
        if (req.format == OutputFormat::Csv) {
            write_csv(file, result);
        } else {
            write_jsonl(file, req.grid, result, utc_timestamp());
        }
        file.flush();
        if (!file) {
            err << "error: failed writing '" << *req.out_path << "'\n";
            return 2;
        }
    } else if (req.format == OutputFormat::Csv) {
        write_csv(out, result);
        return result.exit_code();
    }
    print_summary(out, req.grid, result);
    for (const auto& r : result.records) {
        if (r.status != Status::Fail) continue;
        out << "fail: " << record_json(req.grid, result, r).dump() << "\n";
        break;
    }
    return result.exit_code();
}

int cmd_explain(const std::optional<std::string>& id, std::ostream& out, std::ostream& err) {
    if (!id) {
        for (const auto& info : identity_catalog()) {
            out << std::left << std::setw(11) << info.id << info.title << "\n";
        }
        return 0;
    }
    if (!is_known_identity(*id)) {
        err << "unknown identity: " << *id << "\n";
        return 2;
    }
    out << explain_text(find_identity(*id));
    return 0;
}

}  // namespace hq3
