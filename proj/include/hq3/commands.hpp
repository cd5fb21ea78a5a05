#pragma once

#include "hq3/campaign.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hq3 {

enum class SeqKind { W, U, V, Ws, Us, QWs, QUs };
enum class OutputFormat { Table, Json, Csv };

/// Accepts W, U, V, W(s), U(s), QW(s), QU(s); the parentheses may be dropped. Throws InvalidArgument.
SeqKind parse_seq_kind(const std::string& text);
/// Throws InvalidArgument.
OutputFormat parse_format(const std::string& text);

/// "a,b,c" into rationals; each entry may be "n" or "n/d". Throws ParseError.
std::vector<Rational> parse_rational_list(const std::string& text);

struct SeqRequest {
    SeqKind kind = SeqKind::W;
    /// p, q and optionally W0, W1 (default 0, 1).
    std::vector<Rational> params;
    int s = 1;
    PgqParams lambda;
    std::size_t n_max = 10;
    OutputFormat format = OutputFormat::Table;
};

struct VerifyRequest {
    GridSpec grid;
    CampaignOptions options;
    std::optional<std::string> out_path;
    OutputFormat format = OutputFormat::Json;
};

// Each returns the process exit code: 0 success, 1 failing identities, 2 usage or I/O errors.
int cmd_seq(const SeqRequest& req, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err);
/// No id: lists the catalog.
int cmd_explain(const std::optional<std::string>& id, std::ostream& out, std::ostream& err);

}  // namespace hq3
