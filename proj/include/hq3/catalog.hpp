#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hq3 {

enum class Scope { Scalar, Quaternion };

/// How a campaign enumerates instances of an identity for a bound n_max.
enum class IndexShape {
    Once,    ///< a single instance per grid point
    Series,  ///< one truncated-series comparison of length n_max
    Single,  ///< n_min <= n <= n_max
    Pair,    ///< n_min <= n <= n_max, m from the m-policy with m <= n
};

struct IdentityInfo {
    std::string id;
    std::string title;
    std::string statement;
    std::string hypotheses;
    std::string location;
    Scope scope;
    IndexShape shape;
    std::size_t n_min = 0;
    std::size_t m_min = 0;
    bool needs_ws = false;
    bool needs_us = false;
    bool needs_sum_den = false;
    /// Formula involves the cube term alpha^{3s} + beta^{3s}; explain prints how its exponent is read.
    bool cube_exponent_note = false;
};

/// Every identity id in canonical order: scalar ids first, then quaternion ids.
const std::vector<IdentityInfo>& identity_catalog();

/// Throws UnknownIdentity.
const IdentityInfo& find_identity(std::string_view id);
bool is_known_identity(std::string_view id);

/// Multi-line statement, hypotheses and location.
std::string explain_text(const IdentityInfo& info);

}  // namespace hq3
