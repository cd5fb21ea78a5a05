#pragma once

/**
 * @file grid.hpp
 * @brief Parameter grids for verification campaigns.
 *
 * A grid is the Cartesian product p x q x W0 x W1 x s of base points, each
 * paired with every lambda triple. q = 0 is dropped from the q list unless
 * force_zero_q is set, in which case those points are kept and reported as
 * degenerate, just like points with p^2 = 4q.
 */

#include "hq3/pgq.hpp"
#include "hq3/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hq3 {

struct GridSpec {
    std::vector<Rational> p, q, W0, W1;
    std::vector<int> s;
    std::vector<PgqParams> lambdas;
    std::size_t n_max = 12;
    /// nullopt: every m with 0 <= m <= n. Otherwise only the listed m (still m <= n).
    std::optional<std::vector<std::size_t>> m_list;
    /// Empty: every catalog identity.
    std::vector<std::string> identities;
    std::uint64_t seed = 20240601;
    bool force_zero_q = false;
};

struct BasePoint {
    Rational p, q, W0, W1;
    int s = 1;
};

/// p, q in [-3, 3], W0, W1 in [-2, 2], s in {1, 2, 3}, n_max = 12, 16 sampled lambda triples.
GridSpec default_grid(std::uint64_t seed = GridSpec{}.seed);
/// p, q in [-2, 2], W0, W1 in [-2, 2], s in {1, 2, 3}, n_max = 8, 4 sampled lambda triples.
GridSpec quick_grid(std::uint64_t seed = GridSpec{}.seed);

/// Triples from values^3: the `required` ones first, then distinct triples drawn
/// with mt19937_64(seed) until `count` are chosen; returned sorted lexicographically.
std::vector<PgqParams> sample_lambdas(const std::vector<Rational>& values, std::size_t count, std::uint64_t seed,
                                      const std::vector<PgqParams>& required);

/// Reads a GridSpec from JSON text; absent keys take default-grid values. Throws ParseError.
GridSpec grid_from_json_text(const std::string& text);
GridSpec grid_from_file(const std::string& path);

/// Base points in canonical order (p outermost, s innermost). q = 0 is skipped unless forced.
std::vector<BasePoint> base_points(const GridSpec& grid);

/// Identity ids the grid selects, canonical catalog order. Throws UnknownIdentity.
std::vector<std::string> selected_identities(const GridSpec& grid);

/// The m values allowed for index n; every m is <= n and >= m_min.
std::vector<std::size_t> m_values(const GridSpec& grid, std::size_t n, std::size_t m_min);

}  // namespace hq3
