#pragma once

// The chromatic number of D_n and the explicit staircase cover achieving it.
//
// chi(D_n) = n - k where k is the unique integer with C(k+1,2) <= n < C(k+2,2).
// For every non-triangular i >= 2 there is an infinite staircase P_i in
// Omega = { (i,j) : 1 <= i < j }; restricted to Omega_n these n - k paths
// cover every cell, and each restriction is a thrackle.

#include "dncolor/convex_core.hpp"
#include "dncolor/thrackle.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dncolor {

/// Floor of the square root, exact for every non-negative 64-bit input.
[[nodiscard]] std::int64_t isqrt(std::int64_t value);

[[nodiscard]] bool is_triangular(std::int64_t value);

/// The unique k >= 1 with C(k+1,2) <= n < C(k+2,2). Requires n >= 1.
[[nodiscard]] std::int64_t triangular_k(std::int64_t n);

/// n - floor((isqrt(8n+1) - 1) / 2); zero for n in {0, 1}.
[[nodiscard]] std::int64_t chi_formula(std::int64_t n);

/// The blocks N_k = [C(k,2)+1, C(k+1,2)] and N'_k = N_k minus its top element.
struct IntervalPartition
{
    std::int64_t k = 0;
    std::int64_t first = 0;
    std::int64_t last = 0;

    [[nodiscard]] std::int64_t last_prime() const { return last - 1; }
    [[nodiscard]] std::int64_t size() const { return last - first + 1; }
    [[nodiscard]] std::int64_t prime_size() const { return last - first; }
    [[nodiscard]] bool contains(std::int64_t i) const { return first <= i && i <= last; }
    [[nodiscard]] bool contains_prime(std::int64_t i) const { return first <= i && i <= last_prime(); }
};

[[nodiscard]] IntervalPartition interval_partition(std::int64_t k);

/// The block N_k containing i >= 1.
[[nodiscard]] IntervalPartition block_of(std::int64_t i);

/// Closed-form description of the infinite path P_i: column i down to
/// turn_row, one step east, column i+1 down to row i, then row i eastwards.
class PathDescriptor
{
public:
    [[nodiscard]] std::int64_t index() const { return index_; }
    [[nodiscard]] std::int64_t turn_row() const { return turn_row_; }
    [[nodiscard]] bool contains(Segment cell) const;
    /// Cells of P_i with column <= n, in path order.
    [[nodiscard]] std::vector<Segment> cells_up_to(int n) const;

private:
    friend PathDescriptor path_P(std::int64_t i);

    std::int64_t index_ = 0;
    std::int64_t turn_row_ = 0;
};

/// DomainError if i < 2 or i is triangular.
[[nodiscard]] PathDescriptor path_P(std::int64_t i);

struct RestrictedPath
{
    std::int64_t index = 0;
    std::vector<Segment> cells;
    /// Runs from (1,r) to (r,n).
    bool maximal = false;

    [[nodiscard]] std::optional<ThracklePath> as_thrackle_path(int n) const;
};

/// P_i intersected with Omega_n. DomainError if i > n.
[[nodiscard]] RestrictedPath restrict_path(std::int64_t i, int n);

/// Restrictions of every P_i with i <= n; this is a cover, cells may repeat.
[[nodiscard]] std::vector<RestrictedPath> path_cover(int n);

struct ColoringCertificate
{
    int n = 0;
    std::vector<std::vector<Segment>> classes;
    /// Generating path index per class, 0 when supplied from elsewhere.
    std::vector<std::int64_t> class_labels;

    friend bool operator==(const ColoringCertificate&, const ColoringCertificate&) = default;
};

/// The path cover turned into a partition: a cell shared by several paths
/// goes to the one with the smallest index. Classes are sorted.
[[nodiscard]] ColoringCertificate optimal_coloring(int n);

struct ClassConflict
{
    std::size_t class_index = 0;
    Segment first;
    Segment second;

    friend bool operator==(const ClassConflict&, const ClassConflict&) = default;
};

struct ColoringVerdict
{
    bool valid = false;
    std::vector<Segment> uncovered;
    std::vector<ClassConflict> conflicts;

    friend bool operator==(const ColoringVerdict&, const ColoringVerdict&) = default;
};

/// Raised for a certificate that cannot be checked at all (cells outside Omega_n).
class StructureError : public DomainError
{
public:
    using DomainError::DomainError;
};

/// Valid iff every cell of Omega_n is in some class and no class holds two
/// disjoint segments. Overlapping classes are accepted.
[[nodiscard]] ColoringVerdict verify_coloring(const ColoringCertificate& cert);

/// For column j of Omega_n, the path index covering each cell (a, j), a = 1..j-1,
/// chosen by the column case analysis and checked against path membership.
/// Entry a-1 holds the index for row a.
[[nodiscard]] std::vector<std::int64_t> column_coverage_witness(int n, int j);

} // namespace dncolor
