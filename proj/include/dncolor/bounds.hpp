#pragma once

// Edge counts of unions of maximal convex thrackles: the k*n - C(k,2) bound,
// the star families that meet it, and an exhaustive check on small cases.

#include "dncolor/thrackle.hpp"

#include <chrono>
#include <cstdint>
#include <vector>

namespace dncolor {

struct ThrackleFamily
{
    int n = 0;
    std::vector<MaximalThrackle> members;
};

/// k*n - C(k,2).
[[nodiscard]] std::int64_t union_edge_bound(int n, int k);

/// min(C(n,2), k*n - C(k,2)): the most edges a union of k maximal thrackles can have.
[[nodiscard]] std::int64_t union_edge_target(int n, int k);

/// Number of distinct edges over all members.
[[nodiscard]] std::size_t union_edge_count(const ThrackleFamily& family);

struct UnionBoundReport
{
    std::size_t union_edges = 0;
    std::int64_t bound = 0;
    bool satisfied = false;
};

/// Counts the union and compares it to the bound. Members must be maximal
/// thrackles on family.n points (DomainError otherwise). A violated bound is a
/// std::logic_error: it cannot happen for correct input.
[[nodiscard]] UnionBoundReport verify_union_bound(const ThrackleFamily& family);

/// Stars T_v for v in {1, 3, ..., 2k-1}. Requires n >= 2k and n >= 3.
[[nodiscard]] ThrackleFamily extremal_family(int n, int k);

struct ExhaustiveResult
{
    std::int64_t max_union = 0;
    /// False when the budget ran out before every k-subset was visited.
    bool complete = false;
    std::uint64_t subsets_checked = 0;
};

/// Largest union over all k-subsets of distinct maximal thrackles on n points,
/// enumerated through their staircase paths. Requires 3 <= n <= 11 and
/// 1 <= k <= 2^(n-1) - n, the number of maximal thrackles.
[[nodiscard]] ExhaustiveResult exhaustive_union_max(int n, int k, std::chrono::milliseconds budget,
                                                    unsigned workers = 1);

} // namespace dncolor
