#pragma once

// Convex thrackles: sets of chords that pairwise intersect (an independent set
// of D_n). Every maximal convex thrackle on n >= 3 points is an odd cycle plus
// pendant vertices, and its n edges form a monotone staircase in Omega_n.

#include "dncolor/convex_core.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

namespace dncolor {

/// True iff no two edges are disjoint.
[[nodiscard]] bool is_thrackle(int n, std::span<const Segment> edges);

/// True iff no absent chord can be added while keeping the thrackle property.
/// Throws DomainError if the edges are not a thrackle to begin with.
[[nodiscard]] bool is_maximal_thrackle(int n, std::span<const Segment> edges);

/// A maximal convex thrackle together with its odd cycle C(T) and the
/// pendant -> apex assignment.
class MaximalThrackle
{
public:
    [[nodiscard]] int n() const { return n_; }
    /// Sorted, n of them.
    [[nodiscard]] const std::vector<Segment>& edges() const { return edges_; }
    /// Cycle in traversal order, starting at its smallest label and continuing
    /// towards the smaller of that label's two cycle neighbours.
    [[nodiscard]] const std::vector<Label>& cycle() const { return cycle_; }
    [[nodiscard]] const std::map<Label, Label>& pendant_apex() const { return pendant_apex_; }
    [[nodiscard]] bool on_cycle(Label v) const;
    [[nodiscard]] bool has_edge(Segment s) const;
    [[nodiscard]] std::vector<Segment> cycle_edges() const;

    friend bool operator==(const MaximalThrackle&, const MaximalThrackle&) = default;

private:
    friend MaximalThrackle decompose(int n, std::span<const Segment> edges);

    int n_ = 0;
    std::vector<Segment> edges_;
    std::vector<Label> cycle_;
    std::vector<bool> on_cycle_;
    std::map<Label, Label> pendant_apex_;
};

/// Splits a maximal thrackle into its cycle (the 2-core) and pendants.
/// Throws DomainError when the edge set is not a maximal thrackle on n >= 3 points.
[[nodiscard]] MaximalThrackle decompose(int n, std::span<const Segment> edges);

/// Whether u lies strictly inside the wedge at apex cycle[pos], i.e. on the
/// circular arc between the apex's two cycle neighbours that avoids the apex.
/// A u on either boundary ray is a DomainError.
[[nodiscard]] bool in_wedge(int n, std::span<const Label> cycle, std::size_t pos, Label u);

/// The cycle vertex whose wedge contains u. u must not be on the cycle.
[[nodiscard]] Label wedge_apex(int n, std::span<const Label> cycle, Label u);
[[nodiscard]] Label wedge_apex(const MaximalThrackle& t, Label u);

/// A monotone staircase in Omega_n from (1,r) to (r,n) taking unit steps east
/// or south. Validated on construction.
class ThracklePath
{
public:
    ThracklePath(int n, std::vector<Segment> cells);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int r() const { return cells_.front().b; }
    [[nodiscard]] const std::vector<Segment>& cells() const { return cells_; }

    friend bool operator==(const ThracklePath&, const ThracklePath&) = default;

private:
    int n_;
    std::vector<Segment> cells_;
};

/// Cells where the path changes direction, counting an imaginary southward
/// entry into the first cell and an eastward exit from the last. These are
/// exactly the cycle edges of the corresponding thrackle.
[[nodiscard]] std::vector<Segment> turning_cells(const ThracklePath& path);

[[nodiscard]] MaximalThrackle thrackle_from_path(const ThracklePath& path);
[[nodiscard]] ThracklePath path_from_thrackle(const MaximalThrackle& t);

/// Edge shared by two maximal thrackles whose cycles are vertex-disjoint, with
/// one endpoint on each cycle. Built by following wedge arcs between the two
/// cycles until they close up into a 2-cycle. Throws PreconditionError when the
/// cycles share a vertex.
[[nodiscard]] Segment common_edge(const MaximalThrackle& first, const MaximalThrackle& second);

/// (v, i, j) with v on the cycles of members i < j. Member indices are 1-based.
struct ConflictTriple
{
    Label v = 0;
    int i = 0;
    int j = 0;

    friend auto operator<=>(const ConflictTriple&, const ConflictTriple&) = default;
};

[[nodiscard]] std::vector<ConflictTriple> conflict_triples(std::span<const MaximalThrackle> family);

/// Replaces v by two consecutive points v' = v and v'' = v + 1 (later labels
/// shift up by one) and rewires every member so that v no longer lies on the
/// cycles of both members i and j. Each member gains exactly one edge.
[[nodiscard]] std::vector<MaximalThrackle> split_vertex(std::span<const MaximalThrackle> family, ConflictTriple triple);

/// Adds chords in Omega order until the thrackle is maximal.
[[nodiscard]] MaximalThrackle extend_to_maximal(int n, std::span<const Segment> edges);

/// Uniform r in [2, n-1], then a uniform staircase from (1,r) to (r,n).
[[nodiscard]] ThracklePath random_maximal_path(int n, std::mt19937_64& rng);
[[nodiscard]] MaximalThrackle random_maximal_thrackle(int n, std::mt19937_64& rng);

/// T_v: every chord at v plus the chord joining v's two circular neighbours.
[[nodiscard]] MaximalThrackle star_thrackle(int n, Label v);

} // namespace dncolor
