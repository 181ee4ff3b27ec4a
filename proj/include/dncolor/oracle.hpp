#pragma once

// Independent ground truth for small instances: exact chromatic number by
// branch and bound, maximal independent set enumeration, and exhaustive
// enumeration of maximal thrackle paths.

#include "dncolor/convex_core.hpp"
#include "dncolor/thrackle.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

namespace dncolor {

/// Graph on at most 64 vertices with one adjacency word per vertex.
class SmallGraph
{
public:
    static constexpr int max_vertices = 64;

    explicit SmallGraph(int vertices);
    [[nodiscard]] static SmallGraph from_dn(const DnGraph& g);

    [[nodiscard]] int size() const { return size_; }
    [[nodiscard]] std::uint64_t all() const;
    [[nodiscard]] std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] bool adjacent(int u, int v) const { return ((neighbors(u) >> v) & 1U) != 0; }
    [[nodiscard]] std::size_t edge_count() const;
    void add_edge(int u, int v);
    [[nodiscard]] SmallGraph complement() const;

private:
    int size_;
    std::vector<std::uint64_t> adj_;
};

[[nodiscard]] SmallGraph complete_graph(int vertices);

/// Vertex set of one maximum clique.
[[nodiscard]] std::uint64_t maximum_clique(const SmallGraph& g);

/// Largest set of pairwise adjacent vertices' size.
[[nodiscard]] int clique_number(const SmallGraph& g);

struct ChromaticResult
{
    int lower = 0;
    int upper = 0;
    /// A proper colouring with `upper` colours, colours numbered from 0.
    std::vector<int> coloring;

    [[nodiscard]] bool exact() const { return lower == upper; }
};

/// Exact chromatic number by branch and bound: clique lower bound, DSATUR
/// upper bound, then DSATUR-ordered backtracking over k-colourability for k
/// from the lower bound upwards with the clique precoloured. When the budget
/// runs out the result is the proven interval [lower, upper].
/// `workers` > 1 splits the search tree; the value does not depend on it.
[[nodiscard]] ChromaticResult chromatic_number_exact(const SmallGraph& g, std::chrono::milliseconds budget,
                                                     unsigned workers = 1);

/// True iff `coloring` gives adjacent vertices different colours.
[[nodiscard]] bool is_proper_coloring(const SmallGraph& g, const std::vector<int>& coloring);

/// Bron-Kerbosch with pivoting on the complement.
void for_each_maximal_independent_set(const SmallGraph& g, const std::function<void(std::uint64_t)>& visit);
[[nodiscard]] std::vector<std::uint64_t> enumerate_maximal_independent_sets(const SmallGraph& g);

/// Every staircase from (1,r) to (r,n), r ascending, cells in lexicographic
/// order (east before south).
void for_each_maximal_path(int n, const std::function<void(const ThracklePath&)>& visit);
[[nodiscard]] std::vector<ThracklePath> enumerate_maximal_paths(int n);

} // namespace dncolor
