#include "dncolor/coloring.hpp"
#include "dncolor/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

using namespace dncolor;
using namespace std::chrono_literals;

namespace {

// Plain backtracking in index order, trying k = 0, 1, 2, ...
bool naive_colorable(const SmallGraph& g, int k, std::vector<int>& colour, int v)
{
    if (v == g.size()) {
        return true;
    }
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) {
            ok = !(g.adjacent(u, v) && colour[static_cast<std::size_t>(u)] == c);
        }
        if (ok) {
            colour[static_cast<std::size_t>(v)] = c;
            if (naive_colorable(g, k, colour, v + 1)) {
                return true;
            }
        }
    }
    return false;
}

int naive_chromatic(const SmallGraph& g)
{
    std::vector<int> colour(static_cast<std::size_t>(g.size()), -1);
    int k = 0;
    while (!naive_colorable(g, k, colour, 0)) {
        ++k;
    }
    return k;
}

SmallGraph random_graph(int vertices, double density, std::mt19937_64& rng)
{
    SmallGraph g(vertices);
    std::bernoulli_distribution edge(density);
    for (int u = 0; u < vertices; ++u) {
        for (int v = u + 1; v < vertices; ++v) {
            if (edge(rng)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

std::set<std::uint64_t> path_masks(int n)
{
    const Omega omega(n);
    std::set<std::uint64_t> out;
    for (const ThracklePath& p : enumerate_maximal_paths(n)) {
        std::uint64_t mask = 0;
        for (const Segment& s : p.cells()) {
            mask |= std::uint64_t{1} << omega.index_of(s);
        }
        out.insert(mask);
    }
    return out;
}

} // namespace

TEST_CASE("chromatic number of D_n matches the formula")
{
    CHECK(chromatic_number_exact(SmallGraph::from_dn(build_dn(3)), 10s).upper == 1);
    for (int n = 2; n <= 10; ++n) {
        const SmallGraph g = SmallGraph::from_dn(build_dn(n));
        const ChromaticResult r = chromatic_number_exact(g, 60s, 2);
        INFO("n=" << n);
        REQUIRE(r.exact());
        CHECK(r.upper == chi_formula(n));
        CHECK(is_proper_coloring(g, r.coloring));
        CHECK(*std::ranges::max_element(r.coloring) + 1 == r.upper);
    }
}

TEST_CASE("exact chromatic number agrees with naive backtracking on random graphs")
{
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        const int vertices = std::uniform_int_distribution<int>(1, 14)(rng);
        const double density = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
        const SmallGraph g = random_graph(vertices, density, rng);
        const ChromaticResult r = chromatic_number_exact(g, 10s, 1 + static_cast<unsigned>(trial % 3));
        REQUIRE(r.exact());
        CHECK(r.upper == naive_chromatic(g));
        CHECK(is_proper_coloring(g, r.coloring));
    }
}

TEST_CASE("the result does not depend on the worker count")
{
    const SmallGraph g = SmallGraph::from_dn(build_dn(9));
    const ChromaticResult one = chromatic_number_exact(g, 30s, 1);
    for (unsigned workers : {2U, 4U, 8U}) {
        const ChromaticResult many = chromatic_number_exact(g, 30s, workers);
        CHECK(many.lower == one.lower);
        CHECK(many.upper == one.upper);
    }
}

TEST_CASE("an exhausted budget yields an interval containing the answer")
{
    const SmallGraph g = SmallGraph::from_dn(build_dn(11));
    const ChromaticResult r = chromatic_number_exact(g, 0ms);
    CHECK(r.lower <= chi_formula(11));
    CHECK(r.upper >= chi_formula(11));
    CHECK(is_proper_coloring(g, r.coloring));
}

TEST_CASE("clique number of D_n is floor(n/2)")
{
    for (int n = 2; n <= 11; ++n) {
        const SmallGraph g = SmallGraph::from_dn(build_dn(n));
        CHECK(clique_number(g) == n / 2);
        const std::uint64_t clique = maximum_clique(g);
        for (int u = 0; u < g.size(); ++u) {
            for (int v = u + 1; v < g.size(); ++v) {
                if (((clique >> u) & 1U) && ((clique >> v) & 1U)) {
                    CHECK(g.adjacent(u, v));
                }
            }
        }
    }
}

TEST_CASE("maximal independent sets: trivial graphs")
{
    for (int m = 1; m <= 6; ++m) {
        const SmallGraph empty(m);
        CHECK(enumerate_maximal_independent_sets(empty) == std::vector<std::uint64_t>{empty.all()});
        const auto singles = enumerate_maximal_independent_sets(complete_graph(m));
        CHECK(singles.size() == static_cast<std::size_t>(m));
        for (std::uint64_t s : singles) {
            CHECK(std::popcount(s) == 1);
        }
    }
}

TEST_CASE("maximal independent sets of D_n are exactly the staircase paths")
{
    for (int n = 3; n <= 8; ++n) {
        const auto sets = enumerate_maximal_independent_sets(SmallGraph::from_dn(build_dn(n)));
        const std::set<std::uint64_t> mis(sets.begin(), sets.end());
        CHECK(mis.size() == sets.size());
        CHECK(mis == path_masks(n));
    }
}

TEST_CASE("maximal path enumeration")
{
    CHECK(enumerate_maximal_paths(3).size() == 1);
    for (int n = 3; n <= 12; ++n) {
        const auto paths = enumerate_maximal_paths(n);
        CHECK(paths.size() == (std::size_t{1} << (n - 1)) - static_cast<std::size_t>(n));
        for (std::size_t x = 1; x < paths.size(); ++x) {
            const bool ordered = paths[x - 1].r() < paths[x].r() ||
                                 (paths[x - 1].r() == paths[x].r() && paths[x - 1].cells() < paths[x].cells());
            CHECK(ordered);
        }
    }
    for (const ThracklePath& p : enumerate_maximal_paths(7)) {
        CHECK(is_maximal_thrackle(7, p.cells()));
    }
}

TEST_CASE("SmallGraph basics")
{
    SmallGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.complement().edge_count() == 4);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_THROWS((void)SmallGraph(65));
    CHECK(SmallGraph::from_dn(build_dn(5)).edge_count() == 10);
}
