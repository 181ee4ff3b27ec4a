#include "dncolor/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>

namespace dncolor {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t bit(int v)
{
    return std::uint64_t{1} << v;
}

constexpr std::uint64_t low_bits(int count)
{
    return count >= 64 ? ~std::uint64_t{0} : bit(count) - 1;
}

class CliqueSearch
{
public:
    explicit CliqueSearch(const SmallGraph& g) :
        g_(g)
    {
    }

    std::uint64_t run()
    {
        expand(0, 0, g_.all());
        return best_;
    }

private:
    // Greedy colouring of the candidates bounds how far the clique can grow.
    void expand(std::uint64_t clique, int size, std::uint64_t candidates)
    {
        std::vector<std::pair<int, int>> order;
        std::uint64_t uncolored = candidates;
        int color = 0;
        while (uncolored != 0) {
            ++color;
            std::uint64_t open = uncolored;
            while (open != 0) {
                const int v = std::countr_zero(open);
                open &= ~bit(v) & ~g_.neighbors(v);
                uncolored &= ~bit(v);
                order.emplace_back(v, color);
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const auto [v, bound] = *it;
            if (size + bound <= best_size_) {
                return;
            }
            const std::uint64_t grown = clique | bit(v);
            const std::uint64_t rest = candidates & g_.neighbors(v);
            if (rest == 0) {
                if (size + 1 > best_size_) {
                    best_ = grown;
                    best_size_ = size + 1;
                }
            } else {
                expand(grown, size + 1, rest);
            }
            candidates &= ~bit(v);
        }
    }

    const SmallGraph& g_;
    std::uint64_t best_ = 0;
    int best_size_ = 0;
};

std::vector<int> dsatur_greedy(const SmallGraph& g)
{
    const int n = g.size();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<std::uint64_t> saturation(static_cast<std::size_t>(n), 0);
    std::uint64_t uncolored = g.all();
    while (uncolored != 0) {
        int pick = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (std::uint64_t open = uncolored; open != 0; open &= open - 1) {
            const int v = std::countr_zero(open);
            const int sat = std::popcount(saturation[static_cast<std::size_t>(v)]);
            const int deg = std::popcount(g.neighbors(v) & uncolored);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        const int c = std::countr_one(saturation[static_cast<std::size_t>(pick)]);
        color[static_cast<std::size_t>(pick)] = c;
        uncolored &= ~bit(pick);
        for (std::uint64_t nb = g.neighbors(pick); nb != 0; nb &= nb - 1) {
            saturation[static_cast<std::size_t>(std::countr_zero(nb))] |= bit(c);
        }
    }
    return color;
}

enum class Outcome { found, exhausted, aborted };

// Backtracking search for a colouring with at most k colours, branching on
// the most saturated vertex. A colour index is only opened once all lower
// indices are in use, which removes colour permutations.
class KColoring
{
public:
    KColoring(const SmallGraph& g, int k, Clock::time_point deadline, const std::atomic<bool>& stop) :
        g_(g),
        k_(k),
        deadline_(deadline),
        stop_(stop),
        color_(static_cast<std::size_t>(g.size()), -1),
        counts_(static_cast<std::size_t>(g.size()) * 64, 0),
        saturation_(static_cast<std::size_t>(g.size()), 0),
        uncolored_(g.all())
    {
    }

    [[nodiscard]] const std::vector<int>& coloring() const { return color_; }

    void assign(int v, int c)
    {
        color_[static_cast<std::size_t>(v)] = c;
        uncolored_ &= ~bit(v);
        if (c == used_) {
            ++used_;
        }
        ++use_count_[static_cast<std::size_t>(c)];
        for (std::uint64_t nb = g_.neighbors(v); nb != 0; nb &= nb - 1) {
            const auto w = static_cast<std::size_t>(std::countr_zero(nb));
            if (counts_[w * 64 + static_cast<std::size_t>(c)]++ == 0) {
                saturation_[w] |= bit(c);
            }
        }
    }

    void unassign(int v, int c)
    {
        color_[static_cast<std::size_t>(v)] = -1;
        uncolored_ |= bit(v);
        if (--use_count_[static_cast<std::size_t>(c)] == 0 && c == used_ - 1) {
            --used_;
        }
        for (std::uint64_t nb = g_.neighbors(v); nb != 0; nb &= nb - 1) {
            const auto w = static_cast<std::size_t>(std::countr_zero(nb));
            if (--counts_[w * 64 + static_cast<std::size_t>(c)] == 0) {
                saturation_[w] &= ~bit(c);
            }
        }
    }

    // Most saturated uncoloured vertex, ties broken by uncoloured degree; -1 when done.
    [[nodiscard]] int select() const
    {
        int pick = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (std::uint64_t open = uncolored_; open != 0; open &= open - 1) {
            const int v = std::countr_zero(open);
            const int sat = std::popcount(saturation_[static_cast<std::size_t>(v)]);
            if (sat < best_sat) {
                continue;
            }
            const int deg = std::popcount(g_.neighbors(v) & uncolored_);
            if (sat > best_sat || deg > best_deg) {
                pick = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return pick;
    }

    [[nodiscard]] std::uint64_t available(int v) const
    {
        return ~saturation_[static_cast<std::size_t>(v)] & low_bits(std::min(used_ + 1, k_));
    }

    Outcome search()
    {
        if ((++nodes_ & 1023U) == 0 && (stop_.load(std::memory_order_relaxed) || Clock::now() >= deadline_)) {
            return Outcome::aborted;
        }
        const int v = select();
        if (v < 0) {
            return Outcome::found;
        }
        for (std::uint64_t open = available(v); open != 0; open &= open - 1) {
            const int c = std::countr_zero(open);
            assign(v, c);
            const Outcome result = search();
            if (result != Outcome::exhausted) {
                return result;
            }
            unassign(v, c);
        }
        return Outcome::exhausted;
    }

private:
    const SmallGraph& g_;
    int k_;
    Clock::time_point deadline_;
    const std::atomic<bool>& stop_;
    std::vector<int> color_;
    std::vector<std::uint8_t> counts_;
    std::vector<std::uint64_t> saturation_;
    std::uint64_t uncolored_;
    std::array<int, 64> use_count_{};
    int used_ = 0;
    std::uint64_t nodes_ = 0;
};

using Assignment = std::vector<std::pair<int, int>>;

struct Decision
{
    Outcome outcome = Outcome::exhausted;
    std::vector<int> coloring;
};

// Is g k-colourable with the clique vertices fixed to colours 0, 1, ...?
Decision decide_k_colorable(const SmallGraph& g, int k, const std::vector<int>& clique, Clock::time_point deadline,
                            unsigned workers)
{
    const std::atomic<bool> never{false};
    Assignment root;
    for (std::size_t idx = 0; idx < clique.size(); ++idx) {
        root.emplace_back(clique[idx], static_cast<int>(idx));
    }

    // Expand the top of the search tree breadth-first into independent subproblems.
    std::vector<Assignment> frontier{root};
    const std::size_t target = workers > 1 ? static_cast<std::size_t>(workers) * 8 : 1;
    while (frontier.size() < target) {
        std::vector<Assignment> next;
        bool grew = false;
        for (const Assignment& task : frontier) {
            KColoring probe(g, k, deadline, never);
            for (const auto& [v, c] : task) {
                probe.assign(v, c);
            }
            const int v = probe.select();
            if (v < 0) {
                return {Outcome::found, probe.coloring()};
            }
            for (std::uint64_t open = probe.available(v); open != 0; open &= open - 1) {
                Assignment child = task;
                child.emplace_back(v, std::countr_zero(open));
                next.push_back(std::move(child));
            }
            grew = true;
        }
        frontier = std::move(next);
        if (frontier.empty() || !grew) {
            break;
        }
    }
    if (frontier.empty()) {
        return {Outcome::exhausted, {}};
    }

    std::atomic<std::size_t> next_task{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> aborted{false};
    std::mutex result_mutex;
    std::optional<std::vector<int>> solution;

    auto worker = [&] {
        while (!stop.load()) {
            const std::size_t idx = next_task.fetch_add(1);
            if (idx >= frontier.size()) {
                return;
            }
            KColoring search(g, k, deadline, stop);
            for (const auto& [v, c] : frontier[idx]) {
                search.assign(v, c);
            }
            const Outcome result = search.search();
            if (result == Outcome::found) {
                const std::lock_guard lock(result_mutex);
                if (!solution) {
                    solution = search.coloring();
                }
                stop.store(true);
            } else if (result == Outcome::aborted && !stop.load()) {
                aborted.store(true);
                stop.store(true);
            }
        }
    };

    const unsigned thread_count = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(frontier.size())));
    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < thread_count; ++t) {
            pool.emplace_back(worker);
        }
    }

    if (solution) {
        return {Outcome::found, *solution};
    }
    return {aborted.load() ? Outcome::aborted : Outcome::exhausted, {}};
}

} // namespace

SmallGraph::SmallGraph(int vertices) :
    size_(vertices),
    adj_(static_cast<std::size_t>(std::max(vertices, 0)), 0)
{
    if (vertices < 0 || vertices > max_vertices) {
        throw DomainError("SmallGraph holds between 0 and 64 vertices");
    }
}

SmallGraph SmallGraph::from_dn(const DnGraph& g)
{
    if (g.vertex_count() > static_cast<std::size_t>(max_vertices)) {
        throw DomainError("D_" + std::to_string(g.n()) + " has more than 64 vertices");
    }
    SmallGraph out(static_cast<int>(g.vertex_count()));
    for (int u = 0; u < out.size(); ++u) {
        for (std::size_t v : g.neighbors(static_cast<std::size_t>(u))) {
            out.adj_[static_cast<std::size_t>(u)] |= bit(static_cast<int>(v));
        }
    }
    return out;
}

std::uint64_t SmallGraph::all() const
{
    return low_bits(size_);
}

std::size_t SmallGraph::edge_count() const
{
    std::size_t twice = 0;
    for (std::uint64_t row : adj_) {
        twice += static_cast<std::size_t>(std::popcount(row));
    }
    return twice / 2;
}

void SmallGraph::add_edge(int u, int v)
{
    if (u == v || u < 0 || v < 0 || u >= size_ || v >= size_) {
        throw DomainError("invalid edge endpoints");
    }
    adj_[static_cast<std::size_t>(u)] |= bit(v);
    adj_[static_cast<std::size_t>(v)] |= bit(u);
}

SmallGraph SmallGraph::complement() const
{
    SmallGraph out(size_);
    for (int v = 0; v < size_; ++v) {
        out.adj_[static_cast<std::size_t>(v)] = ~adj_[static_cast<std::size_t>(v)] & all() & ~bit(v);
    }
    return out;
}

SmallGraph complete_graph(int vertices)
{
    return SmallGraph(vertices).complement();
}

std::uint64_t maximum_clique(const SmallGraph& g)
{
    return CliqueSearch(g).run();
}

int clique_number(const SmallGraph& g)
{
    return std::popcount(maximum_clique(g));
}

bool is_proper_coloring(const SmallGraph& g, const std::vector<int>& coloring)
{
    if (coloring.size() != static_cast<std::size_t>(g.size())) {
        return false;
    }
    for (int u = 0; u < g.size(); ++u) {
        if (coloring[static_cast<std::size_t>(u)] < 0) {
            return false;
        }
        for (std::uint64_t nb = g.neighbors(u); nb != 0; nb &= nb - 1) {
            if (coloring[static_cast<std::size_t>(u)] == coloring[static_cast<std::size_t>(std::countr_zero(nb))]) {
                return false;
            }
        }
    }
    return true;
}

ChromaticResult chromatic_number_exact(const SmallGraph& g, std::chrono::milliseconds budget, unsigned workers)
{
    ChromaticResult result;
    if (g.size() == 0) {
        return result;
    }
    const auto deadline = Clock::now() + budget;

    std::vector<int> clique;
    for (std::uint64_t q = maximum_clique(g); q != 0; q &= q - 1) {
        clique.push_back(std::countr_zero(q));
    }
    result.lower = static_cast<int>(clique.size());
    result.coloring = dsatur_greedy(g);
    result.upper = *std::max_element(result.coloring.begin(), result.coloring.end()) + 1;

    while (result.lower < result.upper) {
        Decision d = decide_k_colorable(g, result.lower, clique, deadline, std::max(1U, workers));
        if (d.outcome == Outcome::aborted) {
            break;
        }
        if (d.outcome == Outcome::found) {
            result.upper = result.lower;
            result.coloring = std::move(d.coloring);
        } else {
            ++result.lower;
        }
    }
    return result;
}

void for_each_maximal_independent_set(const SmallGraph& g, const std::function<void(std::uint64_t)>& visit)
{
    const SmallGraph comp = g.complement();
    // cliques of the complement
    auto recurse = [&](auto&& self, std::uint64_t chosen, std::uint64_t candidates, std::uint64_t excluded) -> void {
        if (candidates == 0 && excluded == 0) {
            visit(chosen);
            return;
        }
        int pivot = -1;
        int best = -1;
        for (std::uint64_t open = candidates | excluded; open != 0; open &= open - 1) {
            const int u = std::countr_zero(open);
            const int score = std::popcount(candidates & comp.neighbors(u));
            if (score > best) {
                best = score;
                pivot = u;
            }
        }
        for (std::uint64_t open = candidates & ~comp.neighbors(pivot); open != 0; open &= open - 1) {
            const int v = std::countr_zero(open);
            self(self, chosen | bit(v), candidates & comp.neighbors(v), excluded & comp.neighbors(v));
            candidates &= ~bit(v);
            excluded |= bit(v);
        }
    };
    if (g.size() == 0) {
        visit(0);
        return;
    }
    recurse(recurse, 0, g.all(), 0);
}

std::vector<std::uint64_t> enumerate_maximal_independent_sets(const SmallGraph& g)
{
    std::vector<std::uint64_t> out;
    for_each_maximal_independent_set(g, [&out](std::uint64_t s) { out.push_back(s); });
    return out;
}

void for_each_maximal_path(int n, const std::function<void(const ThracklePath&)>& visit)
{
    if (n < 3) {
        return;
    }
    std::vector<Segment> cells;
    auto walk = [&](auto&& self, int r) -> void {
        const Segment here = cells.back();
        if (here == Segment{r, n}) {
            visit(ThracklePath(n, cells));
            return;
        }
        if (here.b < n) {
            cells.push_back({here.a, here.b + 1});
            self(self, r);
            cells.pop_back();
        }
        if (here.a < r && here.a + 1 < here.b) {
            cells.push_back({here.a + 1, here.b});
            self(self, r);
            cells.pop_back();
        }
    };
    for (int r = 2; r <= n - 1; ++r) {
        cells.assign(1, Segment{1, r});
        walk(walk, r);
    }
}

std::vector<ThracklePath> enumerate_maximal_paths(int n)
{
    std::vector<ThracklePath> out;
    for_each_maximal_path(n, [&out](const ThracklePath& p) { out.push_back(p); });
    return out;
}

} // namespace dncolor
