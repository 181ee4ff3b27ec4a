#include "dncolor/bounds.hpp"

#include "dncolor/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace dncolor {

std::int64_t union_edge_bound(int n, int k)
{
    if (n < 3 || k < 1) {
        throw DomainError("union_edge_bound needs n >= 3 and k >= 1");
    }
    return std::int64_t{k} * n - choose2(k);
}

std::int64_t union_edge_target(int n, int k)
{
    return std::min(choose2(n), union_edge_bound(n, k));
}

std::size_t union_edge_count(const ThrackleFamily& family)
{
    std::set<Segment> edges;
    for (const MaximalThrackle& t : family.members) {
        edges.insert(t.edges().begin(), t.edges().end());
    }
    return edges.size();
}

UnionBoundReport verify_union_bound(const ThrackleFamily& family)
{
    if (family.members.empty()) {
        throw DomainError("family has no members");
    }
    for (const MaximalThrackle& t : family.members) {
        if (t.n() != family.n || !is_maximal_thrackle(family.n, t.edges())) {
            throw DomainError("family member is not a maximal thrackle on " + std::to_string(family.n) + " points");
        }
    }
    UnionBoundReport report;
    report.union_edges = union_edge_count(family);
    report.bound = union_edge_bound(family.n, static_cast<int>(family.members.size()));
    report.satisfied = static_cast<std::int64_t>(report.union_edges) <= report.bound;
    if (!report.satisfied) {
        throw std::logic_error("union of " + std::to_string(family.members.size()) + " maximal thrackles has " +
                               std::to_string(report.union_edges) + " edges, above the bound " +
                               std::to_string(report.bound));
    }
    return report;
}

ThrackleFamily extremal_family(int n, int k)
{
    if (k < 1 || n < 2 * k || n < 3) {
        throw DomainError("extremal family needs k >= 1, n >= 2k and n >= 3 (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
    }
    ThrackleFamily family;
    family.n = n;
    for (int idx = 0; idx < k; ++idx) {
        family.members.push_back(star_thrackle(n, 2 * idx + 1));
    }
    return family;
}

ExhaustiveResult exhaustive_union_max(int n, int k, std::chrono::milliseconds budget, unsigned workers)
{
    if (n < 3 || n > 11 || k < 1) {
        throw DomainError("exhaustive_union_max needs 3 <= n <= 11 and k >= 1");
    }
    using Clock = std::chrono::steady_clock;
    const auto deadline = Clock::now() + budget;
    const Omega omega(n);

    std::vector<std::uint64_t> masks;
    for_each_maximal_path(n, [&](const ThracklePath& p) {
        std::uint64_t mask = 0;
        for (const Segment& c : p.cells()) {
            mask |= std::uint64_t{1} << omega.index_of(c);
        }
        masks.push_back(mask);
    });
    if (static_cast<std::size_t>(k) > masks.size()) {
        throw DomainError("only " + std::to_string(masks.size()) + " maximal thrackles exist on " + std::to_string(n) +
                          " points");
    }

    std::atomic<std::int64_t> best{0};
    std::atomic<std::uint64_t> checked{0};
    std::atomic<bool> timed_out{false};
    std::atomic<std::size_t> next_first{0};

    auto raise_best = [&best](std::int64_t value) {
        std::int64_t seen = best.load();
        while (value > seen && !best.compare_exchange_weak(seen, value)) {
        }
    };

    auto worker = [&] {
        std::uint64_t local_checked = 0;
        std::uint64_t nodes = 0;
        auto recurse = [&](auto&& self, std::size_t start, int chosen, std::uint64_t mask) -> void {
            if (chosen == k) {
                ++local_checked;
                raise_best(std::popcount(mask));
                return;
            }
            if ((++nodes & 4095U) == 0 && Clock::now() >= deadline) {
                timed_out.store(true);
            }
            if (timed_out.load(std::memory_order_relaxed)) {
                return;
            }
            // each further member adds at most n edges
            if (std::popcount(mask) + std::int64_t{k - chosen} * n <= best.load(std::memory_order_relaxed)) {
                return;
            }
            for (std::size_t idx = start; idx + static_cast<std::size_t>(k - chosen) <= masks.size(); ++idx) {
                self(self, idx + 1, chosen + 1, mask | masks[idx]);
            }
        };
        while (!timed_out.load()) {
            const std::size_t first = next_first.fetch_add(1);
            if (first + static_cast<std::size_t>(k) > masks.size()) {
                break;
            }
            recurse(recurse, first + 1, 1, masks[first]);
        }
        checked.fetch_add(local_checked);
    };

    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back(worker);
        }
    }

    ExhaustiveResult result;
    result.max_union = best.load();
    result.complete = !timed_out.load();
    result.subsets_checked = checked.load();
    return result;
}

} // namespace dncolor
