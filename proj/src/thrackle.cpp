#include "dncolor/thrackle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace dncolor {

namespace {

std::vector<Segment> normalized_edges(int n, std::span<const Segment> edges)
{
    std::vector<Segment> out(edges.begin(), edges.end());
    for (const Segment& s : out) {
        validate_segment(s, n);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool intersects_all(Segment s, std::span<const Segment> edges)
{
    return std::none_of(edges.begin(), edges.end(), [s](Segment e) { return e != s && disjoint(s, e); });
}

bool thrackle_sorted(std::span<const Segment> edges)
{
    for (std::size_t p = 0; p < edges.size(); ++p) {
        for (std::size_t q = p + 1; q < edges.size(); ++q) {
            if (disjoint(edges[p], edges[q])) {
                return false;
            }
        }
    }
    return true;
}

bool maximal_sorted(int n, std::span<const Segment> edges)
{
    for (Label a = 1; a <= n; ++a) {
        for (Label b = a + 1; b <= n; ++b) {
            const Segment s{a, b};
            if (!std::binary_search(edges.begin(), edges.end(), s) && intersects_all(s, edges)) {
                return false;
            }
        }
    }
    return true;
}

// Is u strictly inside the clockwise arc running from `from` to `to`?
bool cw_strictly_between(int n, Label from, Label to, Label u)
{
    const int span = ((to - from) % n + n) % n;
    const int offset = ((u - from) % n + n) % n;
    return offset > 0 && offset < span;
}

enum class Step { east, south };

Step step_between(Segment from, Segment to)
{
    return to.a == from.a ? Step::east : Step::south;
}

} // namespace

bool is_thrackle(int n, std::span<const Segment> edges)
{
    const auto sorted = normalized_edges(n, edges);
    return thrackle_sorted(sorted);
}

bool is_maximal_thrackle(int n, std::span<const Segment> edges)
{
    const auto sorted = normalized_edges(n, edges);
    if (!thrackle_sorted(sorted)) {
        throw DomainError("edge set is not a convex thrackle");
    }
    return maximal_sorted(n, sorted);
}

bool MaximalThrackle::on_cycle(Label v) const
{
    return v >= 1 && v <= n_ && on_cycle_[static_cast<std::size_t>(v)];
}

bool MaximalThrackle::has_edge(Segment s) const
{
    return std::binary_search(edges_.begin(), edges_.end(), s);
}

std::vector<Segment> MaximalThrackle::cycle_edges() const
{
    std::vector<Segment> out;
    for (std::size_t p = 0; p < cycle_.size(); ++p) {
        out.push_back(make_segment(cycle_[p], cycle_[(p + 1) % cycle_.size()]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

MaximalThrackle decompose(int n, std::span<const Segment> edges)
{
    if (n < 3) {
        throw DomainError("maximal thrackles with a cycle need at least 3 points");
    }
    auto sorted = normalized_edges(n, edges);
    if (!thrackle_sorted(sorted)) {
        throw DomainError("edge set is not a convex thrackle");
    }
    if (!maximal_sorted(n, sorted)) {
        throw DomainError("convex thrackle is not maximal");
    }

    const auto size = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<Label>> adjacency(size);
    for (const Segment& s : sorted) {
        adjacency[static_cast<std::size_t>(s.a)].push_back(s.b);
        adjacency[static_cast<std::size_t>(s.b)].push_back(s.a);
    }

    // 2-core by repeatedly stripping degree-1 vertices
    std::vector<int> degree(size, 0);
    std::vector<bool> removed(size, false);
    std::deque<Label> leaves;
    for (Label v = 1; v <= n; ++v) {
        degree[static_cast<std::size_t>(v)] = static_cast<int>(adjacency[static_cast<std::size_t>(v)].size());
        if (degree[static_cast<std::size_t>(v)] <= 1) {
            leaves.push_back(v);
        }
    }
    while (!leaves.empty()) {
        const Label v = leaves.front();
        leaves.pop_front();
        if (removed[static_cast<std::size_t>(v)]) {
            continue;
        }
        removed[static_cast<std::size_t>(v)] = true;
        for (Label w : adjacency[static_cast<std::size_t>(v)]) {
            if (!removed[static_cast<std::size_t>(w)] && --degree[static_cast<std::size_t>(w)] <= 1) {
                leaves.push_back(w);
            }
        }
    }

    MaximalThrackle t;
    t.n_ = n;
    t.on_cycle_.assign(size, false);
    Label start = 0;
    for (Label v = 1; v <= n; ++v) {
        if (!removed[static_cast<std::size_t>(v)]) {
            if (degree[static_cast<std::size_t>(v)] != 2) {
                throw std::logic_error("2-core of a maximal thrackle is not a cycle");
            }
            t.on_cycle_[static_cast<std::size_t>(v)] = true;
            if (start == 0) {
                start = v;
            }
        }
    }
    if (start == 0) {
        throw std::logic_error("maximal thrackle without a cycle");
    }

    auto core_neighbors = [&](Label v) {
        std::vector<Label> out;
        for (Label w : adjacency[static_cast<std::size_t>(v)]) {
            if (t.on_cycle_[static_cast<std::size_t>(w)]) {
                out.push_back(w);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    Label previous = start;
    Label current = core_neighbors(start).front();
    t.cycle_.push_back(start);
    while (current != start) {
        t.cycle_.push_back(current);
        const auto nb = core_neighbors(current);
        const Label next = nb[0] == previous ? nb[1] : nb[0];
        previous = current;
        current = next;
    }
    const auto core_size = static_cast<std::size_t>(std::count(t.on_cycle_.begin(), t.on_cycle_.end(), true));
    if (t.cycle_.size() != core_size || t.cycle_.size() % 2 == 0) {
        throw std::logic_error("cycle of a maximal thrackle is not a single odd cycle");
    }

    for (Label v = 1; v <= n; ++v) {
        if (t.on_cycle_[static_cast<std::size_t>(v)]) {
            continue;
        }
        const auto& nb = adjacency[static_cast<std::size_t>(v)];
        if (nb.size() != 1 || !t.on_cycle_[static_cast<std::size_t>(nb.front())]) {
            throw std::logic_error("vertex " + std::to_string(v) + " is not a pendant of the cycle");
        }
        t.pendant_apex_[v] = nb.front();
    }
    t.edges_ = std::move(sorted);
    return t;
}

bool in_wedge(int n, std::span<const Label> cycle, std::size_t pos, Label u)
{
    const std::size_t m = cycle.size();
    if (m < 3 || pos >= m) {
        throw DomainError("wedge needs a cycle of length at least 3");
    }
    const Label apex = cycle[pos];
    const Label x = cycle[(pos + m - 1) % m];
    const Label y = cycle[(pos + 1) % m];
    if (u == apex || u == x || u == y) {
        throw DomainError("point " + std::to_string(u) + " lies on the boundary of the wedge at " + std::to_string(apex));
    }
    if (cw_strictly_between(n, x, y, apex)) {
        return cw_strictly_between(n, y, x, u);
    }
    return cw_strictly_between(n, x, y, u);
}

Label wedge_apex(int n, std::span<const Label> cycle, Label u)
{
    if (std::find(cycle.begin(), cycle.end(), u) != cycle.end()) {
        throw DomainError("point " + std::to_string(u) + " lies on the cycle and has no wedge");
    }
    Label apex = 0;
    int hits = 0;
    for (std::size_t pos = 0; pos < cycle.size(); ++pos) {
        if (in_wedge(n, cycle, pos, u)) {
            apex = cycle[pos];
            ++hits;
        }
    }
    if (hits != 1) {
        throw DomainError("point " + std::to_string(u) + " lies in " + std::to_string(hits) + " wedges; not a thrackle cycle");
    }
    return apex;
}

Label wedge_apex(const MaximalThrackle& t, Label u)
{
    if (u < 1 || u > t.n()) {
        throw DomainError("point label out of range");
    }
    return wedge_apex(t.n(), t.cycle(), u);
}

ThracklePath::ThracklePath(int n, std::vector<Segment> cells) :
    n_(n),
    cells_(std::move(cells))
{
    if (n < 3) {
        throw DomainError("maximal thrackle paths need n >= 3");
    }
    if (cells_.empty()) {
        throw DomainError("empty path");
    }
    for (const Segment& c : cells_) {
        validate_segment(c, n);
    }
    const Label r = cells_.front().b;
    if (cells_.front().a != 1 || r < 2 || r > n - 1) {
        throw DomainError("path must start at (1,r) with 2 <= r <= n-1, got " + to_string(cells_.front()));
    }
    if (cells_.back() != Segment{r, n}) {
        throw DomainError("path starting at " + to_string(cells_.front()) + " must end at " + to_string(Segment{r, n}));
    }
    for (std::size_t p = 1; p < cells_.size(); ++p) {
        const Segment from = cells_[p - 1];
        const Segment to = cells_[p];
        const bool east = to.a == from.a && to.b == from.b + 1;
        const bool south = to.b == from.b && to.a == from.a + 1;
        if (!east && !south) {
            throw DomainError("step " + to_string(from) + " -> " + to_string(to) + " is not a unit east or south step");
        }
    }
}

std::vector<Segment> turning_cells(const ThracklePath& path)
{
    const auto& cells = path.cells();
    std::vector<Segment> out;
    for (std::size_t p = 0; p < cells.size(); ++p) {
        const Step in = p == 0 ? Step::south : step_between(cells[p - 1], cells[p]);
        const Step out_step = p + 1 == cells.size() ? Step::east : step_between(cells[p], cells[p + 1]);
        if (in != out_step) {
            out.push_back(cells[p]);
        }
    }
    return out;
}

MaximalThrackle thrackle_from_path(const ThracklePath& path)
{
    return decompose(path.n(), path.cells());
}

ThracklePath path_from_thrackle(const MaximalThrackle& t)
{
    auto cells = t.edges();
    // along a staircase a + b grows by exactly one per step
    std::sort(cells.begin(), cells.end(), [](Segment s, Segment u) {
        return std::pair(s.a + s.b, s.a) < std::pair(u.a + u.b, u.a);
    });
    return ThracklePath(t.n(), std::move(cells));
}

Segment common_edge(const MaximalThrackle& first, const MaximalThrackle& second)
{
    if (first.n() != second.n()) {
        throw DomainError("thrackles live on different point sets");
    }
    for (Label v : first.cycle()) {
        if (second.on_cycle(v)) {
            throw PreconditionError("cycles share vertex " + std::to_string(v));
        }
    }

    // Each cycle vertex of one thrackle is a pendant of the other; its arc
    // points at the apex of the wedge it sits in.
    std::map<Label, Label> arc;
    for (Label u : first.cycle()) {
        arc[u] = wedge_apex(second, u);
    }
    for (Label u : second.cycle()) {
        arc[u] = wedge_apex(first, u);
    }

    std::map<Label, std::size_t> seen_at;
    std::vector<Label> walk;
    Label current = first.cycle().front();
    while (!seen_at.contains(current)) {
        seen_at[current] = walk.size();
        walk.push_back(current);
        current = arc.at(current);
    }
    const std::size_t cycle_length = walk.size() - seen_at.at(current);
    if (cycle_length != 2) {
        throw std::logic_error("wedge arcs closed a directed cycle of length " + std::to_string(cycle_length));
    }
    const Segment shared = make_segment(current, arc.at(current));
    if (!first.has_edge(shared) || !second.has_edge(shared)) {
        throw std::logic_error("2-cycle " + to_string(shared) + " is not an edge of both thrackles");
    }
    return shared;
}

std::vector<ConflictTriple> conflict_triples(std::span<const MaximalThrackle> family)
{
    std::vector<ConflictTriple> out;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (family[i].n() != family.front().n()) {
            throw DomainError("family members live on different point sets");
        }
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            for (Label v : family[i].cycle()) {
                if (family[j].on_cycle(v)) {
                    out.push_back({v, static_cast<int>(i + 1), static_cast<int>(j + 1)});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MaximalThrackle> split_vertex(std::span<const MaximalThrackle> family, ConflictTriple triple)
{
    const auto conflicts = conflict_triples(family);
    if (std::find(conflicts.begin(), conflicts.end(), triple) == conflicts.end()) {
        throw DomainError("(" + std::to_string(triple.v) + "," + std::to_string(triple.i) + "," + std::to_string(triple.j) +
                          ") is not a conflict triple of the family");
    }
    const int n = family.front().n();
    const int grown = n + 1;
    const Label v = triple.v;
    const Label v_first = v;
    const Label v_second = v + 1;
    auto shift = [v](Label w) { return w > v ? w + 1 : w; };

    std::vector<MaximalThrackle> out;
    out.reserve(family.size());
    for (std::size_t idx = 0; idx < family.size(); ++idx) {
        const MaximalThrackle& t = family[idx];
        const bool is_j = static_cast<int>(idx + 1) == triple.j;
        std::vector<Segment> edges;
        edges.reserve(t.edges().size() + 1);

        if (t.on_cycle(v)) {
            // v becomes v' everywhere, or v'' for member j
            const Label image = is_j ? v_second : v_first;
            const Label newcomer = is_j ? v_first : v_second;
            auto relabel = [&](Label w) { return w == v ? image : shift(w); };
            for (const Segment& e : t.edges()) {
                edges.push_back(make_segment(relabel(e.a), relabel(e.b)));
            }
            std::vector<Label> cycle;
            for (Label w : t.cycle()) {
                cycle.push_back(relabel(w));
            }
            edges.push_back(make_segment(wedge_apex(grown, cycle, newcomer), newcomer));
        } else {
            // v is a pendant: both halves hang off its old apex
            const Label apex = t.pendant_apex().at(v);
            for (const Segment& e : t.edges()) {
                if (e.has_endpoint(v)) {
                    continue;
                }
                edges.push_back(make_segment(shift(e.a), shift(e.b)));
            }
            edges.push_back(make_segment(shift(apex), v_first));
            edges.push_back(make_segment(shift(apex), v_second));
        }

        if (!is_thrackle(grown, edges)) {
            throw std::logic_error("vertex splitting broke the thrackle property of member " + std::to_string(idx + 1));
        }
        out.push_back(decompose(grown, edges));
    }
    return out;
}

MaximalThrackle extend_to_maximal(int n, std::span<const Segment> edges)
{
    auto current = normalized_edges(n, edges);
    if (!thrackle_sorted(current)) {
        throw DomainError("edge set is not a convex thrackle");
    }
    for (Label a = 1; a <= n; ++a) {
        for (Label b = a + 1; b <= n; ++b) {
            const Segment s{a, b};
            if (!std::binary_search(current.begin(), current.end(), s) && intersects_all(s, current)) {
                current.insert(std::upper_bound(current.begin(), current.end(), s), s);
            }
        }
    }
    return decompose(n, current);
}

ThracklePath random_maximal_path(int n, std::mt19937_64& rng)
{
    if (n < 3) {
        throw DomainError("maximal thrackle paths need n >= 3");
    }
    const int r = std::uniform_int_distribution<int>(2, n - 1)(rng);
    const int steps = n - 1;
    const int south_steps = r - 1;
    std::vector<int> positions(static_cast<std::size_t>(steps));
    for (int p = 0; p < steps; ++p) {
        positions[static_cast<std::size_t>(p)] = p;
    }
    std::vector<bool> south(static_cast<std::size_t>(steps));
    while (true) {
        std::shuffle(positions.begin(), positions.end(), rng);
        std::fill(south.begin(), south.end(), false);
        for (int p = 0; p < south_steps; ++p) {
            south[static_cast<std::size_t>(positions[static_cast<std::size_t>(p)])] = true;
        }
        // the only staircase leaving Omega runs south through (r,r)
        const bool through_corner = std::all_of(south.begin(), south.begin() + south_steps, [](bool s) { return s; });
        if (!through_corner) {
            break;
        }
    }
    std::vector<Segment> cells{{1, r}};
    for (bool s : south) {
        const Segment last = cells.back();
        cells.push_back(s ? Segment{last.a + 1, last.b} : Segment{last.a, last.b + 1});
    }
    return ThracklePath(n, std::move(cells));
}

MaximalThrackle random_maximal_thrackle(int n, std::mt19937_64& rng)
{
    return thrackle_from_path(random_maximal_path(n, rng));
}

MaximalThrackle star_thrackle(int n, Label v)
{
    if (n < 3 || v < 1 || v > n) {
        throw DomainError("star thrackle needs n >= 3 and an apex in [1, n]");
    }
    std::vector<Segment> edges;
    for (Label w = 1; w <= n; ++w) {
        if (w != v) {
            edges.push_back(make_segment(v, w));
        }
    }
    const Label before = v == 1 ? n : v - 1;
    const Label after = v == n ? 1 : v + 1;
    edges.push_back(make_segment(before, after));
    return decompose(n, edges);
}

} // namespace dncolor
