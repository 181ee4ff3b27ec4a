#include "dncolor/coloring.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace dncolor {

std::int64_t isqrt(std::int64_t value)
{
    if (value < 0) {
        throw DomainError("isqrt of a negative number");
    }
    if (value < 2) {
        return value;
    }
    // Newton iteration from above converges monotonically to the floor
    const auto v = static_cast<std::uint64_t>(value);
    std::uint64_t x = v;
    std::uint64_t y = x / 2 + x % 2;
    while (y < x) {
        x = y;
        y = (x + v / x) / 2;
    }
    return static_cast<std::int64_t>(x);
}

bool is_triangular(std::int64_t value)
{
    if (value < 1) {
        return false;
    }
    const std::int64_t k = triangular_k(value);
    return choose2(k + 1) == value;
}

std::int64_t triangular_k(std::int64_t n)
{
    if (n < 1) {
        throw DomainError("triangular_k needs n >= 1");
    }
    if (n > (std::numeric_limits<std::int64_t>::max() - 1) / 8) {
        throw DomainError("triangular_k argument too large");
    }
    // largest k with C(k+1,2) <= n, by bisection on the defining inequality
    std::int64_t lo = 1;
    std::int64_t hi = 1;
    while (choose2(hi + 1) <= n) {
        hi *= 2;
    }
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (choose2(mid + 1) <= n) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

std::int64_t chi_formula(std::int64_t n)
{
    if (n < 0) {
        throw DomainError("chi_formula needs n >= 0");
    }
    if (n > (std::numeric_limits<std::int64_t>::max() - 1) / 8) {
        throw DomainError("chi_formula argument too large");
    }
    return n - (isqrt(8 * n + 1) - 1) / 2;
}

IntervalPartition interval_partition(std::int64_t k)
{
    if (k < 1) {
        throw DomainError("interval blocks start at k = 1");
    }
    return {k, choose2(k) + 1, choose2(k + 1)};
}

IntervalPartition block_of(std::int64_t i)
{
    if (i < 1) {
        throw DomainError("block_of needs i >= 1");
    }
    return interval_partition(i == 1 ? 1 : triangular_k(i - 1) + 1);
}

PathDescriptor path_P(std::int64_t i)
{
    if (i < 2 || is_triangular(i)) {
        throw DomainError("no path P_" + std::to_string(i) + " exists (index must be a non-triangular integer >= 2)");
    }
    const IntervalPartition block = block_of(i);
    const std::int64_t slack = block.last - i;
    PathDescriptor p;
    p.index_ = i;
    p.turn_row_ = choose2(slack + 1);
    return p;
}

bool PathDescriptor::contains(Segment cell) const
{
    const std::int64_t a = cell.a;
    const std::int64_t b = cell.b;
    if (b == index_) {
        return 1 <= a && a <= turn_row_;
    }
    if (b == index_ + 1) {
        return turn_row_ <= a && a <= index_;
    }
    return a == index_ && b >= index_ + 2;
}

std::vector<Segment> PathDescriptor::cells_up_to(int n) const
{
    std::vector<Segment> out;
    const auto i = static_cast<Label>(index_);
    const auto m = static_cast<Label>(turn_row_);
    for (Label a = 1; a <= m && i <= n; ++a) {
        out.push_back({a, i});
    }
    for (Label a = m; a <= i && i + 1 <= n; ++a) {
        out.push_back({a, i + 1});
    }
    for (Label b = i + 2; b <= n; ++b) {
        out.push_back({i, b});
    }
    return out;
}

std::optional<ThracklePath> RestrictedPath::as_thrackle_path(int n) const
{
    if (!maximal) {
        return std::nullopt;
    }
    return ThracklePath(n, cells);
}

RestrictedPath restrict_path(std::int64_t i, int n)
{
    if (i > n) {
        throw DomainError("P_" + std::to_string(i) + " does not meet Omega_" + std::to_string(n) + " in a full column");
    }
    const PathDescriptor p = path_P(i);
    RestrictedPath out;
    out.index = i;
    out.cells = p.cells_up_to(n);
    const Label r = out.cells.front().b;
    out.maximal = n >= 3 && r <= n - 1 && out.cells.back() == Segment{r, n};
    return out;
}

std::vector<RestrictedPath> path_cover(int n)
{
    std::vector<RestrictedPath> out;
    for (std::int64_t i = 2; i <= n; ++i) {
        if (!is_triangular(i)) {
            out.push_back(restrict_path(i, n));
        }
    }
    return out;
}

ColoringCertificate optimal_coloring(int n)
{
    if (n < 0) {
        throw DomainError("optimal_coloring needs n >= 0");
    }
    ColoringCertificate cert;
    cert.n = n;
    const Omega omega(n);
    std::vector<bool> taken(omega.size(), false);
    for (const RestrictedPath& path : path_cover(n)) {
        std::vector<Segment> cls;
        for (const Segment& cell : path.cells) {
            const std::size_t idx = omega.index_of(cell);
            if (!taken[idx]) {
                taken[idx] = true;
                cls.push_back(cell);
            }
        }
        std::sort(cls.begin(), cls.end());
        cert.classes.push_back(std::move(cls));
        cert.class_labels.push_back(path.index);
    }
    return cert;
}

ColoringVerdict verify_coloring(const ColoringCertificate& cert)
{
    if (cert.n < 0) {
        throw StructureError("certificate has negative n");
    }
    if (!cert.class_labels.empty() && cert.class_labels.size() != cert.classes.size()) {
        throw StructureError("certificate has " + std::to_string(cert.classes.size()) + " classes but " +
                             std::to_string(cert.class_labels.size()) + " class labels");
    }
    const Omega omega(cert.n);
    for (std::size_t c = 0; c < cert.classes.size(); ++c) {
        for (std::size_t p = 0; p < cert.classes[c].size(); ++p) {
            const Segment s = cert.classes[c][p];
            if (!omega.contains(s)) {
                throw StructureError("class " + std::to_string(c) + " cell " + std::to_string(p) + " " + to_string(s) +
                                     " is outside Omega_" + std::to_string(cert.n));
            }
        }
    }

    ColoringVerdict verdict;
    std::vector<bool> covered(omega.size(), false);
    for (std::size_t c = 0; c < cert.classes.size(); ++c) {
        const auto& cls = cert.classes[c];
        for (std::size_t p = 0; p < cls.size(); ++p) {
            covered[omega.index_of(cls[p])] = true;
            for (std::size_t q = p + 1; q < cls.size(); ++q) {
                if (cls[p] != cls[q] && disjoint(cls[p], cls[q])) {
                    verdict.conflicts.push_back({c, cls[p], cls[q]});
                }
            }
        }
    }
    for (std::size_t idx = 0; idx < covered.size(); ++idx) {
        if (!covered[idx]) {
            verdict.uncovered.push_back(omega.at(idx));
        }
    }
    verdict.valid = verdict.uncovered.empty() && verdict.conflicts.empty();
    return verdict;
}

std::vector<std::int64_t> column_coverage_witness(int n, int j)
{
    if (j < 2 || j > n) {
        throw DomainError("column " + std::to_string(j) + " is not a column of Omega_" + std::to_string(n));
    }
    const IntervalPartition block = block_of(j);
    std::vector<std::int64_t> witness(static_cast<std::size_t>(j - 1), 0);
    auto assign = [&](std::int64_t from_row, std::int64_t to_row, auto index_for_row) {
        for (std::int64_t a = from_row; a <= to_row; ++a) {
            witness[static_cast<std::size_t>(a - 1)] = index_for_row(a);
        }
    };

    if (j == block.first) {
        assign(1, j - 1, [j](std::int64_t) { return std::int64_t{j}; });
    } else if (j == block.last) {
        assign(1, j - 1, [j](std::int64_t) { return std::int64_t{j - 1}; });
    } else {
        const std::int64_t slack = block.last - j;
        const std::int64_t top = choose2(slack + 1);
        const IntervalPartition middle = interval_partition(slack + 1);
        // top part of the column lies on P_j itself
        assign(1, top, [j](std::int64_t) { return std::int64_t{j}; });
        // the next rows are the full rows of the paths P_h, h in N'_{slack+1}
        assign(middle.first, middle.last_prime(), [](std::int64_t a) { return a; });
        // the rest hangs off the second column of P_{j-1}
        assign(middle.last, j - 1, [j](std::int64_t) { return std::int64_t{j - 1}; });
    }

    for (std::size_t row = 0; row < witness.size(); ++row) {
        const std::int64_t i = witness[row];
        const Segment cell{static_cast<Label>(row + 1), j};
        if (i < 2 || i > j || !path_P(i).contains(cell)) {
            throw std::logic_error("column witness maps " + to_string(cell) + " to P_" + std::to_string(i) +
                                   ", which does not cover it");
        }
    }
    return witness;
}

} // namespace dncolor
