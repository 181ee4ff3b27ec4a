#include "dncolor/convex_core.hpp"

#include <bit>
#include <sstream>

namespace dncolor {

Segment make_segment(Label x, Label y)
{
    if (x < 1 || y < 1) {
        throw DomainError("point labels start at 1");
    }
    if (x == y) {
        throw DomainError("a segment needs two distinct endpoints, got " + std::to_string(x) + " twice");
    }
    return x < y ? Segment{x, y} : Segment{y, x};
}

void validate_segment(Segment s, int n)
{
    if (!(1 <= s.a && s.a < s.b && s.b <= n)) {
        throw DomainError("segment " + to_string(s) + " is not a chord of " + std::to_string(n) + " points");
    }
}

std::string to_string(Segment s)
{
    return "(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
}

std::ostream& operator<<(std::ostream& os, Segment s)
{
    return os << to_string(s);
}

bool share_endpoint(Segment s, Segment t)
{
    return s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b;
}

bool cross(Segment s, Segment t)
{
    return (s.a < t.a && t.a < s.b && s.b < t.b) || (t.a < s.a && s.a < t.b && t.b < s.b);
}

bool disjoint(Segment s, Segment t)
{
    if (s == t) {
        throw DomainError("disjointness is undefined for a segment and itself: " + to_string(s));
    }
    const bool intersect = (s.a <= t.a && t.a <= s.b && s.b <= t.b) || (t.a <= s.a && s.a <= t.b && t.b <= s.b);
    return !intersect;
}

LatticePoint segment_to_lattice(Segment s)
{
    return {s.a, s.b};
}

Segment lattice_to_segment(LatticePoint p)
{
    if (p.row < 1 || p.row >= p.col) {
        std::ostringstream msg;
        msg << "lattice point (" << p.row << "," << p.col << ") is outside Omega";
        throw DomainError(msg.str());
    }
    return {p.row, p.col};
}

Omega::Omega(int n) :
    n_(n)
{
    if (n < 0) {
        throw DomainError("number of points must be non-negative");
    }
}

bool Omega::contains(Segment s) const
{
    return 1 <= s.a && s.a < s.b && s.b <= n_;
}

std::size_t Omega::index_of(Segment s) const
{
    validate_segment(s, n_);
    const auto a = static_cast<std::size_t>(s.a);
    const auto n = static_cast<std::size_t>(n_);
    // rows 1..a-1 hold (n-1) + (n-2) + ... + (n-a+1) cells
    const std::size_t row_offset = (a - 1) * n - (a - 1) * a / 2;
    return row_offset + static_cast<std::size_t>(s.b - s.a - 1);
}

Segment Omega::at(std::size_t index) const
{
    if (index >= size()) {
        throw DomainError("Omega index out of range");
    }
    Label a = 1;
    auto row_len = static_cast<std::size_t>(n_ - 1);
    while (index >= row_len) {
        index -= row_len;
        --row_len;
        ++a;
    }
    return {a, a + 1 + static_cast<Label>(index)};
}

std::vector<Segment> Omega::members() const
{
    std::vector<Segment> out;
    out.reserve(size());
    for (Label a = 1; a <= n_; ++a) {
        for (Label b = a + 1; b <= n_; ++b) {
            out.push_back({a, b});
        }
    }
    return out;
}

DnGraph::DnGraph(int n) :
    omega_(n)
{
    const std::size_t count = omega_.size();
    words_per_row_ = (count + 63) / 64;
    bits_.assign(count * words_per_row_, 0);
    const auto members = omega_.members();
    for (std::size_t u = 0; u < count; ++u) {
        for (std::size_t v = u + 1; v < count; ++v) {
            if (disjoint(members[u], members[v])) {
                bits_[u * words_per_row_ + v / 64] |= std::uint64_t{1} << (v % 64);
                bits_[v * words_per_row_ + u / 64] |= std::uint64_t{1} << (u % 64);
                ++edge_count_;
            }
        }
    }
}

bool DnGraph::adjacent(std::size_t u, std::size_t v) const
{
    return ((bits_[u * words_per_row_ + v / 64] >> (v % 64)) & 1U) != 0;
}

bool DnGraph::adjacent(Segment s, Segment t) const
{
    return adjacent(omega_.index_of(s), omega_.index_of(t));
}

std::vector<std::size_t> DnGraph::neighbors(std::size_t u) const
{
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_per_row_; ++w) {
        std::uint64_t word = bits_[u * words_per_row_ + w];
        while (word != 0) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

DnGraph build_dn(int n)
{
    return DnGraph(n);
}

} // namespace dncolor
