#pragma once

// Points in convex position labelled 1..n clockwise, the chords (segments)
// between them, and the segment disjointness graph D_n.
//
// A segment (a,b) with a < b doubles as the lattice point in row a, column b
// of the triangular polyomino Omega_n = { (i,j) : 1 <= i < j <= n }.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dncolor {

using Label = int;

/// Raised when an argument violates an operation's domain.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Raised when the hypothesis of a structural statement does not hold for the input.
class PreconditionError : public DomainError
{
public:
    using DomainError::DomainError;
};

struct Segment
{
    Label a = 0;
    Label b = 0;

    friend auto operator<=>(const Segment&, const Segment&) = default;

    [[nodiscard]] bool has_endpoint(Label v) const { return a == v || b == v; }
    [[nodiscard]] Label other(Label v) const { return v == a ? b : a; }
};

/// Normalizes the unordered pair {x, y} into a segment with a < b.
[[nodiscard]] Segment make_segment(Label x, Label y);

/// Throws DomainError unless 1 <= s.a < s.b <= n.
void validate_segment(Segment s, int n);

[[nodiscard]] std::string to_string(Segment s);
std::ostream& operator<<(std::ostream& os, Segment s);

[[nodiscard]] bool share_endpoint(Segment s, Segment t);

/// Strict interleaving of the endpoints: the open chords cross.
[[nodiscard]] bool cross(Segment s, Segment t);

/// True iff the closed chords neither cross nor share an endpoint, i.e. the
/// endpoints are not weakly interleaved (a <= c <= b <= d or c <= a <= d <= b).
/// Comparing a segment with itself is a DomainError.
[[nodiscard]] bool disjoint(Segment s, Segment t);

struct LatticePoint
{
    int row = 0;
    int col = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

[[nodiscard]] LatticePoint segment_to_lattice(Segment s);

/// Inverse of segment_to_lattice; a point with row >= col is a DomainError.
[[nodiscard]] Segment lattice_to_segment(LatticePoint p);

[[nodiscard]] constexpr std::int64_t choose2(std::int64_t m)
{
    return m < 2 ? 0 : m * (m - 1) / 2;
}

/// The triangular polyomino Omega_n, with members indexed row-major.
class Omega
{
public:
    explicit Omega(int n);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(choose2(n_)); }
    [[nodiscard]] bool contains(Segment s) const;
    [[nodiscard]] std::size_t index_of(Segment s) const;
    [[nodiscard]] Segment at(std::size_t index) const;
    [[nodiscard]] std::vector<Segment> members() const;

private:
    int n_;
};

/// D_n: vertices are the C(n,2) segments, adjacency is disjointness.
class DnGraph
{
public:
    explicit DnGraph(int n);

    [[nodiscard]] int n() const { return omega_.n(); }
    [[nodiscard]] const Omega& omega() const { return omega_; }
    [[nodiscard]] std::size_t vertex_count() const { return omega_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edge_count_; }
    [[nodiscard]] Segment vertex(std::size_t index) const { return omega_.at(index); }
    [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const;
    [[nodiscard]] bool adjacent(Segment s, Segment t) const;
    [[nodiscard]] std::vector<std::size_t> neighbors(std::size_t u) const;

private:
    Omega omega_;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
    std::size_t edge_count_ = 0;
};

[[nodiscard]] DnGraph build_dn(int n);

} // namespace dncolor
