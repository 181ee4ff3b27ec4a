#include "dncolor/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace dncolor {

namespace {

constexpr int cell_size = 20;
constexpr int margin = 10;
constexpr double radius = 180.0;
constexpr double center = radius + 40.0;

std::string fixed(double value)
{
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.3f", value);
    return buf.data();
}

struct Point
{
    double x;
    double y;
};

// Label 1 at the top, labels increasing clockwise (SVG y grows downwards).
Point circle_point(int n, Label v)
{
    const double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * (v - 1) / n;
    return {center + radius * std::cos(angle), center + radius * std::sin(angle)};
}

void svg_header(std::ostringstream& out, int width, int height)
{
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"#ffffff\"/>\n";
}

void chord(std::ostringstream& out, int n, Segment s, std::string_view colour, double width, std::string_view cls)
{
    const Point p = circle_point(n, s.a);
    const Point q = circle_point(n, s.b);
    out << "<line class=\"" << cls << "\" x1=\"" << fixed(p.x) << "\" y1=\"" << fixed(p.y) << "\" x2=\"" << fixed(q.x)
        << "\" y2=\"" << fixed(q.y) << "\" stroke=\"" << colour << "\" stroke-width=\"" << fixed(width) << "\"/>\n";
}

void points(std::ostringstream& out, int n)
{
    for (Label v = 1; v <= n; ++v) {
        const Point p = circle_point(n, v);
        const Point label = {center + (radius + 16) * (p.x - center) / radius,
                             center + (radius + 16) * (p.y - center) / radius};
        out << "<circle class=\"point\" cx=\"" << fixed(p.x) << "\" cy=\"" << fixed(p.y)
            << "\" r=\"4\" fill=\"#000000\"/>\n";
        out << "<text x=\"" << fixed(label.x) << "\" y=\"" << fixed(label.y)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
            << v << "</text>\n";
    }
}

} // namespace

const std::array<std::string_view, 16>& palette()
{
    static constexpr std::array<std::string_view, 16> colours = {
        "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
        "#bcbd22", "#17becf", "#393b79", "#ad494a", "#637939", "#e7ba52", "#7b4173", "#3182bd",
    };
    return colours;
}

std::string render_polyomino_svg(const ColoringCertificate& cert)
{
    const int side = 2 * margin + std::max(cert.n, 1) * cell_size;
    std::ostringstream out;
    svg_header(out, side, side);
    for (std::size_t c = 0; c < cert.classes.size(); ++c) {
        const std::string_view fill = palette()[c % palette().size()];
        out << "<g class=\"class\" data-class=\"" << c << "\">\n";
        for (const Segment& s : cert.classes[c]) {
            out << "<rect class=\"cell\" x=\"" << margin + (s.b - 1) * cell_size << "\" y=\""
                << margin + (s.a - 1) * cell_size << "\" width=\"" << cell_size << "\" height=\"" << cell_size
                << "\" fill=\"" << fill << "\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n";
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_chords_svg(const ColoringCertificate& cert)
{
    const int side = static_cast<int>(2 * center);
    std::ostringstream out;
    svg_header(out, side, side);
    for (std::size_t c = 0; c < cert.classes.size(); ++c) {
        const std::string_view colour = palette()[c % palette().size()];
        for (const Segment& s : cert.classes[c]) {
            chord(out, cert.n, s, colour, 1.5, "edge");
        }
    }
    points(out, cert.n);
    out << "</svg>\n";
    return out.str();
}

std::string render_thrackle_svg(const MaximalThrackle& t)
{
    const int side = static_cast<int>(2 * center);
    std::ostringstream out;
    svg_header(out, side, side);
    const auto cycle = t.cycle_edges();
    for (const Segment& s : t.edges()) {
        const bool on_cycle = std::binary_search(cycle.begin(), cycle.end(), s);
        if (on_cycle) {
            chord(out, t.n(), s, "#1f4fd8", 3.0, "cycle-edge");
        } else {
            chord(out, t.n(), s, "#555555", 1.5, "edge");
        }
    }
    points(out, t.n());
    out << "</svg>\n";
    return out.str();
}

} // namespace dncolor
