#include "dncolor/cli.hpp"

#include "dncolor/bounds.hpp"
#include "dncolor/certificate_io.hpp"
#include "dncolor/coloring.hpp"
#include "dncolor/oracle.hpp"
#include "dncolor/render.hpp"
#include "dncolor/thrackle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <thread>

namespace dncolor {

namespace {

using nlohmann::json;

class CommandError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw CommandError("cannot write " + path);
    }
    file << text;
}

int cmd_chi(std::int64_t n, std::ostream& out)
{
    out << chi_formula(n) << '\n';
    return exit_ok;
}

int cmd_color(int n, const std::string& format, const std::string& path, std::ostream& out)
{
    const ColoringCertificate cert = optimal_coloring(n);
    std::string text;
    if (format == "json") {
        text = emit_certificate(cert);
    } else if (format == "text") {
        text = certificate_to_text(cert);
    } else {
        text = render_polyomino_svg(cert);
    }
    write_output(text, path, out);
    return exit_ok;
}

int cmd_verify(const std::string& path, std::ostream& out)
{
    const ColoringCertificate cert = parse_certificate(read_file(path));
    const ColoringVerdict verdict = verify_coloring(cert);
    if (verdict.valid) {
        out << "valid: " << cert.classes.size() << " classes cover all " << choose2(cert.n) << " cells of Omega_"
            << cert.n << '\n';
        return exit_ok;
    }
    out << "invalid\n";
    for (const Segment& s : verdict.uncovered) {
        out << "uncovered " << s << '\n';
    }
    for (const ClassConflict& c : verdict.conflicts) {
        out << "class " << c.class_index << ": disjoint pair " << c.first << ' ' << c.second << '\n';
    }
    return exit_invalid;
}

int cmd_oracle(int n, double budget_seconds, std::ostream& out)
{
    if (n > 11) {
        throw CommandError("the exact oracle handles n <= 11 (at most 64 vertices)");
    }
    const SmallGraph g = SmallGraph::from_dn(build_dn(n));
    const auto budget = std::chrono::milliseconds(static_cast<std::int64_t>(budget_seconds * 1000.0));
    const ChromaticResult result = chromatic_number_exact(g, budget, configured_workers());
    if (result.exact()) {
        out << result.lower << '\n';
    } else {
        out << '[' << result.lower << ", " << result.upper << "]\n";
    }
    return exit_ok;
}

int cmd_extremal(int n, int k, const std::string& path, std::ostream& out)
{
    const ThrackleFamily family = extremal_family(n, k);
    const UnionBoundReport report = verify_union_bound(family);
    if (!path.empty()) {
        ThrackleSet set{n, {}};
        for (const MaximalThrackle& t : family.members) {
            set.thrackles.push_back(t.edges());
        }
        write_output(emit_thrackles(set), path, out);
    }
    for (std::size_t idx = 0; idx < family.members.size(); ++idx) {
        const MaximalThrackle& t = family.members[idx];
        out << "T_" << 2 * idx + 1 << ":";
        for (const Segment& s : t.edges()) {
            out << ' ' << s;
        }
        out << '\n';
    }
    out << "union edges: " << report.union_edges << '\n';
    out << "bound k*n - C(k,2): " << report.bound << '\n';
    out << "attainable min(C(n,2), bound): " << union_edge_target(n, k) << '\n';
    return exit_ok;
}

std::vector<MaximalThrackle> load_thrackles(const std::string& path)
{
    const ThrackleSet set = parse_thrackles(read_file(path));
    std::vector<MaximalThrackle> out;
    for (std::size_t idx = 0; idx < set.thrackles.size(); ++idx) {
        try {
            out.push_back(decompose(set.n, set.thrackles[idx]));
        } catch (const DomainError& e) {
            throw ParseError("/thrackles/" + std::to_string(idx), e.what());
        }
    }
    return out;
}

int cmd_common_edge(const std::string& path, std::ostream& out)
{
    const auto thrackles = load_thrackles(path);
    if (thrackles.size() != 2) {
        throw ParseError("/thrackles", "expected exactly two thrackles");
    }
    try {
        out << common_edge(thrackles[0], thrackles[1]) << '\n';
    } catch (const PreconditionError& e) {
        out << "precondition violated: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_ok;
}

int cmd_paths(int n, std::ostream& out)
{
    for (const RestrictedPath& p : path_cover(n)) {
        out << "P_" << p.index << " maximal=" << (p.maximal ? "yes" : "no") << ":";
        for (const Segment& s : p.cells) {
            out << ' ' << s;
        }
        out << '\n';
    }
    return exit_ok;
}

json census_row(int n)
{
    json row = {{"n", n}, {"chi", chi_formula(n)}};
    const ColoringCertificate cert = optimal_coloring(n);
    const ColoringVerdict verdict = verify_coloring(cert);
    bool columns_ok = true;
    for (int j = 2; j <= n; ++j) {
        try {
            (void)column_coverage_witness(n, j);
        } catch (const std::logic_error&) {
            columns_ok = false;
        }
    }
    json non_maximal = json::array();
    for (const RestrictedPath& p : path_cover(n)) {
        if (!p.maximal) {
            non_maximal.push_back(p.index);
        }
    }
    const bool count_ok = static_cast<std::int64_t>(cert.classes.size()) == chi_formula(n);
    row["classes"] = cert.classes.size();
    row["valid"] = verdict.valid;
    row["columns_witnessed"] = columns_ok;
    row["non_maximal_paths"] = non_maximal;
    row["passed"] = count_ok && verdict.valid && columns_ok;
    return row;
}

int cmd_census(int n_min, int n_max, std::ostream& out)
{
    if (n_min > n_max) {
        throw CommandError("N_MIN must not exceed N_MAX");
    }
    json rows = json::array();
    bool all_passed = true;
    for (int n = n_min; n <= n_max; ++n) {
        json row = census_row(n);
        all_passed = all_passed && row["passed"].get<bool>();
        rows.push_back(std::move(row));
    }
    const json summary = {{"n_min", n_min}, {"n_max", n_max}, {"all_passed", all_passed}, {"rows", rows}};
    out << summary.dump(2) << '\n';
    return all_passed ? exit_ok : exit_invalid;
}

int cmd_render(const std::string& path, const std::string& style, const std::string& out_path, std::ostream& out)
{
    const std::string text = read_file(path);
    const json probe = json::parse(text, nullptr, false);
    const bool is_thrackles = probe.is_object() && probe.contains("schema") && probe["schema"] == thrackles_schema;

    std::string svg;
    if (is_thrackles) {
        const auto thrackles = load_thrackles(path);
        if (style == "chords" && thrackles.size() == 1) {
            svg = render_thrackle_svg(thrackles.front());
        } else {
            ColoringCertificate as_classes;
            as_classes.n = thrackles.empty() ? 0 : thrackles.front().n();
            for (const MaximalThrackle& t : thrackles) {
                as_classes.classes.push_back(t.edges());
            }
            svg = style == "chords" ? render_chords_svg(as_classes) : render_polyomino_svg(as_classes);
        }
    } else {
        const ColoringCertificate cert = parse_certificate(text);
        svg = style == "chords" ? render_chords_svg(cert) : render_polyomino_svg(cert);
    }
    write_output(svg, out_path, out);
    return exit_ok;
}

} // namespace

unsigned configured_workers()
{
    if (const char* env = std::getenv("DNCOLOR_WORKERS")) {
        unsigned value = 0;
        const std::string_view text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) {
            return value;
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Optimal colourings of the convex segment disjointness graph D_n", std::string(tool_name)};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version));

    std::int64_t chi_n = 0;
    auto* chi = app.add_subcommand("chi", "Print the chromatic number of D_N");
    chi->add_option("N", chi_n, "number of points")->required()->check(CLI::NonNegativeNumber);

    int color_n = 0;
    std::string color_format = "json";
    std::string color_out;
    auto* color = app.add_subcommand("color", "Emit an optimal colouring certificate for D_N");
    color->add_option("N", color_n, "number of points")->required()->check(CLI::Range(0, 5000));
    color->add_option("--format", color_format, "json, text or svg")->check(CLI::IsMember({"json", "text", "svg"}));
    color->add_option("--out", color_out, "output file (default: stdout)");

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "Check a colouring certificate");
    verify->add_option("FILE", verify_path, "certificate")->required();

    int oracle_n = 0;
    double oracle_budget = 60.0;
    auto* oracle = app.add_subcommand("oracle", "Exact chromatic number of D_N by branch and bound");
    oracle->add_option("N", oracle_n, "number of points")->required()->check(CLI::Range(0, 11));
    oracle->add_option("--budget", oracle_budget, "time budget in seconds")->check(CLI::PositiveNumber);

    int extremal_n = 0;
    int extremal_k = 0;
    std::string extremal_out;
    auto* extremal = app.add_subcommand("extremal", "Star family attaining the union edge bound");
    extremal->add_option("N", extremal_n, "number of points")->required()->check(CLI::Range(3, 1000));
    extremal->add_option("K", extremal_k, "number of thrackles")->required()->check(CLI::Range(1, 500));
    extremal->add_option("--out", extremal_out, "write the family as a thrackle document");

    std::string common_path;
    auto* common = app.add_subcommand("common-edge", "Shared edge of two maximal thrackles with disjoint cycles");
    common->add_option("FILE", common_path, "thrackle document with two thrackles")->required();

    int paths_n = 0;
    auto* paths = app.add_subcommand("paths", "List the generating paths restricted to Omega_N");
    paths->add_option("N", paths_n, "number of points")->required()->check(CLI::Range(0, 5000));

    int census_min = 0;
    int census_max = 0;
    auto* census = app.add_subcommand("census", "Check the construction for every n in a range");
    census->add_option("N_MIN", census_min, "first n")->required()->check(CLI::Range(0, 2000));
    census->add_option("N_MAX", census_max, "last n")->required()->check(CLI::Range(0, 2000));

    std::string render_path;
    std::string render_style = "polyomino";
    std::string render_out;
    auto* render = app.add_subcommand("render", "Render a certificate or thrackle document as SVG");
    render->add_option("FILE", render_path, "input document")->required();
    render->add_option("--style", render_style, "polyomino or chords")->check(CLI::IsMember({"polyomino", "chords"}));
    render->add_option("--out", render_out, "output file (default: stdout)");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back(tool_name);
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (std::string& a : argv_storage) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (*chi) {
            return cmd_chi(chi_n, out);
        }
        if (*color) {
            return cmd_color(color_n, color_format, color_out, out);
        }
        if (*verify) {
            return cmd_verify(verify_path, out);
        }
        if (*oracle) {
            return cmd_oracle(oracle_n, oracle_budget, out);
        }
        if (*extremal) {
            return cmd_extremal(extremal_n, extremal_k, extremal_out, out);
        }
        if (*common) {
            return cmd_common_edge(common_path, out);
        }
        if (*paths) {
            return cmd_paths(paths_n, out);
        }
        if (*census) {
            return cmd_census(census_min, census_max, out);
        }
        if (*render) {
            return cmd_render(render_path, render_style, render_out, out);
        }
    } catch (const ParseError& e) {
        err << "invalid input: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_usage;
}

} // namespace dncolor
