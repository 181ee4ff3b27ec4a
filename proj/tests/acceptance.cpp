// Acceptance suite: one PASS/FAIL line per criterion, with its pinned limits.
// Exit status is non-zero if any criterion fails.

#include "dncolor/bounds.hpp"
#include "dncolor/certificate_io.hpp"
#include "dncolor/cli.hpp"
#include "dncolor/coloring.hpp"
#include "dncolor/oracle.hpp"
#include "dncolor/render.hpp"
#include "dncolor/thrackle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>

using namespace dncolor;
using namespace std::chrono_literals;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome
{
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what)
    {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool report(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = elapsed < limit_seconds;
    const bool pass = outcome.ok && in_time;
    std::printf("[%s] criterion %2d: %s (%.3f s, limit %.0f s)", pass ? "PASS" : "FAIL", id, name.c_str(), elapsed,
                limit_seconds);
    if (!outcome.ok) {
        std::printf(" -- %s", outcome.detail.c_str());
    } else if (!in_time) {
        std::printf(" -- over the time limit");
    }
    std::printf("\n");
    std::fflush(stdout);
    return pass;
}

int cli(const std::vector<std::string>& args, std::string* captured = nullptr)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    if (captured != nullptr) {
        *captured = out.str();
    }
    return code;
}

std::string scratch(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("dncolor_acceptance_" + name)).string();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream(path, std::ios::binary) << text;
}

std::string str(std::int64_t v)
{
    return std::to_string(v);
}

Outcome formula_agreement()
{
    Outcome o;
    o.require(chi_formula(0) == 0, "chi_formula(0) != 0");
    for (std::int64_t n = 1; n <= 1'000'000; ++n) {
        if (n - triangular_k(n) != chi_formula(n)) {
            o.require(false, "closed forms disagree at n=" + str(n));
            break;
        }
    }
    return o;
}

Outcome oracle_equivalence(unsigned workers)
{
    Outcome o;
    const auto start = Clock::now();
    for (int n = 2; n <= 9; ++n) {
        const ChromaticResult r = chromatic_number_exact(SmallGraph::from_dn(build_dn(n)), 60s, workers);
        o.require(r.exact(), "no exact value at n=" + str(n));
        o.require(r.upper == chi_formula(n), "chi(D_" + str(n) + ") = " + str(r.upper));
    }
    o.require(Clock::now() - start < 60s, "n in [2,9] took longer than 60 s");

    const ChromaticResult ten = chromatic_number_exact(SmallGraph::from_dn(build_dn(10)), 120s, workers);
    if (ten.exact()) {
        o.require(ten.upper == 6, "chi(D_10) = " + str(ten.upper));
    } else {
        o.require(ten.lower <= 6 && 6 <= ten.upper, "interval for D_10 excludes 6");
    }
    return o;
}

Outcome headline_instance()
{
    Outcome o;
    std::string text;
    o.require(cli({"chi", "15"}, &text) == exit_ok && text == "10\n", "chi 15 printed '" + text + "'");
    const std::string path = scratch("color15.json");
    o.require(cli({"color", "15", "--out", path}) == exit_ok, "color 15 failed");
    const ColoringCertificate cert = parse_certificate(read_file(path));
    o.require(cert.classes.size() == 10, "color 15 emitted " + str(static_cast<std::int64_t>(cert.classes.size())) +
                                             " classes");
    std::set<Segment> cells;
    for (const auto& cls : cert.classes) {
        cells.insert(cls.begin(), cls.end());
    }
    o.require(cells.size() == 105 && Omega(15).members() == std::vector<Segment>(cells.begin(), cells.end()),
              "classes do not cover the 105 cells of Omega_15");
    o.require(cli({"verify", path}) == exit_ok, "verify rejected the certificate");
    std::remove(path.c_str());
    return o;
}

Outcome construction_sweep()
{
    Outcome o;
    for (int n = 2; n <= 200; ++n) {
        const ColoringCertificate cert = optimal_coloring(n);
        o.require(static_cast<std::int64_t>(cert.classes.size()) == chi_formula(n), "class count at n=" + str(n));
        const ColoringVerdict v = verify_coloring(cert);
        o.require(v.valid, "invalid colouring at n=" + str(n));
        for (int j = 2; j <= n; ++j) {
            (void)column_coverage_witness(n, j);
        }
    }
    return o;
}

Outcome structure_theorem()
{
    Outcome o;
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> size(3, 30);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = size(rng);
        const ThracklePath p = random_maximal_path(n, rng);
        const MaximalThrackle t = decompose(n, thrackle_from_path(p).edges());
        const std::string at = " (trial " + str(trial) + ", n=" + str(n) + ")";
        o.require(t.cycle().size() % 2 == 1 && t.cycle().size() >= 3, "cycle not odd" + at);
        o.require(t.edges().size() == static_cast<std::size_t>(n), "|E| != n" + at);
        for (const auto& [u, apex] : t.pendant_apex()) {
            o.require(wedge_apex(t, u) == apex && t.has_edge(make_segment(u, apex)), "pendant outside its wedge" + at);
        }
        o.require(path_from_thrackle(t) == p, "path round-trip" + at);
    }
    return o;
}

Outcome common_edge_pairs()
{
    Outcome o;
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> size(6, 20);
    int pairs = 0;
    std::set<int> sizes_seen;
    while (pairs < 1000) {
        const int n = size(rng);
        const MaximalThrackle t1 = random_maximal_thrackle(n, rng);
        // resample the partner until the cycles are vertex-disjoint
        std::optional<MaximalThrackle> t2;
        for (int attempt = 0; attempt < 200 && !t2; ++attempt) {
            MaximalThrackle candidate = random_maximal_thrackle(n, rng);
            if (std::ranges::none_of(candidate.cycle(), [&](Label v) { return t1.on_cycle(v); })) {
                t2 = std::move(candidate);
            }
        }
        if (!t2) {
            continue;
        }
        ++pairs;
        sizes_seen.insert(n);
        std::vector<Segment> shared;
        for (const Segment& s : t1.edges()) {
            if (t2->has_edge(s)) {
                shared.push_back(s);
            }
        }
        const Segment e = common_edge(t1, *t2);
        o.require(std::ranges::find(shared, e) != shared.end(), "edge not in both thrackles at n=" + str(n));
        const bool split = (t1.on_cycle(e.a) && t2->on_cycle(e.b)) || (t1.on_cycle(e.b) && t2->on_cycle(e.a));
        o.require(split, "endpoints not split across the cycles at n=" + str(n));
    }
    o.require(sizes_seen.size() == 15, "some n in [6, 20] produced no disjoint-cycle pair");
    return o;
}

Outcome union_bound()
{
    Outcome o;
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 12)(rng);
        const int k = std::uniform_int_distribution<int>(1, 5)(rng);
        ThrackleFamily f{n, {}};
        for (int m = 0; m < k; ++m) {
            f.members.push_back(random_maximal_thrackle(n, rng));
        }
        o.require(verify_union_bound(f).satisfied, "bound violated");
    }
    for (int k = 1; k <= 5; ++k) {
        for (int n = std::max(3, 2 * k); n <= 14; ++n) {
            o.require(static_cast<std::int64_t>(union_edge_count(extremal_family(n, k))) == union_edge_target(n, k),
                      "extremal family misses the target at n=" + str(n) + ", k=" + str(k));
        }
    }
    const auto start = Clock::now();
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {6, 3}, {7, 2}, {7, 3}}) {
        const ExhaustiveResult r = exhaustive_union_max(n, k, 120s, configured_workers());
        o.require(r.complete, "exhaustive search incomplete at n=" + str(n) + ", k=" + str(k));
        o.require(r.max_union == union_edge_target(n, k),
                  "exhaustive maximum " + str(r.max_union) + " at n=" + str(n) + ", k=" + str(k));
    }
    o.require(Clock::now() - start < 120s, "exhaustive checks took longer than 120 s");
    return o;
}

Outcome vertex_splitting()
{
    Outcome o;
    std::mt19937_64 rng(4);
    int families = 0;
    while (families < 100) {
        const int n = std::uniform_int_distribution<int>(3, 12)(rng);
        const int k = std::uniform_int_distribution<int>(2, 5)(rng);
        std::vector<MaximalThrackle> family;
        for (int m = 0; m < k; ++m) {
            family.push_back(random_maximal_thrackle(n, rng));
        }
        auto conflicts = conflict_triples(family);
        if (conflicts.empty()) {
            continue;
        }
        ++families;
        const std::size_t limit = conflicts.size();
        std::size_t steps = 0;
        while (!conflicts.empty() && o.ok) {
            std::size_t before = 0;
            for (const auto& t : family) {
                before += t.edges().size();
            }
            family = split_vertex(family, conflicts.front());
            std::size_t after = 0;
            for (const auto& t : family) {
                after += t.edges().size();
                o.require(is_thrackle(t.n(), t.edges()), "member lost the thrackle property");
            }
            o.require(after == before + static_cast<std::size_t>(k), "edge count did not grow by k");
            const auto next = conflict_triples(family);
            o.require(next.size() < conflicts.size(), "conflict count did not decrease");
            conflicts = next;
            o.require(++steps <= limit, "splitting did not terminate within |r| steps");
        }
    }
    return o;
}

Outcome staircase_characterization()
{
    Outcome o;
    for (int n = 3; n <= 8; ++n) {
        const DnGraph g = build_dn(n);
        std::set<std::uint64_t> mis;
        for_each_maximal_independent_set(SmallGraph::from_dn(g), [&](std::uint64_t s) { mis.insert(s); });
        std::set<std::uint64_t> paths;
        for_each_maximal_path(n, [&](const ThracklePath& p) {
            std::uint64_t mask = 0;
            for (const Segment& s : p.cells()) {
                mask |= std::uint64_t{1} << g.omega().index_of(s);
            }
            paths.insert(mask);
        });
        o.require(mis == paths, "families differ at n=" + str(n));
    }
    return o;
}

Outcome serialization()
{
    Outcome o;
    for (int n = 2; n <= 100; ++n) {
        const ColoringCertificate cert = optimal_coloring(n);
        const std::string text = emit_certificate(cert);
        o.require(parse_certificate(text) == cert, "round-trip lost data at n=" + str(n));
        o.require(emit_certificate(parse_certificate(text)) == text, "re-emission differs at n=" + str(n));
        o.require(render_polyomino_svg(cert) == render_polyomino_svg(parse_certificate(text)),
                  "polyomino SVG not deterministic at n=" + str(n));
        o.require(render_chords_svg(cert) == render_chords_svg(parse_certificate(text)),
                  "chord SVG not deterministic at n=" + str(n));
    }

    // every cell deleted, and every cell moved to a neighbouring cell, through the verify command
    const std::string path = scratch("mutant.json");
    for (int n : {2, 3, 7, 12, 20}) {
        const ColoringCertificate cert = optimal_coloring(n);
        for (std::size_t c = 0; c < cert.classes.size(); ++c) {
            for (std::size_t x = 0; x < cert.classes[c].size(); ++x) {
                ColoringCertificate deleted = cert;
                deleted.classes[c].erase(deleted.classes[c].begin() + static_cast<std::ptrdiff_t>(x));
                write_file(path, emit_certificate(deleted));
                o.require(cli({"verify", path}) != exit_ok, "deletion undetected at n=" + str(n));

                const Segment s = cert.classes[c][x];
                const Segment moved = s.b < n ? Segment{s.a, s.b + 1} : (s.a > 1 ? Segment{s.a - 1, s.b} : s);
                if (moved != s) {
                    ColoringCertificate shifted = cert;
                    shifted.classes[c][x] = moved;
                    std::ranges::sort(shifted.classes[c]);
                    auto& cls = shifted.classes[c];
                    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
                    write_file(path, emit_certificate(shifted));
                    o.require(cli({"verify", path}) != exit_ok, "moved cell undetected at n=" + str(n));
                }
            }
        }
    }
    std::remove(path.c_str());
    return o;
}

} // namespace

int main()
{
    const unsigned workers = configured_workers();
    std::printf("dncolor acceptance suite (workers: %u)\n", workers);
    bool all = true;
    all &= report(1, "chi_formula(n) == n - triangular_k(n) for n in [0, 10^6]", 1, formula_agreement);
    all &= report(2, "exact chi(D_n) == chi_formula(n) for n in [2, 9], D_10 exact or interval containing 6", 180,
                  [&] { return oracle_equivalence(workers); });
    all &= report(3, "chi 15 == 10, color 15 has 10 classes covering 105 cells, verify exits 0", 1,
                  headline_instance);
    all &= report(4, "optimal_coloring valid with chi classes and column witnesses for n in [2, 200]", 30,
                  construction_sweep);
    all &= report(5, "structure theorem on 1000 random maximal thrackles, n in [3, 30]", 10, structure_theorem);
    all &= report(6, "common_edge on 1000 disjoint-cycle pairs, n in [6, 20]", 10, common_edge_pairs);
    all &= report(7, "union bound on 1000 random families, extremal tightness, exhaustive maxima", 120, union_bound);
    all &= report(8, "split_vertex on 100 conflicting families until conflict-free", 10, vertex_splitting);
    all &= report(9, "maximal independent sets of D_n == staircase paths for n in [3, 8]", 60,
                  staircase_characterization);
    all &= report(10, "certificate round-trip, mutation detection, deterministic SVG", 10, serialization);
    std::printf("%s\n", all ? "all criteria passed" : "some criteria FAILED");
    return all ? 0 : 1;
}
