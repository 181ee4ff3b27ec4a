#include "dncolor/certificate_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace dncolor {

namespace {

using nlohmann::json;

json cell_json(Segment s)
{
    return json::array({s.a, s.b});
}

json cells_json(const std::vector<Segment>& cells)
{
    json out = json::array();
    for (const Segment& s : cells) {
        out.push_back(cell_json(s));
    }
    return out;
}

std::string child(const std::string& path, const std::string& key)
{
    return path + "/" + key;
}

std::string child(const std::string& path, std::size_t index)
{
    return path + "/" + std::to_string(index);
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t p = 0; p < end; ++p) {
            if (text[p] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column), "invalid JSON");
    }
}

void expect_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional)
{
    if (!obj.is_object()) {
        throw ParseError(path.empty() ? "/" : path, "expected an object");
    }
    for (const auto& [key, value] : obj.items()) {
        const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                           std::find(optional.begin(), optional.end(), key) != optional.end();
        if (!known) {
            throw ParseError(child(path, key), "unknown field");
        }
    }
    for (std::string_view key : required) {
        if (!obj.contains(key)) {
            throw ParseError(child(path, std::string(key)), "missing required field");
        }
    }
}

std::int64_t get_integer(const json& value, const std::string& path)
{
    if (!value.is_number_integer()) {
        throw ParseError(path, "expected an integer");
    }
    return value.get<std::int64_t>();
}

void check_header(const json& doc, std::string_view schema)
{
    if (!doc.at("schema").is_string() || doc.at("schema").get<std::string>() != schema) {
        throw ParseError("/schema", "expected \"" + std::string(schema) + "\"");
    }
    if (get_integer(doc.at("version"), "/version") != schema_version) {
        throw ParseError("/version", "unsupported schema version");
    }
}

int get_n(const json& doc)
{
    const std::int64_t n = get_integer(doc.at("n"), "/n");
    if (n < 0 || n > 100000) {
        throw ParseError("/n", "n out of range");
    }
    return static_cast<int>(n);
}

Segment parse_cell(const json& value, const std::string& path, int n)
{
    if (!value.is_array() || value.size() != 2) {
        throw ParseError(path, "expected a cell [a, b]");
    }
    const std::int64_t a = get_integer(value[0], child(path, 0));
    const std::int64_t b = get_integer(value[1], child(path, 1));
    if (!(1 <= a && a < b && b <= n)) {
        throw ParseError(path, "cell [" + std::to_string(a) + "," + std::to_string(b) + "] violates 1 <= a < b <= " +
                                   std::to_string(n));
    }
    return {static_cast<Label>(a), static_cast<Label>(b)};
}

std::vector<Segment> parse_cell_list(const json& value, const std::string& path, int n)
{
    if (!value.is_array()) {
        throw ParseError(path, "expected an array of cells");
    }
    std::vector<Segment> cells;
    std::set<Segment> seen;
    for (std::size_t p = 0; p < value.size(); ++p) {
        const Segment s = parse_cell(value[p], child(path, p), n);
        if (!seen.insert(s).second) {
            throw ParseError(child(path, p), "duplicate cell " + to_string(s));
        }
        cells.push_back(s);
    }
    return cells;
}

json verdict_json(const ColoringVerdict& verdict)
{
    json conflicts = json::array();
    for (const ClassConflict& c : verdict.conflicts) {
        conflicts.push_back({{"class", c.class_index}, {"cells", json::array({cell_json(c.first), cell_json(c.second)})}});
    }
    return {{"valid", verdict.valid}, {"uncovered", cells_json(verdict.uncovered)}, {"conflicts", conflicts}};
}

ColoringVerdict parse_verdict(const json& value, int n)
{
    const std::string path = "/verdict";
    expect_keys(value, path, {"valid", "uncovered", "conflicts"}, {});
    ColoringVerdict verdict;
    if (!value.at("valid").is_boolean()) {
        throw ParseError(child(path, "valid"), "expected a boolean");
    }
    verdict.valid = value.at("valid").get<bool>();
    verdict.uncovered = parse_cell_list(value.at("uncovered"), child(path, "uncovered"), n);
    const json& conflicts = value.at("conflicts");
    if (!conflicts.is_array()) {
        throw ParseError(child(path, "conflicts"), "expected an array");
    }
    for (std::size_t p = 0; p < conflicts.size(); ++p) {
        const std::string where = child(child(path, "conflicts"), p);
        expect_keys(conflicts[p], where, {"class", "cells"}, {});
        const std::int64_t cls = get_integer(conflicts[p].at("class"), child(where, "class"));
        if (cls < 0) {
            throw ParseError(child(where, "class"), "negative class index");
        }
        const auto cells = parse_cell_list(conflicts[p].at("cells"), child(where, "cells"), n);
        if (cells.size() != 2) {
            throw ParseError(child(where, "cells"), "a conflict names exactly two cells");
        }
        verdict.conflicts.push_back({static_cast<std::size_t>(cls), cells[0], cells[1]});
    }
    return verdict;
}

} // namespace

nlohmann::json certificate_to_json(const CertificateDocument& doc)
{
    const ColoringCertificate& cert = doc.certificate;
    json classes = json::array();
    for (const auto& cls : cert.classes) {
        classes.push_back(cells_json(cls));
    }
    json labels = json::array();
    for (std::size_t c = 0; c < cert.classes.size(); ++c) {
        labels.push_back(c < cert.class_labels.size() ? cert.class_labels[c] : 0);
    }
    json out = {
        {"schema", certificate_schema},
        {"version", schema_version},
        {"n", cert.n},
        {"classes", classes},
        {"generator", {{"tool", tool_name}, {"tool_version", doc.tool_version}, {"path_indices", labels}}},
    };
    if (doc.verdict) {
        out["verdict"] = verdict_json(*doc.verdict);
    }
    return out;
}

std::string emit_certificate(const CertificateDocument& doc)
{
    return certificate_to_json(doc).dump(2) + "\n";
}

std::string emit_certificate(const ColoringCertificate& cert)
{
    return emit_certificate(CertificateDocument{cert, std::string(tool_version), std::nullopt});
}

CertificateDocument parse_certificate_document(std::string_view text)
{
    const json doc = parse_json(text);
    expect_keys(doc, "", {"schema", "version", "n", "classes"}, {"generator", "verdict"});
    check_header(doc, certificate_schema);

    CertificateDocument out;
    ColoringCertificate& cert = out.certificate;
    cert.n = get_n(doc);
    const json& classes = doc.at("classes");
    if (!classes.is_array()) {
        throw ParseError("/classes", "expected an array of classes");
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
        cert.classes.push_back(parse_cell_list(classes[c], child("/classes", c), cert.n));
    }

    cert.class_labels.assign(cert.classes.size(), 0);
    if (doc.contains("generator")) {
        const json& gen = doc.at("generator");
        expect_keys(gen, "/generator", {"tool", "tool_version", "path_indices"}, {});
        if (!gen.at("tool").is_string() || !gen.at("tool_version").is_string()) {
            throw ParseError("/generator", "tool and tool_version must be strings");
        }
        out.tool_version = gen.at("tool_version").get<std::string>();
        const json& indices = gen.at("path_indices");
        if (!indices.is_array() || indices.size() != cert.classes.size()) {
            throw ParseError("/generator/path_indices", "expected one path index per class");
        }
        for (std::size_t c = 0; c < indices.size(); ++c) {
            const std::int64_t label = get_integer(indices[c], child("/generator/path_indices", c));
            if (label < 0) {
                throw ParseError(child("/generator/path_indices", c), "negative path index");
            }
            cert.class_labels[c] = label;
        }
    }
    if (doc.contains("verdict")) {
        out.verdict = parse_verdict(doc.at("verdict"), cert.n);
    }
    return out;
}

ColoringCertificate parse_certificate(std::string_view text)
{
    return parse_certificate_document(text).certificate;
}

std::string certificate_to_text(const ColoringCertificate& cert)
{
    std::ostringstream out;
    out << "n = " << cert.n << ", " << cert.classes.size() << " classes\n";
    for (std::size_t c = 0; c < cert.classes.size(); ++c) {
        const std::int64_t label = c < cert.class_labels.size() ? cert.class_labels[c] : 0;
        if (label > 0) {
            out << "P_" << label << ":";
        } else {
            out << "class " << c << ":";
        }
        for (const Segment& s : cert.classes[c]) {
            out << ' ' << s;
        }
        out << '\n';
    }
    return out.str();
}

std::string emit_thrackles(const ThrackleSet& set)
{
    json thrackles = json::array();
    for (const auto& t : set.thrackles) {
        thrackles.push_back(cells_json(t));
    }
    const json out = {{"schema", thrackles_schema}, {"version", schema_version}, {"n", set.n}, {"thrackles", thrackles}};
    return out.dump(2) + "\n";
}

ThrackleSet parse_thrackles(std::string_view text)
{
    const json doc = parse_json(text);
    expect_keys(doc, "", {"schema", "version", "n", "thrackles"}, {});
    check_header(doc, thrackles_schema);
    ThrackleSet out;
    out.n = get_n(doc);
    const json& list = doc.at("thrackles");
    if (!list.is_array()) {
        throw ParseError("/thrackles", "expected an array of edge lists");
    }
    for (std::size_t t = 0; t < list.size(); ++t) {
        out.thrackles.push_back(parse_cell_list(list[t], child("/thrackles", t), out.n));
    }
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace dncolor
