#pragma once

// JSON documents exchanged by the command line tool.
//
// Coloring certificate (schema "dncolor.certificate", version 1):
//
//   {
//     "schema": "dncolor.certificate",
//     "version": 1,
//     "n": 4,
//     "classes": [[[1,2],[1,3],[2,3],[2,4]], [[1,4],[3,4]]],
//     "generator": {"tool": "dncolor", "tool_version": "1.0.0", "path_indices": [2, 4]},
//     "verdict": {"valid": true, "uncovered": [], "conflicts": []}
//   }
//
// "generator" and "verdict" are optional; any other key is rejected.
//
// Thrackle set (schema "dncolor.thrackles", version 1):
//
//   {"schema": "dncolor.thrackles", "version": 1, "n": 6, "thrackles": [[[1,2], ...], ...]}

#include "dncolor/coloring.hpp"
#include "dncolor/thrackle.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dncolor {

inline constexpr std::string_view tool_name = "dncolor";
inline constexpr std::string_view tool_version = "1.0.0";
inline constexpr std::string_view certificate_schema = "dncolor.certificate";
inline constexpr std::string_view thrackles_schema = "dncolor.thrackles";
inline constexpr int schema_version = 1;

/// Malformed document. `where` is a JSON pointer to the offending value, or
/// "line L, column C" for syntax errors.
class ParseError : public std::runtime_error
{
public:
    ParseError(std::string where, const std::string& what) :
        std::runtime_error(where + ": " + what),
        where_(std::move(where))
    {
    }

    [[nodiscard]] const std::string& where() const { return where_; }

private:
    std::string where_;
};

struct CertificateDocument
{
    ColoringCertificate certificate;
    std::string tool_version{dncolor::tool_version};
    std::optional<ColoringVerdict> verdict;

    friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

[[nodiscard]] nlohmann::json certificate_to_json(const CertificateDocument& doc);
[[nodiscard]] std::string emit_certificate(const CertificateDocument& doc);
[[nodiscard]] std::string emit_certificate(const ColoringCertificate& cert);

[[nodiscard]] CertificateDocument parse_certificate_document(std::string_view text);
[[nodiscard]] ColoringCertificate parse_certificate(std::string_view text);

/// One line per class: "P_i: (a,b) (a,b) ...", or "class c:" for external classes.
[[nodiscard]] std::string certificate_to_text(const ColoringCertificate& cert);

struct ThrackleSet
{
    int n = 0;
    std::vector<std::vector<Segment>> thrackles;

    friend bool operator==(const ThrackleSet&, const ThrackleSet&) = default;
};

[[nodiscard]] std::string emit_thrackles(const ThrackleSet& set);
[[nodiscard]] ThrackleSet parse_thrackles(std::string_view text);

/// Reads a whole file; std::runtime_error if it cannot be opened.
[[nodiscard]] std::string read_file(const std::string& path);

} // namespace dncolor
