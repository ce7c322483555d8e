#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdisk/ext.hpp"

namespace pdisk::io {

// Key order follows insertion, so output is byte-stable.
using Json = nlohmann::ordered_json;

// Malformed or invalid document; `path` locates the offending node.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, const std::string& msg)
      : std::runtime_error(path + ": " + msg), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

Json read_file(const std::string& path);
// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

Json to_json(const PuncturedDisk& d);
Json to_json(const TaggedArc& a);
Json to_json(const Triangulation& t);
Json to_json(const Multicurve& m);
Json to_json(const FormalSum& s);
Json to_json(const SmoothingResult& r);
Json to_json(const Quiver& q);
Json to_json(const Quiver& q, const Potential& p);
Json to_json(const Quiver& q, const Representation& r);
Json to_json(const Quiver& q, const Morphism& m);
Json to_json(const Quiver& q, const RelationReport& r);
Json to_json(const Quiver& q, const ExtensionReport& r);

// `where` prefixes error paths.
PuncturedDisk disk_from_json(const Json& j, const std::string& where = "$");
TaggedArc arc_from_json(const Json& j, const PuncturedDisk& d, const std::string& where = "$");
// Accepts a bare arc document with an "n" field, or {"disk":..., "arc":...}.
TaggedArc standalone_arc_from_json(const Json& j, const std::string& where = "$");
Triangulation triangulation_from_json(const Json& j, const std::string& where = "$");
Multicurve multicurve_from_json(const Json& j, const PuncturedDisk& d, const std::string& where = "$");
FormalSum formal_sum_from_json(const Json& j, const PuncturedDisk& d, const std::string& where = "$");
SmoothingResult smoothing_from_json(const Json& j, const PuncturedDisk& d, const std::string& where = "$");
Quiver quiver_from_json(const Json& j, const std::string& where = "$");
Potential potential_from_json(const Json& j, const Quiver& q, const std::string& where = "$");
Representation representation_from_json(const Json& j, const Quiver& q, const Field& fallback = Field::rationals(),
                                        const std::string& where = "$");
Morphism morphism_from_json(const Json& j, const Quiver& q, const Representation& from, const Representation& to,
                            const std::string& where = "$");
ExtensionReport extension_report_from_json(const Json& j, const Quiver& q, const std::string& where = "$");

// Standalone TikZ pictures. Boundary points sit clockwise from the top.
struct TikzLayer {
  std::vector<TaggedArc> arcs;
  std::string color;
  std::string label;
};
std::string tikz_disk(const PuncturedDisk& d, const std::vector<TikzLayer>& layers);
std::string tikz_report(const Triangulation& t, const ExtensionReport& r);

}  // namespace pdisk::io
