#pragma once

#include <memory>
#include <string>

#include "json.hpp"

#include "optop/dsl.hpp"
#include "optop/search.hpp"

/// JSON forms of spaces, instances and verdicts. Malformed input raises
/// FormatError; structural problems (bad opens, a map leaving the codomain)
/// surface as the library's own errors.
namespace optop::io {

using Json = nlohmann::ordered_json;

/// {"points": ["a","b"], "opens": [[], ["a"], ["a","b"]]}
Json to_json(const Topology& t);
Topology topology_from_json(const Json& j);

/// {"domain": <space>, "codomain": <space>, "operator": "int_cl", "map": {"a": "b", ...}}
Json to_json(const FunctionInstance& f);
/// Operators named dsl:<name> are looked up in `defs`.
FunctionInstance instance_from_json(const Json& j, const dsl::Program* defs = nullptr);

/// Resolves a builtin operator name or dsl:<name>.
Operator operator_from_name(const std::string& name, const dsl::Program* defs = nullptr);

/// elapsed_ms is written only when include_timing is set, keeping the rest
/// byte-identical across runs.
Json to_json(const Verdict& v, bool include_timing = false);

Json parse_text(const std::string& text, const std::string& origin);
Json read_file(const std::string& path);

} // namespace optop::io
