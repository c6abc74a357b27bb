#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "monopath/block.hpp"
#include "monopath/dag.hpp"
#include "monopath/hamiltonize.hpp"
#include "monopath/rho.hpp"
#include "monopath/search.hpp"

namespace monopath {

inline constexpr const char* kVersion = "0.1.0";

struct Diagnostic {
    int line;  // 0 when not tied to a line
    std::string message;
};

struct GraphParse {
    std::optional<Dag> dag;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return dag.has_value(); }
};

// Graph text format:
//   # comment
//   vertices N
//   edge u v        (u < v, repeated lines are parallel edges)
// The degree profile is not stored; a source of degree 3 means ThreeRegular.
GraphParse parse_graph(std::string_view text);
std::string format_graph(const Dag& dag, const std::vector<std::string>& comments = {});
std::string format_diagnostics(const std::vector<Diagnostic>& d);

using Json = nlohmann::ordered_json;

// operation / version / inputs / outputs / provenance, keys in that order
struct ReportDocument {
    Json doc;

    explicit ReportDocument(const std::string& operation);
    Json& inputs() { return doc["inputs"]; }
    Json& outputs() { return doc["outputs"]; }
    Json& provenance() { return doc["provenance"]; }

    std::string serialize() const;  // pretty, trailing newline
    static ReportDocument parse(std::string_view text);
};

Json to_json(const BigUint& v);  // decimal string, exact
Json to_json(const PathCounts& pc);
Json to_json(const MoveLog& log);
Json to_json(const TupleVerdict& v);
Json to_json(const ExtremalReport& r);
Json to_json(const BlockSolution& s);
Json to_json(const GrowthReport& r);

std::string describe(const MoveRecord& m);

}  // namespace monopath
