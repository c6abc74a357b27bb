#include "monopath/io.hpp"

#include <charconv>
#include <sstream>

namespace monopath {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<int> to_int(std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace

GraphParse parse_graph(std::string_view text) {
    GraphParse r;
    auto diag = [&](int line, std::string msg) { r.diagnostics.push_back({line, std::move(msg)}); };
    int n = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineno;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0].front() == '#') continue;
        if (tok[0] == "vertices") {
            if (n >= 0) {
                diag(lineno, "duplicate 'vertices' line");
                continue;
            }
            auto v = tok.size() == 2 ? to_int(tok[1]) : std::nullopt;
            if (!v || *v < 2) {
                diag(lineno, "expected 'vertices <N>' with N >= 2");
                continue;
            }
            n = *v;
        } else if (tok[0] == "edge") {
            if (n < 0) {
                diag(lineno, "'edge' before 'vertices'");
                continue;
            }
            auto u = tok.size() == 3 ? to_int(tok[1]) : std::nullopt;
            auto v = tok.size() == 3 ? to_int(tok[2]) : std::nullopt;
            if (!u || !v) {
                diag(lineno, "expected 'edge <u> <v>'");
                continue;
            }
            if (*u < 1 || *v > n) {
                diag(lineno, "vertex out of range 1.." + std::to_string(n));
                continue;
            }
            if (*u >= *v) {
                diag(lineno, "edge " + std::to_string(*u) + " " + std::to_string(*v) + " needs u < v");
                continue;
            }
            edges.push_back({*u, *v});
        } else {
            diag(lineno, "unknown directive '" + std::string(tok[0]) + "'");
        }
    }
    if (n < 0) diag(0, "missing 'vertices' line");
    if (!r.diagnostics.empty()) return r;

    int source_degree = 0;
    for (const Edge& e : edges)
        if (e.tail == 1) ++source_degree;
    Dag dag(n, std::move(edges), source_degree == 3 ? DegreeProfile::ThreeRegular : DegreeProfile::BoundaryDeg2);
    auto rep = validate_structure(dag);
    for (auto& issue : rep.issues) diag(0, issue);
    if (rep.ok()) r.dag = std::move(dag);
    return r;
}

std::string format_graph(const Dag& dag, const std::vector<std::string>& comments) {
    std::string out;
    for (const auto& c : comments) out += "# " + c + "\n";
    out += "vertices " + std::to_string(dag.vertex_count()) + "\n";
    for (const Edge& e : dag.edges()) out += "edge " + std::to_string(e.tail) + " " + std::to_string(e.head) + "\n";
    return out;
}

std::string format_diagnostics(const std::vector<Diagnostic>& d) {
    std::string out;
    for (const auto& x : d)
        out += (x.line > 0 ? "line " + std::to_string(x.line) + ": " : std::string()) + x.message + "\n";
    return out;
}

ReportDocument::ReportDocument(const std::string& operation) {
    doc["operation"] = operation;
    doc["version"] = kVersion;
    doc["inputs"] = Json::object();
    doc["outputs"] = Json::object();
    doc["provenance"] = Json::object();
}

std::string ReportDocument::serialize() const { return doc.dump(2) + "\n"; }

ReportDocument ReportDocument::parse(std::string_view text) {
    ReportDocument r("");
    try {
        r.doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("report: ") + e.what());
    }
    for (const char* key : {"operation", "version", "inputs", "outputs", "provenance"})
        if (!r.doc.contains(key)) throw ValidationError(std::string("report: missing key '") + key + "'");
    return r;
}

Json to_json(const BigUint& v) { return v.get_str(); }

Json to_json(const PathCounts& pc) {
    Json j;
    j["total"] = to_json(pc.total);
    j["mu"] = Json::array();
    for (const auto& m : pc.mu) j["mu"].push_back(to_json(m));
    return j;
}

namespace {

Json edge_json(const Edge& e) { return Json::array({e.tail, e.head}); }

}  // namespace

std::string describe(const MoveRecord& m) {
    auto es = [](const Edge& e) { return "(" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")"; };
    std::string s = m.kind == MoveKind::Outgoing ? "outgoing" : "incoming";
    s += " at " + std::to_string(m.focus) + ": -" + es(m.deleted[0]) + " -" + es(m.deleted[1]) + " +" +
         es(m.added[0]) + " +" + es(m.added[1]);
    if (!m.mu_before.empty()) s += " total " + m.mu_before.back().get_str() + "->" + m.mu_after.back().get_str();
    return s;
}

Json to_json(const MoveLog& log) {
    Json a = Json::array();
    for (const auto& m : log.moves) {
        Json j;
        j["kind"] = m.kind == MoveKind::Outgoing ? "outgoing" : "incoming";
        j["focus"] = m.focus;
        j["deleted"] = Json::array({edge_json(m.deleted[0]), edge_json(m.deleted[1])});
        j["added"] = Json::array({edge_json(m.added[0]), edge_json(m.added[1])});
        a.push_back(j);
    }
    return a;
}

Json to_json(const TupleVerdict& v) {
    Json j;
    j["valid"] = v.valid();
    j["conditions"] = Json::array();
    for (const auto& c : v.conditions) {
        Json x;
        x["name"] = c.name;
        x["holds"] = c.holds;
        if (!c.holds) x["witness"] = c.witness;
        j["conditions"].push_back(x);
    }
    return j;
}

Json to_json(const ExtremalReport& r) {
    Json j;
    j["max_total"] = to_json(r.max_total);
    j["witnesses"] = Json::array();
    for (const auto& w : r.witnesses) j["witnesses"].push_back(to_text(w));
    j["candidates"] = r.candidates;
    j["nodes"] = r.nodes;
    j["complete"] = r.complete;
    if (r.closed_form) {
        Json c;
        c["formula"] = r.closed_form->formula;
        c["value"] = r.closed_form->value;
        if (r.closed_form->equal)
            c["equal"] = *r.closed_form->equal;
        else
            c["equal"] = nullptr;
        c["exceeded"] = r.closed_form->exceeded;
        j["closed_form"] = c;
    }
    j["counterexamples"] = r.counterexamples;
    return j;
}

Json to_json(const BlockSolution& s) {
    Json j;
    j["k"] = s.k;
    j["f"] = to_json(s.f);
    j["g2"] = s.f > 0 ? growth_factor(s.f, s.k) : 0.0;
    j["proven_optimal"] = s.proven_optimal;
    j["canonical_witness"] = s.canonical_witness;
    j["nodes_explored"] = s.nodes_explored;
    j["root_bound"] = to_json(s.root_bound);
    j["extra_edges"] = Json::array();
    for (const Edge& e : s.extra_edges()) j["extra_edges"].push_back(edge_json(e));
    return j;
}

Json to_json(const GrowthReport& r) {
    Json j;
    j["rows"] = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["k"] = row.k;
        x["f"] = to_json(row.f);
        x["g2"] = row.g2;
        x["proven"] = row.proven;
        j["rows"].push_back(x);
    }
    j["argmax_k"] = r.argmax_k;
    j["bound_base"] = r.bound_base;
    j["final_block_constant"] = to_json(r.final_block_constant);
    j["rigorous"] = r.rigorous;
    j["injected"] = r.injected;
    return j;
}

}  // namespace monopath
