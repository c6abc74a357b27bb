// monopath: command-line front end.
//
// Exit status: 0 ok, 1 parse/validation error, 2 incomplete run under --strict,
// 3 internal assertion failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "monopath/io.hpp"

using namespace monopath;

namespace {

struct Globals {
    std::string format = "text";
    std::uint64_t seed = 0;  // accepted for interface stability; nothing is random
    std::optional<std::uint64_t> budget;
    bool strict = false;
    bool json() const { return format == "json"; }
};

struct Incomplete {};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << text;
}

Dag load_graph(const std::string& path) {
    GraphParse p = parse_graph(read_file(path));
    if (!p.ok()) throw ValidationError(path + ":\n" + format_diagnostics(p.diagnostics));
    return *p.dag;
}

void require_profile(const Dag& dag) {
    auto rep = validate(dag);
    if (!rep.ok()) {
        std::string msg = "invalid graph:";
        for (const auto& i : rep.issues) msg += "\n  " + i;
        throw ValidationError(msg);
    }
}

TupleClass parse_class(const std::string& s) {
    if (s == "merged" || s == "merged3regular") return TupleClass::Merged3Regular;
    if (s == "boundary" || s == "boundary-deg2" || s == "bd") return TupleClass::BoundaryDeg2;
    throw ValidationError("unknown tuple class '" + s + "'");
}

std::string join(const std::vector<BigUint>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x.get_str();
    return s;
}

void emit(const Globals& g, const ReportDocument& doc, const std::string& text) {
    if (g.json())
        std::cout << doc.serialize();
    else
        std::cout << text;
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Path counting, Hamiltonization, rho-tuples, extremal search and block optimization for "
                 "acyclic 3-regular digraphs."};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "Reserved; all algorithms are deterministic");
    app.add_option("--budget", g.budget, "Search node budget");
    app.add_flag("--strict", g.strict, "Exit 2 when a search or solve is incomplete");

    std::function<void()> run;

    // count
    std::string count_file;
    auto* count = app.add_subcommand("count", "Count source-to-sink paths");
    count->add_option("file", count_file, "Graph file")->required();
    count->callback([&] {
        run = [&] {
            Dag dag = load_graph(count_file);
            PathCounts pc = count_paths(dag);
            ReportDocument doc("count");
            doc.inputs()["file"] = count_file;
            doc.inputs()["vertices"] = dag.vertex_count();
            doc.outputs() = to_json(pc);
            emit(g, doc, "total " + pc.total.get_str() + "\nmu " + join(pc.mu) + "\n");
        };
    });

    // hamiltonize
    std::string ham_file, ham_out;
    auto* ham = app.add_subcommand("hamiltonize", "Rewrite onto a Hamiltonian path without losing paths");
    ham->add_option("file", ham_file, "Graph file")->required();
    ham->add_option("-o,--output", ham_out, "Output graph file (default: stdout)");
    ham->callback([&] {
        run = [&] {
            Dag dag = load_graph(ham_file);
            require_profile(dag);
            if (dag.profile() != DegreeProfile::ThreeRegular)
                throw ValidationError("hamiltonize needs a 3-regular graph (source of degree 3)");
            HamiltonizeResult r = hamiltonize(dag);
            PathCounts before = count_paths(dag), after = count_paths(r.output);
            std::string graph = format_graph(r.output, {"hamiltonized, total " + before.total.get_str() + " -> " +
                                                        after.total.get_str()});
            ReportDocument doc("hamiltonize");
            doc.inputs()["file"] = ham_file;
            doc.outputs()["total_before"] = to_json(before.total);
            doc.outputs()["total_after"] = to_json(after.total);
            doc.outputs()["order"] = r.order;
            doc.outputs()["moves"] = to_json(r.log);
            doc.outputs()["graph"] = graph;
            std::string text;
            text += "tree-sort order:";
            for (int v : r.order) text += " " + std::to_string(v);
            text += "\n";
            for (const auto& m : r.log.moves) text += "move " + describe(m) + "\n";
            text += "total " + before.total.get_str() + " -> " + after.total.get_str() + "\n";
            if (!ham_out.empty()) write_file(ham_out, graph);
            if (g.json()) {
                std::cout << doc.serialize();
            } else {
                std::cerr << text;
                if (ham_out.empty()) std::cout << graph;
            }
        };
    });

    // tuple
    auto* tuple = app.add_subcommand("tuple", "rho-tuple codec");
    tuple->require_subcommand(1);
    std::string tuple_text, tuple_class = "boundary", tuple_file, tuple_out;
    int tuple_conn = 3;
    auto add_tuple_args = [&](CLI::App* sub) {
        sub->add_option("tuple", tuple_text, "Comma-separated values, e.g. 2,4,5,4,5")->required();
        sub->add_option("--class", tuple_class, "boundary | merged")->capture_default_str();
    };
    auto* dec = tuple->add_subcommand("decode", "Tuple to graph file");
    add_tuple_args(dec);
    dec->add_option("-o,--output", tuple_out, "Output graph file (default: stdout)");
    dec->callback([&] {
        run = [&] {
            RhoTuple t = parse_tuple(tuple_text, parse_class(tuple_class));
            Dag dag = decode(t);
            std::string graph = format_graph(dag, {"decoded " + std::string(to_string(t.cls)) + " " + to_text(t)});
            ReportDocument doc("tuple.decode");
            doc.inputs()["tuple"] = to_text(t);
            doc.inputs()["class"] = to_string(t.cls);
            doc.outputs()["graph"] = graph;
            if (!tuple_out.empty()) write_file(tuple_out, graph);
            if (g.json()) std::cout << doc.serialize();
            else if (tuple_out.empty()) std::cout << graph;
        };
    });
    auto* enc = tuple->add_subcommand("encode", "Graph file to tuple");
    enc->add_option("file", tuple_file, "Graph file on a Hamiltonian path")->required();
    enc->callback([&] {
        run = [&] {
            RhoTuple t = encode(load_graph(tuple_file));
            ReportDocument doc("tuple.encode");
            doc.inputs()["file"] = tuple_file;
            doc.outputs()["tuple"] = to_text(t);
            doc.outputs()["class"] = to_string(t.cls);
            emit(g, doc, to_text(t) + " " + to_string(t.cls) + "\n");
        };
    });
    auto* mu = tuple->add_subcommand("mu", "Arc path counts and total");
    add_tuple_args(mu);
    mu->callback([&] {
        run = [&] {
            RhoTuple t = parse_tuple(tuple_text, parse_class(tuple_class));
            TupleMu m = tuple_mu(t);
            ReportDocument doc("tuple.mu");
            doc.inputs()["tuple"] = to_text(t);
            doc.inputs()["class"] = to_string(t.cls);
            doc.outputs()["arc_mu"] = Json::array();
            for (const auto& x : m.arc_mu) doc.outputs()["arc_mu"].push_back(to_json(x));
            doc.outputs()["total"] = to_json(m.total);
            emit(g, doc, "arc_mu " + join(m.arc_mu) + "\ntotal " + m.total.get_str() + "\n");
        };
    });
    auto* val = tuple->add_subcommand("validate", "Per-condition verdicts");
    add_tuple_args(val);
    val->add_option("--conn", tuple_conn, "Edge connectivity 1..3")->check(CLI::Range(1, 3))->capture_default_str();
    val->callback([&] {
        run = [&] {
            RhoTuple t = parse_tuple(tuple_text, parse_class(tuple_class));
            TupleVerdict v = check_tuple(t, tuple_conn);
            ReportDocument doc("tuple.validate");
            doc.inputs()["tuple"] = to_text(t);
            doc.inputs()["class"] = to_string(t.cls);
            doc.inputs()["connectivity"] = tuple_conn;
            doc.outputs() = to_json(v);
            std::string text = v.valid() ? "true\n" : "false\n";
            for (const auto& c : v.conditions)
                text += "  " + c.name + ": " + (c.holds ? "holds" : "fails at " + c.witness) + "\n";
            emit(g, doc, text);
        };
    });

    // search
    int search_n = 1, search_conn = 1;
    std::string search_class = "boundary", search_prune = "none", search_check;
    bool search_simple = false, search_serial = false;
    auto* search = app.add_subcommand("search", "Exhaustive extremal search over tuples");
    search->add_option("--n", search_n, "Tuple length (graph parameter n with --check)");
    search->add_option("--class", search_class, "boundary | merged")->capture_default_str();
    search->add_option("--conn", search_conn, "Edge connectivity 1..3")->check(CLI::Range(1, 3));
    search->add_flag("--simple", search_simple, "Simple graphs only");
    search->add_option("--prune", search_prune, "none | lemma4 | lemma5 | all")
        ->check(CLI::IsMember({"none", "lemma4", "lemma5", "all"}));
    search->add_option("--check", search_check, "Conjecture: conn, 2ec, fibonacci, simpleconn, simple2ec");
    search->add_flag("--serial", search_serial, "Use the serial reference");
    search->callback([&] {
        run = [&] {
            SearchSpec spec;
            if (!search_check.empty()) {
                Conjecture c = parse_conjecture(search_check);
                spec = conjecture_spec(c, search_n);
            } else {
                spec.n = search_n;
                spec.cls = parse_class(search_class);
                spec.connectivity = search_conn;
                spec.simple_only = search_simple;
            }
            spec.lemma4 = search_prune == "lemma4" || search_prune == "all";
            spec.lemma5 = search_prune == "lemma5" || search_prune == "all";
            if (g.budget) spec.budget = *g.budget;
            ExtremalReport r = search_serial ? find_extremal_serial(spec) : find_extremal(spec);

            ReportDocument doc("search");
            doc.inputs()["n"] = spec.n;
            doc.inputs()["class"] = to_string(spec.cls);
            doc.inputs()["connectivity"] = spec.connectivity;
            doc.inputs()["simple_only"] = spec.simple_only;
            if (!search_check.empty()) doc.inputs()["check"] = search_check;
            doc.outputs() = to_json(r);
            doc.provenance()["budget"] = spec.budget;
            doc.provenance()["lemma4"] = spec.lemma4;
            doc.provenance()["lemma5"] = spec.lemma5;

            std::string text = "tuple length " + std::to_string(spec.n) + ", class " + to_string(spec.cls) +
                               ", conn " + std::to_string(spec.connectivity) +
                               (spec.simple_only ? ", simple" : "") + "\n";
            text += "max " + r.max_total.get_str() + "\n";
            text += "witnesses";
            for (const auto& w : r.witnesses) text += " (" + to_text(w) + ")";
            text += "\ncandidates " + std::to_string(r.candidates) + ", nodes " + std::to_string(r.nodes) +
                    (r.complete ? ", complete" : ", INCOMPLETE (budget)") + "\n";
            if (r.closed_form) {
                const auto& cf = *r.closed_form;
                text += "closed form " + cf.formula + " = " + cf.value;
                if (cf.equal) text += *cf.equal ? ", attained" : ", not attained";
                text += "\n";
            }
            for (const auto& c : r.counterexamples) text += c + "\n";
            emit(g, doc, text);
            if (!r.complete && g.strict) throw Incomplete{};
        };
    });

    // block
    int block_k = 0;
    std::vector<int> block_range;
    std::string block_csv, block_graph;
    bool block_serial = false;
    auto* block = app.add_subcommand("block", "Exact block optimization");
    auto* kopt = block->add_option("--k", block_k, "Block length")->check(CLI::Range(2, kMaxBlockLength));
    auto* ropt = block->add_option("--range", block_range, "k_lo k_hi")->expected(2);
    kopt->excludes(ropt);
    block->add_option("--csv", block_csv, "Write k,f,g2 rows (range mode)");
    block->add_option("--graph", block_graph, "Write the witness graph (single k)");
    block->add_flag("--serial", block_serial, "Use the serial reference");
    block->callback([&] {
        run = [&] {
            const std::uint64_t budget = g.budget.value_or(kDefaultBlockBudget);
            ReportDocument doc("block");
            doc.provenance()["budget"] = budget;
            if (!block_range.empty()) {
                GrowthReport r = assemble_bound(block_range[0], block_range[1], budget);
                doc.inputs()["range"] = block_range;
                doc.outputs() = to_json(r);
                if (!block_csv.empty()) write_file(block_csv, growth_csv(r));
                std::string text = growth_csv(r);
                text += "bound base " + fixed(r.bound_base, 4) + " at k=" + std::to_string(r.argmax_k) +
                        (r.rigorous ? "" : " (NOT rigorous: some f unproven)") + "\n";
                text += "final block constant " + r.final_block_constant.get_str() + "\n";
                emit(g, doc, text);
                if (!r.rigorous && g.strict) throw Incomplete{};
                return;
            }
            if (block_k == 0) throw ValidationError("block: give --k or --range");
            BlockSolution s = solve_block({block_k}, budget, block_serial ? Exec::Serial : Exec::Parallel);
            doc.inputs()["k"] = block_k;
            doc.outputs() = to_json(s);
            if (!block_graph.empty()) write_file(block_graph, block_graph_text(s));
            std::string text = "k " + std::to_string(s.k) + "\nf " + s.f.get_str() + "\ng2 " +
                               (s.f > 0 ? fixed(growth_factor(s.f, s.k), 6) : "n/a") + "\nproven_optimal " +
                               (s.proven_optimal ? "true" : "false") + "\nnodes " +
                               std::to_string(s.nodes_explored) + "\n";
            emit(g, doc, text);
            if (!s.proven_optimal && g.strict) throw Incomplete{};
        };
    });

    // bound
    std::vector<int> bound_range;
    std::string bound_values, bound_csv;
    bool bound_trailing = false;
    auto* bound = app.add_subcommand("bound", "Assemble the growth bound over a block window");
    auto* bro = bound->add_option("--range", bound_range, "k_lo k_hi (solved)")->expected(2);
    auto* bvo = bound->add_option("--values", bound_values, "Injected f values, e.g. 35=8233,36=11117,...");
    bro->excludes(bvo);
    bound->add_flag("--solve-trailing", bound_trailing, "With --values, also solve blocks below the window");
    bound->add_option("--csv", bound_csv, "Write k,f,g2 rows");
    bound->callback([&] {
        run = [&] {
            const std::uint64_t budget = g.budget.value_or(kDefaultBlockBudget);
            GrowthReport r;
            ReportDocument doc("bound");
            if (!bound_values.empty()) {
                std::vector<std::pair<int, BigUint>> fv;
                std::stringstream ss(bound_values);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto eq = item.find('=');
                    if (eq == std::string::npos) throw ValidationError("bound: expected k=f, got '" + item + "'");
                    try {
                        fv.push_back({std::stoi(item.substr(0, eq)), BigUint(item.substr(eq + 1))});
                    } catch (const std::exception&) {
                        throw ValidationError("bound: bad entry '" + item + "'");
                    }
                }
                r = assemble_bound(fv, bound_trailing, budget);
                doc.inputs()["values"] = bound_values;
            } else if (!bound_range.empty()) {
                r = assemble_bound(bound_range[0], bound_range[1], budget);
                doc.inputs()["range"] = bound_range;
            } else {
                throw ValidationError("bound: give --range or --values");
            }
            doc.outputs() = to_json(r);
            doc.provenance()["budget"] = budget;
            if (!bound_csv.empty()) write_file(bound_csv, growth_csv(r));
            std::string text = "bound base " + fixed(r.bound_base, 4) + " at k=" + std::to_string(r.argmax_k) + "\n";
            text += "upper bound c * " + fixed(r.bound_base, 4) + "^n\n";
            if (r.final_block_constant > 0)
                text += "final block constant (proxy for c) " + r.final_block_constant.get_str() + "\n";
            if (r.injected) text += "f values injected, not solved\n";
            else if (!r.rigorous) text += "NOT rigorous: some f unproven\n";
            emit(g, doc, text);
            if (!r.rigorous && !r.injected && g.strict) throw Incomplete{};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    try {
        if (run) run();
    } catch (const Incomplete&) {
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "assertion failed: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
