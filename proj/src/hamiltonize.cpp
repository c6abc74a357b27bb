#include "monopath/hamiltonize.hpp"

#include <algorithm>
#include <numeric>

namespace monopath {

namespace {

void require_three_regular(const Dag& dag, const char* op) {
    auto rep = validate(dag);
    if (!rep.ok()) throw ValidationError(std::string(op) + ": " + rep.issues.front());
    if (dag.profile() != DegreeProfile::ThreeRegular)
        throw PreconditionError(std::string(op) + ": graph must be three-regular");
}

[[noreturn]] void fail(const char* op, int vertex, const std::string& what) {
    throw PreconditionError(std::string(op) + " at vertex " + std::to_string(vertex) + ": " + what);
}

bool interior_outgoing(const Dag& d, int v) {
    return v > 1 && v < d.vertex_count() && d.outdegree(v) == 2 && d.indegree(v) == 1;
}

bool interior_incoming(const Dag& d, int v) {
    return v > 1 && v < d.vertex_count() && d.indegree(v) == 2 && d.outdegree(v) == 1;
}

// Replace one copy of each edge in `del` by the edges in `add`.
Dag rewrite(const Dag& d, std::array<Edge, 2> del, std::array<Edge, 2> add) {
    std::vector<Edge> es = d.edges();
    for (const Edge& e : del) {
        // edges are sorted; drop the later-listed copy
        auto r = std::equal_range(es.begin(), es.end(), e);
        es.erase(r.second - 1);
    }
    for (const Edge& e : add) es.push_back(e);
    return Dag(d.vertex_count(), std::move(es), d.profile());
}

}  // namespace

std::vector<int> tree_sort_order(const Dag& dag) {
    require_three_regular(dag, "tree_sort");
    const int n = dag.vertex_count();
    PathCounts pc = count_paths(dag);

    // root of each vertex: follow the unique in-edge through outgoing vertices
    std::vector<int> root(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        if (v == 1 || dag.indegree(v) >= 2) {
            root[v] = v;
        } else {
            root[v] = root[dag.in_neighbors(v).front()];  // parent precedes v
        }
    }
    std::vector<int> roots;
    for (int v = 1; v <= n; ++v)
        if (root[v] == v) roots.push_back(v);
    std::stable_sort(roots.begin(), roots.end(),
                     [&](int a, int b) { return pc.at(a) < pc.at(b); });

    std::vector<int> rank(n + 1);
    for (size_t i = 0; i < roots.size(); ++i) rank[roots[i]] = static_cast<int>(i);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return rank[root[a]] < rank[root[b]]; });
    return order;
}

Dag relabel(const Dag& dag, const std::vector<int>& order) {
    const int n = dag.vertex_count();
    if (static_cast<int>(order.size()) != n) throw PreconditionError("relabel: order has wrong length");
    std::vector<int> pos(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 1 || v > n || pos[v] != 0) throw PreconditionError("relabel: order is not a permutation");
        pos[v] = i + 1;
    }
    std::vector<Edge> es;
    for (const Edge& e : dag.edges()) {
        Edge f{pos[e.tail], pos[e.head]};
        if (f.tail >= f.head) throw PreconditionError("relabel: order does not respect edge orientation");
        es.push_back(f);
    }
    return Dag(n, std::move(es), dag.profile());
}

Dag tree_sort(const Dag& dag) { return relabel(dag, tree_sort_order(dag)); }

std::vector<int> outgoing_move_sites(const Dag& dag) {
    std::vector<int> r;
    for (int b = 2; b < dag.vertex_count(); ++b)
        if (interior_outgoing(dag, b) && !dag.has_edge(b - 1, b)) r.push_back(b);
    return r;
}

std::vector<int> incoming_move_sites(const Dag& dag) {
    std::vector<int> r;
    for (int v = 2; v < dag.vertex_count(); ++v)
        if (interior_incoming(dag, v) && !dag.has_edge(v - 1, v)) r.push_back(v);
    return r;
}

Dag outgoing_move(const Dag& dag, int b, MoveRecord* record) {
    constexpr const char* op = "outgoing_move";
    require_three_regular(dag, op);
    if (b < 2 || b >= dag.vertex_count() || !interior_outgoing(dag, b))
        fail(op, b, "not an interior outdegree-2 vertex");
    const int p = b - 1;
    if (dag.has_edge(p, b)) fail(op, b, "already connected to its predecessor");
    if (!interior_outgoing(dag, p)) fail(op, b, "predecessor is not an outgoing vertex");
    PathCounts before = count_paths(dag);
    for (int v = 2; v <= dag.vertex_count(); ++v)
        if (before.at(v) < before.at(v - 1)) fail(op, b, "ordering is not tree-sorted");

    const int ell = dag.in_neighbors(b).front();
    const int u1 = dag.out_neighbors(p).front();
    std::array<Edge, 2> del{Edge{p, u1}, Edge{ell, b}};
    std::array<Edge, 2> add{Edge{ell, u1}, Edge{p, b}};
    Dag out = rewrite(dag, del, add);
    if (record) {
        *record = MoveRecord{MoveKind::Outgoing, b, del, add, before.mu, count_paths(out).mu};
    }
    return out;
}

Dag incoming_move(const Dag& dag, int v, MoveRecord* record) {
    constexpr const char* op = "incoming_move";
    require_three_regular(dag, op);
    if (v < 2 || v >= dag.vertex_count() || !interior_incoming(dag, v))
        fail(op, v, "not an interior indegree-2 vertex");
    const int q = v - 1;
    if (dag.has_edge(q, v)) fail(op, v, "already connected to its predecessor");
    if (!outgoing_move_sites(dag).empty()) fail(op, v, "outgoing moves are still pending");

    std::vector<int> ins = dag.in_neighbors(v);  // ascending: l1 <= l2
    const int ell2 = ins[1];
    const int u = dag.out_neighbors(q).front();  // smallest head
    std::array<Edge, 2> del{Edge{ell2, v}, Edge{q, u}};
    std::array<Edge, 2> add{Edge{ell2, u}, Edge{q, v}};
    Dag out = rewrite(dag, del, add);
    if (record) {
        *record = MoveRecord{MoveKind::Incoming, v, del, add, count_paths(dag).mu, count_paths(out).mu};
    }
    return out;
}

HamiltonizeResult hamiltonize(const Dag& dag) {
    require_three_regular(dag, "hamiltonize");
    std::vector<int> order = tree_sort_order(dag);
    Dag sorted = relabel(dag, order);
    Dag cur = sorted;
    MoveLog log;

    // sites only ever get fixed by later moves, so taking the smallest
    // remaining site each round is the same as walking the initial list
    for (auto sites = outgoing_move_sites(cur); !sites.empty(); sites = outgoing_move_sites(cur)) {
        MoveRecord rec;
        cur = outgoing_move(cur, sites.front(), &rec);
        log.moves.push_back(std::move(rec));
    }
    for (auto sites = incoming_move_sites(cur); !sites.empty(); sites = incoming_move_sites(cur)) {
        MoveRecord rec;
        cur = incoming_move(cur, sites.front(), &rec);
        log.moves.push_back(std::move(rec));
    }

    if (!is_on_ham_path(cur)) throw std::logic_error("hamiltonize: output is not on a Hamiltonian path");
    PathCounts a = count_paths(sorted), b = count_paths(cur);
    for (int v = 1; v <= cur.vertex_count(); ++v)
        if (b.at(v) < a.at(v)) {
            std::string msg = "hamiltonize: path count decreased at position " + std::to_string(v) + "\nmu before:";
            for (const auto& m : a.mu) msg += " " + m.get_str();
            msg += "\nmu after: ";
            for (const auto& m : b.mu) msg += " " + m.get_str();
            throw std::logic_error(msg);
        }
    return {std::move(sorted), std::move(cur), std::move(log), std::move(order)};
}

}  // namespace monopath
