#include "monopath/dag.hpp"

#include <algorithm>
#include <numeric>

namespace monopath {

const char* to_string(DegreeProfile p) {
    return p == DegreeProfile::ThreeRegular ? "three-regular" : "boundary-deg2";
}

Dag::Dag(int vertex_count, std::vector<Edge> edges, DegreeProfile profile)
    : n_(vertex_count), edges_(std::move(edges)), profile_(profile),
      in_(vertex_count + 1, 0), out_(vertex_count + 1, 0) {
    if (n_ < 1) throw ValidationError("vertex count must be positive");
    for (const Edge& e : edges_) {
        if (e.tail < 1 || e.tail > n_ || e.head < 1 || e.head > n_)
            throw ValidationError("edge " + std::to_string(e.tail) + "->" +
                                  std::to_string(e.head) + " has an endpoint outside 1.." +
                                  std::to_string(n_));
        out_[e.tail]++;
        in_[e.head]++;
    }
    std::sort(edges_.begin(), edges_.end());
}

int Dag::multiplicity(int tail, int head) const {
    auto r = std::equal_range(edges_.begin(), edges_.end(), Edge{tail, head});
    return static_cast<int>(r.second - r.first);
}

bool Dag::is_simple() const {
    return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end();
}

std::vector<int> Dag::out_neighbors(int v) const {
    std::vector<int> r;
    for (const Edge& e : edges_)
        if (e.tail == v) r.push_back(e.head);
    return r;
}

std::vector<int> Dag::in_neighbors(int v) const {
    std::vector<int> r;
    for (const Edge& e : edges_)
        if (e.head == v) r.push_back(e.tail);
    std::sort(r.begin(), r.end());
    return r;
}

ValidationReport validate_structure(const Dag& dag) {
    ValidationReport rep;
    const int n = dag.vertex_count();
    if (n < 2) rep.issues.push_back("graph needs at least 2 vertices");
    for (const Edge& e : dag.edges()) {
        std::string name = std::to_string(e.tail) + "->" + std::to_string(e.head);
        if (e.tail == e.head)
            rep.issues.push_back("self-loop " + name);
        else if (e.tail > e.head)
            rep.issues.push_back("edge " + name + " runs against the vertex order");
    }
    for (int v = 2; v <= n; ++v)
        if (dag.indegree(v) == 0)
            rep.issues.push_back("vertex " + std::to_string(v) + " is a second source");
    for (int v = 1; v < n; ++v)
        if (dag.outdegree(v) == 0)
            rep.issues.push_back("vertex " + std::to_string(v) + " is a second sink");
    return rep;
}

ValidationReport validate(const Dag& dag) {
    ValidationReport rep = validate_structure(dag);
    const int n = dag.vertex_count();
    for (int v = 1; v <= n; ++v) {
        int want = 3;
        if (dag.profile() == DegreeProfile::BoundaryDeg2 && (v == 1 || v == n)) want = 2;
        if (dag.degree(v) != want)
            rep.issues.push_back("vertex " + std::to_string(v) + " has degree " +
                                 std::to_string(dag.degree(v)) + ", expected " +
                                 std::to_string(want) + " (" + to_string(dag.profile()) + ")");
    }
    return rep;
}

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) {
        if (!s.empty()) s += "; ";
        s += x;
    }
    return s;
}

void require_structure(const Dag& dag, const char* op) {
    auto rep = validate_structure(dag);
    if (!rep.ok()) throw ValidationError(std::string(op) + ": " + join(rep.issues));
}

void require_valid(const Dag& dag, const char* op) {
    auto rep = validate(dag);
    if (!rep.ok()) throw ValidationError(std::string(op) + ": " + join(rep.issues));
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

}  // namespace

PathCounts count_paths(const Dag& dag) {
    require_structure(dag, "count_paths");
    const int n = dag.vertex_count();
    PathCounts pc;
    pc.mu.assign(n, BigUint(0));
    pc.mu[0] = 1;
    // edges are sorted by tail, and tail < head, so mu[tail] is final when used
    for (const Edge& e : dag.edges()) pc.mu[e.head - 1] += pc.mu[e.tail - 1];
    pc.total = pc.mu[n - 1];
    return pc;
}

Dag reverse(const Dag& dag) {
    require_structure(dag, "reverse");
    const int n = dag.vertex_count();
    std::vector<Edge> es;
    es.reserve(dag.edges().size());
    for (const Edge& e : dag.edges()) es.push_back({n + 1 - e.head, n + 1 - e.tail});
    return Dag(n, std::move(es), dag.profile());
}

bool edge_connectivity_at_least(const Dag& dag, int ell) {
    if (ell < 1 || ell > 3) throw PreconditionError("edge_connectivity_at_least: ell must be 1, 2 or 3");
    require_structure(dag, "edge_connectivity_at_least");
    const int n = dag.vertex_count();
    std::vector<Edge> es = dag.edges();
    if (dag.profile() == DegreeProfile::BoundaryDeg2) es.push_back({1, n});
    const int m = static_cast<int>(es.size());

    auto connected_without = [&](int skip1, int skip2) {
        UnionFind uf(n + 1);
        int comps = n;
        for (int i = 0; i < m; ++i) {
            if (i == skip1 || i == skip2) continue;
            if (uf.unite(es[i].tail, es[i].head)) --comps;
        }
        return comps == 1;
    };

    if (ell == 1) return connected_without(-1, -1);
    for (int a = 0; a < m; ++a) {
        if (ell == 2) {
            if (!connected_without(a, -1)) return false;
            continue;
        }
        for (int b = a + 1; b < m; ++b)
            if (!connected_without(a, b)) return false;
    }
    return true;
}

bool is_on_ham_path(const Dag& dag) {
    require_structure(dag, "is_on_ham_path");
    for (int v = 1; v < dag.vertex_count(); ++v)
        if (!dag.has_edge(v, v + 1)) return false;
    return true;
}

VertexKindSeq vertex_kinds(const Dag& dag) {
    require_valid(dag, "vertex_kinds");
    VertexKindSeq ks;
    for (int v = 1; v <= dag.vertex_count(); ++v) {
        bool in = dag.indegree(v) >= 2, out = dag.outdegree(v) >= 2;
        if (in == out)
            throw PreconditionError("vertex_kinds: vertex " + std::to_string(v) +
                                    " is neither incoming nor outgoing");
        ks.kinds.push_back(in ? 1 : 0);
    }
    return ks;
}

std::string Prop1Witness::describe() const {
    if (kind == Kind::InitialSegment) return "initial-segment [1," + std::to_string(last) + "]";
    return "interval [" + std::to_string(first) + "," + std::to_string(last) + "]";
}

Prop1Result prop1_is_3ec(const Dag& dag) {
    require_valid(dag, "prop1_is_3ec");
    if (dag.profile() != DegreeProfile::ThreeRegular)
        throw PreconditionError("prop1_is_3ec: graph must be three-regular");
    if (!is_on_ham_path(dag))
        throw PreconditionError("prop1_is_3ec: graph must lie on a Hamiltonian path");
    const int n = dag.vertex_count();

    int in2 = 0, out2 = 0;
    for (int k = 2; k < n; ++k) {
        if (dag.indegree(k) == 2) ++in2;
        if (dag.outdegree(k) == 2) ++out2;
        if (in2 > out2) return {false, Prop1Witness{Prop1Witness::Kind::InitialSegment, 1, k}};
    }
    for (int i = 2; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int crossing = 0;
            for (const Edge& e : dag.edges()) {
                bool a = e.tail >= i && e.tail <= j, b = e.head >= i && e.head <= j;
                if (a != b) ++crossing;
            }
            // the two path edges always cross; nothing else may
            if (crossing == 2) return {false, Prop1Witness{Prop1Witness::Kind::Interval, i, j}};
        }
    return {true, std::nullopt};
}

}  // namespace monopath
