#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace monopath {

using BigUint = mpz_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// input data breaks a documented invariant (bad graph, bad tuple, bad file)
struct ValidationError : Error {
    using Error::Error;
};

// operation called outside its precondition
struct PreconditionError : Error {
    using Error::Error;
};

enum class DegreeProfile { ThreeRegular, BoundaryDeg2 };

const char* to_string(DegreeProfile p);

struct Edge {
    int tail = 0;
    int head = 0;
    auto operator<=>(const Edge&) const = default;
};

// Directed multigraph on vertices 1..N. The numbering is the total order;
// edges are kept sorted so equal multisets compare equal.
class Dag {
public:
    Dag(int vertex_count, std::vector<Edge> edges, DegreeProfile profile);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    DegreeProfile profile() const { return profile_; }

    int indegree(int v) const { return in_[v]; }
    int outdegree(int v) const { return out_[v]; }
    int degree(int v) const { return in_[v] + out_[v]; }
    int multiplicity(int tail, int head) const;
    bool has_edge(int tail, int head) const { return multiplicity(tail, head) > 0; }
    bool is_simple() const;

    // heads of edges leaving v / tails of edges entering v, with multiplicity, ascending
    std::vector<int> out_neighbors(int v) const;
    std::vector<int> in_neighbors(int v) const;

    bool operator==(const Dag& o) const {
        return n_ == o.n_ && profile_ == o.profile_ && edges_ == o.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    DegreeProfile profile_;
    std::vector<int> in_, out_;
};

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

// Ordering, self-loop and source/sink invariants only.
ValidationReport validate_structure(const Dag& dag);
// Everything, including the declared degree profile.
ValidationReport validate(const Dag& dag);

struct PathCounts {
    std::vector<BigUint> mu;  // mu[v-1] for vertex v
    BigUint total;
    const BigUint& at(int v) const { return mu[v - 1]; }
};

PathCounts count_paths(const Dag& dag);

Dag reverse(const Dag& dag);

// Brute force: delete every (ell-1)-subset of edges and test connectivity of
// the underlying undirected multigraph. A BoundaryDeg2 graph is tested with one
// extra virtual source-sink edge, which restores 3-regularity.
bool edge_connectivity_at_least(const Dag& dag, int ell);

bool is_on_ham_path(const Dag& dag);

struct VertexKindSeq {
    std::vector<int> kinds;  // kinds[v-1]: 1 incoming, 0 outgoing
    bool operator==(const VertexKindSeq&) const = default;
};

VertexKindSeq vertex_kinds(const Dag& dag);

struct Prop1Witness {
    enum class Kind { InitialSegment, Interval };
    Kind kind;
    int first;  // 1 for an initial segment
    int last;
    std::string describe() const;
};

struct Prop1Result {
    bool three_edge_connected;
    std::optional<Prop1Witness> witness;
};

Prop1Result prop1_is_3ec(const Dag& dag);

}  // namespace monopath
