#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monopath/dag.hpp"

namespace monopath {

enum class TupleClass { BoundaryDeg2, Merged3Regular };

const char* to_string(TupleClass c);

// values[i-1] = rho(i). A Merged3Regular tuple of length n+1 decodes to 2n vertices.
struct RhoTuple {
    std::vector<int> values;
    TupleClass cls = TupleClass::BoundaryDeg2;

    int size() const { return static_cast<int>(values.size()); }
    int rho(int i) const { return values[i - 1]; }
    bool operator==(const RhoTuple&) const = default;
    auto operator<=>(const RhoTuple& o) const { return values <=> o.values; }
};

std::string to_text(const RhoTuple& t);  // "2,4,5,4,5"
RhoTuple parse_tuple(std::string_view text, TupleClass cls);

// Violations of the class invariants (empty when the tuple can be decoded).
std::vector<std::string> class_violations(const RhoTuple& t);

// Merged tuples are canonical when rho(1) >= rho(2); swapping the two source
// arcs gives the same graph. Every BoundaryDeg2 tuple is canonical.
bool is_canonical(const RhoTuple& t);
RhoTuple canonicalize(RhoTuple t);

Dag decode(const RhoTuple& t);
RhoTuple encode(const Dag& dag);

struct ConditionVerdict {
    std::string name;
    bool holds;
    std::string witness;  // empty when the condition holds
};

struct TupleVerdict {
    std::vector<ConditionVerdict> conditions;
    bool valid() const;
};

// Per-condition evaluation for the requested edge connectivity (1, 2 or 3).
// BoundaryDeg2 connectivity is that of the graph closed by a source-sink edge.
TupleVerdict check_tuple(const RhoTuple& t, int connectivity);
bool is_valid(const RhoTuple& t, int connectivity);

struct TupleMu {
    std::vector<BigUint> arc_mu;  // arc_mu[k-1]: paths to the outgoing end of arc k
    BigUint total;
};

TupleMu tuple_mu(const RhoTuple& t);

}  // namespace monopath
