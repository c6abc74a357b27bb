#pragma once

#include <array>
#include <vector>

#include "monopath/dag.hpp"

namespace monopath {

enum class MoveKind { Outgoing, Incoming };

// Outgoing moves never lower mu. An incoming move can; the finished graph still dominates.
struct MoveRecord {
    MoveKind kind;
    int focus;  // b for an outgoing move, v for an incoming move
    std::array<Edge, 2> deleted;
    std::array<Edge, 2> added;
    std::vector<BigUint> mu_before;
    std::vector<BigUint> mu_after;
};

struct MoveLog {
    std::vector<MoveRecord> moves;
};

// order[i] = original label of the vertex placed at position i+1
std::vector<int> tree_sort_order(const Dag& dag);
Dag relabel(const Dag& dag, const std::vector<int>& order);
Dag tree_sort(const Dag& dag);

// Outgoing vertices (interior, outdegree 2) not preceded by an edge from b-1,
// and incoming vertices (indegree 2) not preceded by an edge from v-1.
std::vector<int> outgoing_move_sites(const Dag& dag);
std::vector<int> incoming_move_sites(const Dag& dag);

Dag outgoing_move(const Dag& dag, int b, MoveRecord* record = nullptr);
Dag incoming_move(const Dag& dag, int v, MoveRecord* record = nullptr);

struct HamiltonizeResult {
    Dag sorted;  // input after tree_sort; positions compare 1:1 with output
    Dag output;
    MoveLog log;
    std::vector<int> order;
};

HamiltonizeResult hamiltonize(const Dag& dag);

}  // namespace monopath
