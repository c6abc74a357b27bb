#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monopath/dag.hpp"

namespace monopath {

inline constexpr std::uint64_t kDefaultBlockBudget = 50'000'000'000ULL;
inline constexpr int kMaxBlockLength = 60;  // keeps every x below 2^60
inline constexpr int kMaxBruteBlockLength = 14;

struct BlockInstance {
    int k = 2;  // real vertices 1..k; 0 and k+1 are the dummy ends
};

// a[i][j] for 0 <= i, j <= k+1
using Assignment = std::vector<std::vector<std::uint8_t>>;

struct BlockSolution {
    int k = 0;
    BigUint f = 0;
    Assignment assignment;
    bool proven_optimal = false;
    bool canonical_witness = false;  // witness is the lexicographically smallest optimum
    std::uint64_t nodes_explored = 0;
    BigUint root_bound = 0;  // pruning bound at the empty prefix

    // edges off the forced path 0 -> 1 -> ... -> k+1
    std::vector<Edge> extra_edges() const;
};

enum class Exec { Serial, Parallel };

BlockSolution solve_block(const BlockInstance& inst, std::uint64_t budget = kDefaultBlockBudget,
                          Exec exec = Exec::Parallel);

// Exhaustive enumeration of every feasible assignment, no bounding.
BlockSolution brute_block(int k);

struct AssignmentCheck {
    std::vector<std::string> violations;
    BigUint x_k = 0;
    bool ok() const { return violations.empty(); }
};

// Re-evaluates all constraint families from scratch.
AssignmentCheck check_assignment(int k, const Assignment& a);

// G[s]: largest coefficient of the current path count s steps later.
std::vector<std::uint64_t> coefficient_bounds(int s_max);

double growth_factor(const BigUint& f, int k);

struct GrowthRow {
    int k;
    BigUint f;
    double g2;
    bool proven;
};

struct GrowthReport {
    std::vector<GrowthRow> rows;
    int argmax_k = 0;
    double bound_base = 0;
    BigUint final_block_constant = 0;  // max f(k) over 2 <= k < k_lo; 0 when not solved
    bool rigorous = true;              // every f used was proven optimal
    bool injected = false;
};

GrowthReport assemble_bound(int k_lo, int k_hi, std::uint64_t budget = kDefaultBlockBudget);
// Rows from externally supplied f values. Nothing is solved unless solve_trailing is set.
GrowthReport assemble_bound(const std::vector<std::pair<int, BigUint>>& f_values, bool solve_trailing = false,
                            std::uint64_t budget = kDefaultBlockBudget);

std::string growth_csv(const GrowthReport& r);
std::string block_graph_text(const BlockSolution& s);

}  // namespace monopath
