#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monopath/rho.hpp"

namespace monopath {

inline constexpr std::uint64_t kDefaultSearchBudget = 200'000'000;

struct SearchSpec {
    int n = 1;  // tuple length
    TupleClass cls = TupleClass::BoundaryDeg2;
    int connectivity = 1;
    bool simple_only = false;
    bool lemma4 = false;
    bool lemma5 = false;
    std::uint64_t budget = kDefaultSearchBudget;  // complete tuples examined
};

struct ClosedForm {
    std::string formula;
    std::string value;          // exact integer, or a decimal when irrational
    std::optional<bool> equal;  // empty when the statement does not claim tightness here
    bool exceeded = false;      // search max is above the stated bound
};

struct ExtremalReport {
    SearchSpec spec;
    BigUint max_total = 0;
    std::vector<RhoTuple> witnesses;  // lexicographic
    std::uint64_t candidates = 0;     // tuples passing every filter
    std::uint64_t nodes = 0;
    bool complete = true;
    std::optional<ClosedForm> closed_form;
    std::vector<std::string> counterexamples;
};

bool lemma4_prunable(const RhoTuple& t);
// Not sound together with simple_only on merged 1-connected tuples: length 9 drops 84 to 82.
bool lemma5_prunable(const RhoTuple& t);

// Tuples in lexicographic order; for merged tuples only the canonical representative.
void for_each_tuple(const SearchSpec& spec, const std::function<void(const RhoTuple&)>& visit);
std::vector<RhoTuple> enumerate_tuples(const SearchSpec& spec);

// Parallel over value prefixes; the report is identical to find_extremal_serial.
ExtremalReport find_extremal(const SearchSpec& spec);
ExtremalReport find_extremal_serial(const SearchSpec& spec);

enum class Conjecture { Conn, TwoEC, ThreeEC_Fib, SimpleConn, Simple2EC };
const char* to_string(Conjecture c);
Conjecture parse_conjecture(std::string_view name);

// n is the graph parameter: 2n vertices, merged tuples of length n+1.
SearchSpec conjecture_spec(Conjecture c, int n);
ExtremalReport check_conjecture(Conjecture c, int n, std::uint64_t budget = kDefaultSearchBudget);

enum class Family { Wedge, CorollaryConn, Corollary2EC, SimpleConnFamily, Simple2ECFamily };
const char* to_string(Family f);
RhoTuple family_generator(Family f, int n);

BigUint fibonacci(int n);  // F_1 = F_2 = 1

}  // namespace monopath
