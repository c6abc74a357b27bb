#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "monopath/hamiltonize.hpp"
#include "monopath/rho.hpp"
#include "oracles.hpp"

using namespace monopath;
using namespace fixtures;

namespace {

// Everything hamiltonize promises, checked against the oracles.
void check_hamiltonize(const Dag& d) {
    HamiltonizeResult r = hamiltonize(d);
    REQUIRE(validate(r.output).ok());
    REQUIRE(is_on_ham_path(r.output));
    auto before = oracle::enumerate_paths(r.sorted);
    auto after = oracle::enumerate_paths(r.output);
    for (size_t i = 0; i < before.size(); ++i) REQUIRE(after[i] >= before[i]);
    REQUIRE(count_paths(d).total == count_paths(r.sorted).total);
    REQUIRE(vertex_kinds(r.output) == vertex_kinds(r.sorted));
    if (d.is_simple()) REQUIRE(r.output.is_simple());
    int c_in = oracle::edge_connectivity(d), c_out = oracle::edge_connectivity(r.output);
    if (c_in >= 2) REQUIRE(c_out >= 2);
    if (c_in >= 3) REQUIRE(c_out >= 3);
    // only the final graph dominates; incoming moves may dip on the way
    for (const auto& m : r.log.moves)
        if (m.kind == MoveKind::Outgoing)
            for (size_t i = 0; i < m.mu_before.size(); ++i) REQUIRE(m.mu_after[i] >= m.mu_before[i]);
}

bool mu_weakly_increasing(const Dag& d) {
    auto mu = count_paths(d).mu;
    return std::is_sorted(mu.begin(), mu.end());
}

}  // namespace

TEST_SUITE("hamiltonize") {

TEST_CASE("a single incoming move can lower mu") {
    int dips = 0;
    oracle::for_each_three_regular(8, [&](const Dag& d) {
        for (const auto& m : hamiltonize(d).log.moves)
            for (size_t i = 0; i < m.mu_before.size(); ++i)
                if (m.mu_after[i] < m.mu_before[i]) {
                    CHECK(m.kind == MoveKind::Incoming);
                    ++dips;
                    break;
                }
    });
    CHECK(dips > 0);
}

TEST_CASE("tree_sort on the six-vertex example") {
    Dag d = six_vertex();
    CHECK(tree_sort_order(d) == std::vector<int>{1, 3, 5, 2, 4, 6});
    Dag s = tree_sort(d);
    CHECK(strs(count_paths(s).mu) == std::vector<std::string>{"1", "1", "1", "2", "3", "5"});
    for (const Edge& e : s.edges()) CHECK(e.tail < e.head);
}

TEST_CASE("tree_sort fixed points and totals") {
    Dag w = wedge12();
    REQUIRE(mu_weakly_increasing(w));
    CHECK(tree_sort(w) == w);
    Dag t = tree_sort(truncated_tetrahedron());
    CHECK(mu_weakly_increasing(t));
    CHECK(count_paths(t).total == 21);
}

TEST_CASE("tree blocks are contiguous") {
    oracle::for_each_three_regular(8, [&](const Dag& d) {
        Dag s = tree_sort(d);
        REQUIRE(mu_weakly_increasing(s));
        // each outgoing-only vertex hangs off something earlier in its own block
        for (int v = 2; v <= s.vertex_count(); ++v)
            if (s.indegree(v) == 1) {
                int parent = s.in_neighbors(v).front();
                for (int u = parent + 1; u < v; ++u) REQUIRE(s.indegree(u) == 1);
            }
    });
}

TEST_CASE("outgoing move schematic") {
    // l=1 -> b=3, p=2 -> u1=4, u2=5
    Dag d(6, {{1, 2}, {1, 3}, {1, 6}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 6}, {5, 6}}, DegreeProfile::ThreeRegular);
    REQUIRE(validate(d).ok());
    MoveRecord rec;
    Dag out = outgoing_move(d, 3, &rec);
    CHECK(out.has_edge(1, 4));
    CHECK(out.has_edge(2, 3));
    CHECK(out.has_edge(2, 5));
    CHECK_FALSE(out.has_edge(1, 3));
    CHECK(rec.deleted == std::array<Edge, 2>{Edge{2, 4}, Edge{1, 3}});
    CHECK(rec.added == std::array<Edge, 2>{Edge{1, 4}, Edge{2, 3}});
    CHECK(count_paths(out).mu == count_paths(d).mu);
    // b already follows p
    CHECK_THROWS_AS(outgoing_move(out, 3), PreconditionError);
}

TEST_CASE("incoming move on the six-vertex example") {
    Dag s = tree_sort(six_vertex());
    CHECK(outgoing_move_sites(s).empty());
    REQUIRE(incoming_move_sites(s) == std::vector<int>{4});
    MoveRecord rec;
    Dag out = incoming_move(s, 4, &rec);
    CHECK(rec.deleted == std::array<Edge, 2>{Edge{1, 4}, Edge{3, 6}});
    CHECK(rec.added == std::array<Edge, 2>{Edge{1, 6}, Edge{3, 4}});
    CHECK(is_on_ham_path(out));
    CHECK(count_paths(out).total == 5);
    CHECK_THROWS_AS(incoming_move(out, 4), PreconditionError);
}

TEST_CASE("hamiltonize examples") {
    auto r = hamiltonize(six_vertex());
    CHECK(is_on_ham_path(r.output));
    CHECK(count_paths(r.output).total == 5);
    CHECK(count_paths(r.output).mu == count_paths(r.sorted).mu);
    CHECK(r.log.moves.size() == 1);

    auto t = hamiltonize(truncated_tetrahedron());
    CHECK(t.log.moves.empty());
    CHECK(count_paths(t.output).total == 21);
    CHECK(is_on_ham_path(t.output));
    CHECK_THROWS(hamiltonize(single_edge()));
}

TEST_CASE("property suite, every ThreeRegular graph up to 10 vertices") {
    long seen = 0;
    for (int n = 2; n <= 10; n += 2) oracle::for_each_three_regular(n, [&](const Dag& d) {
        check_hamiltonize(d);
        ++seen;
    });
    CHECK(seen == 1 + 5 + 107 + 4820 + 386123);
}

TEST_CASE("property suite, sampled 12-vertex graphs") {
    // merged tuples of length 7 decode to 12 vertices; reversal and random
    // rewiring move them off the Hamiltonian path
    std::mt19937 rng(20240601);
    std::vector<Dag> seeds;
    oracle::for_each_raw_tuple(7, TupleClass::Merged3Regular, [&](const RhoTuple& t) {
        if (is_canonical(t)) seeds.push_back(decode(t));
    });
    REQUIRE(seeds.size() > 100);
    int tested = 0;
    for (size_t i = 0; i < seeds.size(); ++i) {
        const Dag& base = seeds[i];
        check_hamiltonize(base);
        check_hamiltonize(reverse(base));
        for (int rep = 0; rep < 4; ++rep) {
            Dag d = oracle::two_switch(rep % 2 ? reverse(base) : base, rng, 1 + rep * 3);
            if (!validate(d).ok()) continue;
            check_hamiltonize(d);
            ++tested;
        }
    }
    CHECK(tested > 1000);
}

}  // TEST_SUITE
