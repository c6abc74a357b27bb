// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "monopath/block.hpp"
#include "monopath/hamiltonize.hpp"
#include "monopath/rho.hpp"
#include "monopath/search.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace monopath;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
    void fail(const std::string& why) {
        if (pass) note = why;  // keep the first reason
        pass = false;
    }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > limit_s) o.fail("took " + std::to_string(dt) + " s, limit " + std::to_string(limit_s) + " s");
    if (!o.pass) ++failures;
    std::printf("criterion %2d %s: %s (%.2f s)%s%s\n", id, o.pass ? "PASS" : "FAIL", title, dt,
                o.note.empty() ? "" : " -- ", o.note.c_str());
    std::fflush(stdout);
}

RhoTuple tup(const char* s, TupleClass c) { return parse_tuple(s, c); }

std::string str(const BigUint& v) { return v.get_str(); }

}  // namespace

int main() {
    const auto BD = TupleClass::BoundaryDeg2;
    const auto MG = TupleClass::Merged3Regular;

    criterion(1, "path-count golden values", 1.0, [&](Outcome& o) {
        struct Case {
            std::string name;
            Dag dag;
            int want;
        };
        std::vector<Case> cases = {
            {"truncated tetrahedron", fixtures::truncated_tetrahedron(), 21},
            {"wedge-12", fixtures::wedge12(), 22},
            {"(4,4,4,4)", decode(tup("4,4,4,4", BD)), 5},
            {"(2,2,3,4,6,6)", decode(tup("2,2,3,4,6,6", MG)), 36},
            {"(5,2,3,4,5)", decode(tup("5,2,3,4,5", MG)), 17},
            {"(3,3,3,6,6,6)", decode(tup("3,3,3,6,6,6", MG)), 16},
            {"(5,3,3,5,5)", decode(tup("5,3,3,5,5", MG)), 10},
            {"(2,4,5,4,5)", decode(tup("2,4,5,4,5", BD)), 12},
        };
        for (const auto& c : cases) {
            BigUint got = count_paths(c.dag).total;
            if (got != c.want) o.fail(c.name + " gave " + str(got));
            if (oracle::enumerate_paths(c.dag).back() != got) o.fail(c.name + " disagrees with path enumeration");
        }
    });

    criterion(2, "tuple_mu equals count_paths on decodes (n <= 8, both classes)", 300, [&](Outcome& o) {
        long n = 0;
        for (int len = 1; len <= 8; ++len)
            oracle::for_each_raw_tuple(len, BD, [&](const RhoTuple& t) {
                ++n;
                if (tuple_mu(t).total != count_paths(decode(t)).total) o.fail("mismatch at " + to_text(t));
            });
        for (int len = 2; len <= 9; ++len)
            oracle::for_each_raw_tuple(len, MG, [&](const RhoTuple& t) {
                ++n;
                if (tuple_mu(t).total != count_paths(decode(t)).total) o.fail("mismatch at " + to_text(t));
            });
        o.note = o.pass ? std::to_string(n) + " tuples" : o.note;
    });

    criterion(3, "codec roundtrip (n <= 7, canonical tuples)", 60, [&](Outcome& o) {
        long n = 0;
        auto check = [&](const RhoTuple& t) {
            if (!is_canonical(t)) return;
            ++n;
            if (!(encode(decode(t)) == t)) o.fail("roundtrip broke at " + to_text(t));
        };
        for (int len = 1; len <= 7; ++len) oracle::for_each_raw_tuple(len, BD, check);
        for (int len = 2; len <= 8; ++len) oracle::for_each_raw_tuple(len, MG, check);
        o.note = o.pass ? std::to_string(n) + " tuples" : o.note;
    });

    criterion(4, "connectivity oracles agree", 300, [&](Outcome& o) {
        long n = 0;
        for (int len = 2; len <= 8; ++len)  // merged length 8 decodes to 14 vertices
            oracle::for_each_raw_tuple(len, MG, [&](const RhoTuple& t) {
                if (!is_canonical(t)) return;
                Dag d = decode(t);
                ++n;
                if (prop1_is_3ec(d).three_edge_connected != edge_connectivity_at_least(d, 3))
                    o.fail("prop1 vs brute at " + to_text(t));
            });
        for (int len = 1; len <= 7; ++len)
            for (auto cls : {BD, MG}) {
                if (cls == MG && len < 2) continue;
                oracle::for_each_raw_tuple(len + (cls == MG ? 1 : 0), cls, [&](const RhoTuple& t) {
                    ++n;
                    if (is_valid(t, 3) != edge_connectivity_at_least(decode(t), 3))
                        o.fail("is_valid vs brute at " + to_text(t));
                });
            }
        o.note = o.pass ? std::to_string(n) + " graphs" : o.note;
    });

    criterion(5, "hamiltonize property suite (<= 12 vertices)", 600, [&](Outcome& o) {
        long n = 0;
        auto check = [&](const Dag& d) {
            ++n;
            HamiltonizeResult r = hamiltonize(d);
            const Dag& out = r.output;
            if (!is_on_ham_path(out)) o.fail("not Hamiltonian");
            auto a = count_paths(r.sorted).mu, b = count_paths(out).mu;
            for (size_t i = 0; i < a.size(); ++i)
                if (b[i] < a[i]) o.fail("mu decreased");
            if (!(vertex_kinds(out) == vertex_kinds(r.sorted))) o.fail("kind sequence changed");
            if (d.is_simple() && !out.is_simple()) o.fail("simplicity lost");
            for (int ell = 2; ell <= 3; ++ell)
                if (edge_connectivity_at_least(d, ell) && !edge_connectivity_at_least(out, ell))
                    o.fail(std::to_string(ell) + "-edge connectivity lost");
        };
        for (int v = 2; v <= 10; v += 2) oracle::for_each_three_regular(v, check);
        std::mt19937 rng(20240601);
        oracle::for_each_raw_tuple(7, MG, [&](const RhoTuple& t) {
            if (!is_canonical(t)) return;
            Dag d = decode(t);
            check(d);
            check(reverse(d));
            for (int rep = 0; rep < 4; ++rep) {
                Dag e = oracle::two_switch(rep % 2 ? reverse(d) : d, rng, 1 + 3 * rep);
                if (validate(e).ok()) check(e);
            }
        });
        o.note = o.pass ? std::to_string(n) + " graphs" : o.note;
    });

    criterion(6, "extremal families reproduced by exhaustive search", 600, [&](Outcome& o) {
        for (int n = 3; n <= 7; ++n) {
            auto r = check_conjecture(Conjecture::Conn, n);
            BigUint want = BigUint(9) * (BigUint(1) << (n - 3));
            if (!r.complete || r.max_total != want)
                o.fail("connected n=" + std::to_string(n) + " max " + str(r.max_total) + " want " + str(want));
        }
        for (int n = 1; n <= 7; ++n) {
            auto r = check_conjecture(Conjecture::TwoEC, n);
            BigUint want = (BigUint(1) << n) + 1;
            if (!r.complete || r.max_total != want)
                o.fail("2-edge-connected n=" + std::to_string(n) + " max " + str(r.max_total) + " want " + str(want));
        }
    });

    criterion(7, "3-edge-connected max vs F(n+2)+1 (n = 3..8, reported)", 1800, [&](Outcome& o) {
        std::string seen;
        for (int n = 3; n <= 8; ++n) {
            auto r = check_conjecture(Conjecture::ThreeEC_Fib, n);
            if (!r.complete) o.fail("search incomplete at n=" + std::to_string(n));
            for (const auto& c : r.counterexamples) std::printf("  %s\n", c.c_str());
            seen += (seen.empty() ? "" : " ") + str(r.max_total);
            if (r.closed_form && r.closed_form->equal == false && r.counterexamples.empty())
                std::printf("  n=%d: max %s below F(n+2)+1\n", n, str(r.max_total).c_str());
        }
        if (o.pass) o.note = "maxima " + seen;
    });

    criterion(8, "prune soundness (n <= 7, all classes)", 600, [&](Outcome& o) {
        for (auto cls : {BD, MG})
            for (int conn = 1; conn <= 3; ++conn)
                for (bool simple : {false, true})
                    for (int n = 1; n <= 7; ++n) {
                        SearchSpec s;
                        s.n = cls == MG ? n + 1 : n;
                        s.cls = cls;
                        s.connectivity = conn;
                        s.simple_only = simple;
                        BigUint plain = find_extremal(s).max_total;
                        s.lemma4 = s.lemma5 = true;
                        BigUint pruned = find_extremal(s).max_total;
                        if (plain != pruned)
                            o.fail(std::string(to_string(cls)) + " conn " + std::to_string(conn) +
                                   (simple ? " simple" : "") + " n=" + std::to_string(n) + ": " + str(pruned) +
                                   " vs " + str(plain));
                    }
    });

    criterion(9, "solve_block equals brute_block (k = 2..12)", 600, [&](Outcome& o) {
        for (int k = 2; k <= 12; ++k) {
            auto s = solve_block({k});
            auto b = brute_block(k);
            if (s.f != b.f || !s.proven_optimal)
                o.fail("k=" + std::to_string(k) + ": " + str(s.f) + " vs " + str(b.f));
        }
    });

    criterion(10, "published block values (k = 35..40) and fast subset k = 18..24", 4 * 3600, [&](Outcome& o) {
        const int published[] = {8233, 11117, 14033, 17293, 22781, 28726};
        std::string got;
        for (int k = 18; k <= 24; ++k) {
            auto s = solve_block({k});
            if (!s.proven_optimal || !check_assignment(k, s.assignment).ok() || s.root_bound < s.f)
                o.fail("fast subset k=" + std::to_string(k));
        }
        for (int k = 35; k <= 40; ++k) {
            auto s = solve_block({k});
            got += (got.empty() ? "" : " ") + str(s.f);
            if (!s.proven_optimal) o.fail("k=" + std::to_string(k) + " not proven");
            if (!check_assignment(k, s.assignment).ok()) o.fail("k=" + std::to_string(k) + " witness infeasible");
            if (s.f != published[k - 35])
                o.fail("k=" + std::to_string(k) + ": solved " + str(s.f) + " (proven, witness checked), printed " +
                       std::to_string(published[k - 35]));
        }
        std::printf("  f(35..40) = %s\n", got.c_str());
    });

    criterion(11, "growth arithmetic", 1.0, [&](Outcome& o) {
        const int f[] = {8233, 11117, 14033, 17293, 22781, 28726};
        const double g2[] = {1.6740, 1.6779, 1.6756, 1.6713, 1.6729, 1.6707};
        std::vector<std::pair<int, BigUint>> fv;
        for (int i = 0; i < 6; ++i) {
            double g = growth_factor(f[i], 35 + i);
            if (std::abs(g - g2[i]) > 2e-4) o.fail("k=" + std::to_string(35 + i) + " g2 " + std::to_string(g));
            fv.push_back({35 + i, f[i]});
        }
        GrowthReport r = assemble_bound(fv);
        if (r.argmax_k != 36 || std::abs(r.bound_base - 1.6779) > 1e-4)
            o.fail("bound base " + std::to_string(r.bound_base) + " at k=" + std::to_string(r.argmax_k));
        if (o.pass) o.note = "base " + std::to_string(r.bound_base) + " at k=36";
    });

    criterion(12, "k = 21 anchor", 1800, [&](Outcome& o) {
        auto s = solve_block({21});
        double g = growth_factor(s.f, 21);
        if (!s.proven_optimal) o.fail("not proven");
        if (std::abs(g - 1.7108) > 5e-4) o.fail("g2 " + std::to_string(g));
        o.note = "f(21) = " + str(s.f) + ", g2 = " + std::to_string(g);
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
