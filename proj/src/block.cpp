#include "monopath/block.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <mutex>

#include <omp.h>

namespace monopath {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr int kOut = -1;
constexpr int kDummy = 0;

// Left-to-right form of the block model. At each real vertex v we either open
// an arc (out-vertex), close an open arc (in-vertex) or take an in-arc from
// the dummy source. Arcs still open at the end go to the dummy sink. The
// interval-crossing constraint is equivalent to: the open-arc sets at two
// times a, b with b - a >= 2 differ, unless a dummy arc lands in between.
// `alive` holds the prefix lengths of the open list that equal the open set of
// such an earlier time; closing the top arc back onto one of them is illegal.
struct Game {
    int K;
    u64 dummy_value;
    bool first_dummy;
    const u64* G;
    const u64* tail;

    u64 w[kMaxBlockLength + 2];
    int src[kMaxBlockLength + 2];
    int m = 0;
    u64 x = 1;
    u64 alive = 0;
    int choice[kMaxBlockLength + 2];

    Game(int k, u64 d, bool fd, const u64* g, const u64* tl)
        : K(k), dummy_value(d), first_dummy(fd), G(g), tail(tl) {}

    u128 bound(int t) const {
        const int r = K - t;
        u128 b = static_cast<u128>(x) * G[r];
        const int lim = std::min(m, r);
        for (int j = 1; j <= lim; ++j) {
            u64 v = std::max(w[m - j], dummy_value);
            b += static_cast<u128>(v) * G[r - j];
        }
        b += static_cast<u128>(dummy_value) * tail[r - lim];
        return b;
    }

    bool can_close(int q) const { return !(q == m - 1 && ((alive >> (m - 1)) & 1)); }
    bool can_dummy(int v) const { return v >= 2 || first_dummy; }
    bool can_open(int v) const { return v < K; }

    struct Saved {
        u64 w, alive;
        int src;
    };

    Saved close(int q, int v) {
        Saved s{w[q], alive, src[q]};
        x += w[q];
        for (int i = q; i + 1 < m; ++i) {
            w[i] = w[i + 1];
            src[i] = src[i + 1];
        }
        --m;
        alive &= (u64(2) << q) - 1;
        choice[v] = s.src;
        return s;
    }
    void undo_close(int q, const Saved& s) {
        for (int i = m; i > q; --i) {
            w[i] = w[i - 1];
            src[i] = src[i - 1];
        }
        w[q] = s.w;
        src[q] = s.src;
        ++m;
        x -= s.w;
        alive = s.alive;
    }
    u64 dummy(int v) {
        u64 saved = alive;
        x += dummy_value;
        alive = 0;
        choice[v] = kDummy;
        return saved;
    }
    void undo_dummy(u64 saved) {
        x -= dummy_value;
        alive = saved;
    }
    void open(int v) {
        w[m] = x;
        src[m] = v;
        alive |= u64(1) << m;
        ++m;
        choice[v] = kOut;
    }
    void undo_open(int) {
        --m;
        alive &= ~(u64(1) << m);
    }

    // replay a recorded choice; returns false if it is not legal here
    bool apply(int v, int c) {
        if (c == kOut) {
            if (!can_open(v)) return false;
            open(v);
        } else if (c == kDummy) {
            if (!can_dummy(v)) return false;
            dummy(v);
        } else {
            int q = -1;
            for (int i = 0; i < m; ++i)
                if (src[i] == c) q = i;
            if (q < 0 || !can_close(q)) return false;
            close(q, v);
        }
        return true;
    }
};

struct Shared {
    std::atomic<u64> incumbent{0};
    std::atomic<u64> nodes{0};
    std::atomic<bool> aborted{false};
    u64 budget;
};

// Best-first pass: proves the optimum value.
struct ValueSearch {
    Game g;
    Shared& sh;
    u64 local_nodes = 0;
    u64 best = 0;
    std::vector<int> best_choice;

    void flush() {
        sh.nodes.fetch_add(local_nodes, std::memory_order_relaxed);
        local_nodes = 0;
    }

    void dfs(int t) {
        if (sh.aborted.load(std::memory_order_relaxed)) return;
        if (++local_nodes >= 4096) {
            flush();
            if (sh.nodes.load(std::memory_order_relaxed) > sh.budget) {
                sh.aborted = true;
                return;
            }
        }
        if (t == g.K) {
            u64 cur = sh.incumbent.load();
            while (g.x > cur && !sh.incumbent.compare_exchange_weak(cur, g.x)) {
            }
            if (g.x > best) {
                best = g.x;
                best_choice.assign(g.choice + 1, g.choice + g.K + 1);
            }
            return;
        }
        if (t > 0 && g.bound(t) < static_cast<u128>(sh.incumbent.load(std::memory_order_relaxed)) + 1) return;
        const int v = t + 1;
        for (int q = g.m - 1; q >= 0; --q) {
            if (!g.can_close(q)) continue;
            auto s = g.close(q, v);
            dfs(t + 1);
            g.undo_close(q, s);
        }
        if (g.can_dummy(v)) {
            u64 s = g.dummy(v);
            dfs(t + 1);
            g.undo_dummy(s);
        }
        if (g.can_open(v)) {
            g.open(v);
            dfs(t + 1);
            g.undo_open(v);
        }
    }
};

// Lexicographic pass: first assignment in in-neighbour order reaching `target`.
struct WitnessSearch {
    Game g;
    u64 target;
    u64 budget;
    u64 nodes = 0;
    bool aborted = false;
    std::vector<int> found;

    bool dfs(int t) {
        if (++nodes > budget) {
            aborted = true;
            return false;
        }
        if (t == g.K) {
            if (g.x != target) return false;
            found.assign(g.choice + 1, g.choice + g.K + 1);
            return true;
        }
        if (g.bound(t) < target) return false;
        const int v = t + 1;
        if (g.can_dummy(v)) {
            u64 s = g.dummy(v);
            bool ok = dfs(t + 1);
            g.undo_dummy(s);
            if (ok || aborted) return ok;
        }
        for (int q = 0; q < g.m; ++q) {
            if (!g.can_close(q)) continue;
            auto s = g.close(q, v);
            bool ok = dfs(t + 1);
            g.undo_close(q, s);
            if (ok || aborted) return ok;
        }
        if (g.can_open(v)) {
            g.open(v);
            bool ok = dfs(t + 1);
            g.undo_open(v);
            if (ok || aborted) return ok;
        }
        return false;
    }
};

struct Tables {
    std::vector<u64> G, tail;
};

// Exact optimum of the game; `seed` is a known lower bound (only strictly better
// leaves are recorded). Returns {value, proven}.
struct RunResult {
    u64 value;
    bool proven;
    u64 nodes;
    std::vector<int> choice;
};

RunResult run_value(int K, u64 d, bool fd, const Tables& tb, u64 seed, u64 budget, Exec exec) {
    Shared sh;
    sh.incumbent = seed;
    sh.budget = budget;
    Game root(K, d, fd, tb.G.data(), tb.tail.data());

    if (exec == Exec::Serial || K < 12) {
        ValueSearch vs{root, sh, 0, 0, {}};
        vs.dfs(0);
        vs.flush();
        return {std::max(seed, vs.best), !sh.aborted.load(), sh.nodes.load(), vs.best_choice};
    }

    // expand a frontier of disjoint subtrees, then search them in parallel
    std::vector<std::vector<int>> frontier{{}};
    int depth = 0;
    while (frontier.size() < 512 && depth < K - 2) {
        std::vector<std::vector<int>> next;
        for (const auto& pre : frontier) {
            Game g = root;
            for (int i = 0; i < depth; ++i) g.apply(i + 1, pre[i]);
            const int v = depth + 1;
            auto push = [&](int c) {
                auto p = pre;
                p.push_back(c);
                next.push_back(std::move(p));
            };
            for (int q = g.m - 1; q >= 0; --q)
                if (g.can_close(q)) push(g.src[q]);
            if (g.can_dummy(v)) push(kDummy);
            if (g.can_open(v)) push(kOut);
        }
        sh.nodes += frontier.size();
        frontier = std::move(next);
        ++depth;
    }

    std::vector<u64> best(frontier.size(), 0);
    std::vector<std::vector<int>> choice(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(frontier.size()); ++i) {
        Game g = root;
        for (int j = 0; j < depth; ++j) g.apply(j + 1, frontier[i][j]);
        ValueSearch vs{g, sh, 0, 0, {}};
        vs.dfs(depth);
        vs.flush();
        best[i] = vs.best;
        choice[i] = std::move(vs.best_choice);
    }
    RunResult r{seed, !sh.aborted.load(), sh.nodes.load(), {}};
    for (size_t i = 0; i < frontier.size(); ++i)
        if (best[i] > r.value || (best[i] == r.value && best[i] > seed && choice[i] < r.choice)) {
            r.value = best[i];
            r.choice = choice[i];
        }
    return r;
}

std::mutex g_table_mutex;
std::vector<u64> g_table{1};  // G[0] = 1

constexpr u64 kTableBudget = 20'000'000'000ULL;

Tables tables_upto(int s_max) {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    while (static_cast<int>(g_table.size()) <= s_max) {
        const int s = static_cast<int>(g_table.size());
        Tables tb;
        tb.G = g_table;
        tb.G.resize(s + 1, 0);
        tb.tail.assign(s + 1, 0);
        for (int r = 1; r <= s; ++r)
            for (int j = 1; j <= r; ++j) tb.tail[r] += tb.G[r - j];
        // G[s] is only read at t = 0, where no bound is evaluated
        RunResult rr = run_value(s, 0, true, tb, g_table.back(), kTableBudget, Exec::Serial);
        // fallback keeps the bound admissible: x at most doubles per step
        g_table.push_back(rr.proven ? rr.value : 2 * g_table.back());
    }
    Tables tb;
    tb.G.assign(g_table.begin(), g_table.begin() + s_max + 1);
    tb.tail.assign(s_max + 1, 0);
    for (int r = 1; r <= s_max; ++r)
        for (int j = 1; j <= r; ++j) tb.tail[r] += tb.G[r - j];
    return tb;
}

Assignment assignment_from_choices(int k, const std::vector<int>& choice) {
    Assignment a(k + 2, std::vector<std::uint8_t>(k + 2, 0));
    for (int i = 0; i <= k; ++i) a[i][i + 1] = 1;
    std::vector<bool> closed(k + 2, false);
    for (int v = 1; v <= k; ++v) {
        int c = choice[v - 1];
        if (c == kDummy) {
            a[0][v] = 1;
        } else if (c > 0) {
            a[c][v] = 1;
            closed[c] = true;
        }
    }
    for (int v = 1; v <= k; ++v)
        if (choice[v - 1] == kOut && !closed[v]) a[v][k + 1] = 1;
    return a;
}

BigUint to_big(u64 v) {
    BigUint b;
    mpz_import(b.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
    return b;
}

BigUint to_big(u128 v) {
    return to_big(static_cast<u64>(v >> 64)) * BigUint("18446744073709551616") + to_big(static_cast<u64>(v));
}

}  // namespace

std::vector<Edge> BlockSolution::extra_edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < static_cast<int>(assignment.size()); ++i)
        for (int j = i + 2; j < static_cast<int>(assignment.size()); ++j)
            if (assignment[i][j]) out.push_back({i, j});
    return out;
}

std::vector<std::uint64_t> coefficient_bounds(int s_max) {
    if (s_max < 0 || s_max > kMaxBlockLength) throw PreconditionError("coefficient_bounds: size out of range");
    return tables_upto(s_max).G;
}

BlockSolution solve_block(const BlockInstance& inst, std::uint64_t budget, Exec exec) {
    const int k = inst.k;
    if (k < 2) throw PreconditionError("solve_block: k must be at least 2");
    if (k > kMaxBlockLength)
        throw PreconditionError("solve_block: k above " + std::to_string(kMaxBlockLength));
    Tables tb = tables_upto(k);

    BlockSolution sol;
    sol.k = k;
    RunResult rr = run_value(k, 1, false, tb, 0, budget, exec);
    sol.proven_optimal = rr.proven;
    sol.nodes_explored = rr.nodes;
    Game root(k, 1, false, tb.G.data(), tb.tail.data());
    const u128 rb = root.bound(0);
    sol.root_bound = to_big(rb);
    if (rr.value == 0) return sol;  // budget ran out before any leaf
    if (rb < rr.value) throw std::logic_error("solve_block: root bound below the optimum");

    std::vector<int> choice = rr.choice;
    if (rr.proven) {
        u64 left = budget > rr.nodes ? budget - rr.nodes : 0;
        WitnessSearch ws{root, rr.value, left, 0, false, {}};
        if (ws.dfs(0)) {
            choice = ws.found;
            sol.canonical_witness = true;
        }
        sol.nodes_explored += ws.nodes;
    }
    sol.f = to_big(rr.value);
    sol.assignment = assignment_from_choices(k, choice);
    return sol;
}

AssignmentCheck check_assignment(int k, const Assignment& a) {
    AssignmentCheck c;
    auto bad = [&](std::string s) { c.violations.push_back(std::move(s)); };
    if (k < 1 || static_cast<int>(a.size()) != k + 2) {
        bad("matrix must be (k+2)x(k+2)");
        return c;
    }
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != k + 2) {
            bad("matrix must be (k+2)x(k+2)");
            return c;
        }
    auto A = [&](int i, int j) { return static_cast<int>(a[i][j]); };
    for (int i = 0; i <= k + 1; ++i)
        for (int j = 0; j <= k + 1; ++j)
            if (A(i, j) > 1) bad("a[" + std::to_string(i) + "][" + std::to_string(j) + "] not binary");
    // (1) forced path edges
    for (int i = 0; i <= k; ++i)
        if (A(i, i + 1) != 1) bad("(1) missing path edge " + std::to_string(i) + "->" + std::to_string(i + 1));
    // (2) degree three at every real vertex
    for (int i = 1; i <= k; ++i) {
        int deg = 0;
        for (int j = 0; j <= i - 1; ++j) deg += A(j, i);
        for (int j = i + 1; j <= k + 1; ++j) deg += A(i, j);
        if (deg != 3) bad("(2) vertex " + std::to_string(i) + " has degree " + std::to_string(deg));
    }
    // (3) forward edges only
    for (int i = 0; i <= k + 1; ++i)
        for (int j = 0; j <= i; ++j)
            if (A(i, j) != 0) bad("(3) backward edge " + std::to_string(i) + "->" + std::to_string(j));
    // (5) at least three edges leave every interval of two or more real vertices
    for (int i = 1; i <= k - 1; ++i)
        for (int j = std::max(i + 1, 2); j <= k; ++j) {
            int cross = 0;
            for (int v = i; v <= j; ++v) {
                for (int l = j + 1; l <= k + 1; ++l) cross += A(v, l);
                for (int l = 0; l <= i - 1; ++l) cross += A(l, v);
            }
            if (cross < 3)
                bad("(5) interval [" + std::to_string(i) + "," + std::to_string(j) + "] has " +
                    std::to_string(cross) + " crossing edges");
        }
    // (4), (6) path counts
    std::vector<BigUint> x(k + 1, BigUint(0));
    x[0] = 1;
    for (int i = 1; i <= k; ++i)
        for (int j = 0; j <= i - 1; ++j)
            if (A(j, i)) x[i] += x[j];
    if (x[1] != 1) bad("(6) x_1 != 1");
    c.x_k = x[k];
    return c;
}

BlockSolution brute_block(int k) {
    if (k < 2 || k > kMaxBruteBlockLength)
        throw PreconditionError("brute_block: k must be in 2.." + std::to_string(kMaxBruteBlockLength));
    // partner[v]: the far end of v's one non-path edge (0 or k+1 for dummies)
    std::vector<int> partner(k + 2, -1);
    Assignment a(k + 2, std::vector<std::uint8_t>(k + 2, 0));
    for (int i = 0; i <= k; ++i) a[i][i + 1] = 1;

    BlockSolution best;
    best.k = k;
    best.proven_optimal = true;
    best.canonical_witness = true;
    std::vector<int> best_key;

    auto crossing_ok = [&](int j) {
        // every interval ending at j is fully decided once vertex j is
        for (int i = 1; i < j; ++i) {
            int cross = 0;
            for (int v = i; v <= j; ++v) {
                for (int l = j + 1; l <= k + 1; ++l) cross += a[v][l];
                for (int l = 0; l <= i - 1; ++l) cross += a[l][v];
            }
            if (cross < 3) return false;
        }
        return true;
    };

    std::function<void(int)> rec = [&](int v) {
        ++best.nodes_explored;
        if (v > k) {
            std::vector<BigUint> x(k + 1, BigUint(0));
            x[0] = 1;
            for (int i = 1; i <= k; ++i)
                for (int j = 0; j < i; ++j)
                    if (a[j][i]) x[i] += x[j];
            // key: in-neighbour of each vertex, out-vertices last
            std::vector<int> key(k);
            for (int i = 1; i <= k; ++i) key[i - 1] = partner[i] < i ? partner[i] : k + 1;
            if (x[k] > best.f || (x[k] == best.f && key < best_key)) {
                best.f = x[k];
                best.assignment = a;
                best_key = key;
            }
            return;
        }
        auto next = [&] {
            if (crossing_ok(v)) rec(v + 1);
        };
        if (partner[v] >= 0) {  // already hit by an earlier arc
            next();
            return;
        }
        if (v >= 2) {
            a[0][v] = 1;
            partner[v] = 0;
            next();
            a[0][v] = 0;
        }
        if (v <= k - 1) {
            a[v][k + 1] = 1;
            partner[v] = k + 1;
            next();
            a[v][k + 1] = 0;
        }
        for (int t = v + 2; t <= k; ++t) {
            if (partner[t] >= 0) continue;
            a[v][t] = 1;
            partner[v] = t;
            partner[t] = v;
            next();
            a[v][t] = 0;
            partner[t] = -1;
        }
        partner[v] = -1;
    };
    rec(1);
    return best;
}

double growth_factor(const BigUint& f, int k) {
    if (f < 1 || k < 1) throw PreconditionError("growth_factor: need f >= 1 and k >= 1");
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, f.get_mpz_t());
    double lg = std::log(mant) + static_cast<double>(exp) * std::log(2.0);
    return std::exp(2.0 * lg / k);
}

namespace {

GrowthReport finish_report(std::vector<GrowthRow> rows, int k_lo, bool solve_trailing, std::uint64_t budget,
                           bool injected) {
    GrowthReport r;
    r.rows = std::move(rows);
    r.injected = injected;
    for (const GrowthRow& row : r.rows) {
        if (!row.proven) r.rigorous = false;
        if (row.g2 > r.bound_base) {
            r.bound_base = row.g2;
            r.argmax_k = row.k;
        }
    }
    for (int k = 2; solve_trailing && k < k_lo; ++k) {
        BlockSolution s = solve_block({k}, budget);
        if (!s.proven_optimal) r.rigorous = false;
        if (s.f > r.final_block_constant) r.final_block_constant = s.f;
    }
    return r;
}

}  // namespace

GrowthReport assemble_bound(int k_lo, int k_hi, std::uint64_t budget) {
    if (k_lo < 2) throw PreconditionError("assemble_bound: k_lo must be at least 2");
    if (k_hi < k_lo + 5)
        throw PreconditionError("assemble_bound: window [" + std::to_string(k_lo) + "," + std::to_string(k_hi) +
                                "] has fewer than 6 block sizes");
    std::vector<GrowthRow> rows;
    for (int k = k_lo; k <= k_hi; ++k) {
        BlockSolution s = solve_block({k}, budget);
        rows.push_back({k, s.f, s.f > 0 ? growth_factor(s.f, k) : 0.0, s.proven_optimal});
    }
    return finish_report(std::move(rows), k_lo, true, budget, false);
}

GrowthReport assemble_bound(const std::vector<std::pair<int, BigUint>>& f_values, bool solve_trailing,
                            std::uint64_t budget) {
    if (f_values.size() < 6) throw PreconditionError("assemble_bound: window has fewer than 6 block sizes");
    std::vector<GrowthRow> rows;
    for (size_t i = 0; i < f_values.size(); ++i) {
        const auto& [k, f] = f_values[i];
        if (i > 0 && k != f_values[i - 1].first + 1)
            throw PreconditionError("assemble_bound: block sizes must be consecutive");
        rows.push_back({k, f, growth_factor(f, k), false});
    }
    return finish_report(std::move(rows), f_values.front().first, solve_trailing, budget, true);
}

std::string growth_csv(const GrowthReport& r) {
    std::string out = "k,f,g2\n";
    char buf[64];
    for (const GrowthRow& row : r.rows) {
        std::snprintf(buf, sizeof buf, "%.6f", row.g2);
        out += std::to_string(row.k) + "," + row.f.get_str() + "," + buf + "\n";
    }
    return out;
}

std::string block_graph_text(const BlockSolution& s) {
    const int k = s.k;
    std::string out = "# block k=" + std::to_string(k) + " f=" + s.f.get_str() +
                      " proven_optimal=" + (s.proven_optimal ? "true" : "false") + "\n";
    std::vector<Edge> real;
    for (int i = 1; i < k; ++i) real.push_back({i, i + 1});
    for (const Edge& e : s.extra_edges()) {
        if (e.tail == 0 || e.head == k + 1)
            out += "# dummy edge " + std::to_string(e.tail) + " " + std::to_string(e.head) + "\n";
        else
            real.push_back(e);
    }
    std::sort(real.begin(), real.end());
    out += "vertices " + std::to_string(k) + "\n";
    for (const Edge& e : real) out += "edge " + std::to_string(e.tail) + " " + std::to_string(e.head) + "\n";
    return out;
}

}  // namespace monopath
