#include "monopath/search.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

#include <omp.h>

namespace monopath {

bool lemma4_prunable(const RhoTuple& t) {
    const int L = t.size();
    // merged tuples need L at least twice, so lowering one of those leaves the class
    const int hi = t.cls == TupleClass::Merged3Regular ? L - 1 : L;
    for (int i = 1; i <= hi; ++i) {
        int hits = 0;
        for (int j = 1; j <= i - 1; ++j)
            if (t.rho(j) == i) ++hits;
        if (hits >= 2) return true;
    }
    return false;
}

bool lemma5_prunable(const RhoTuple& t) {
    auto k = vertex_kinds(decode(t)).kinds;
    for (size_t i = 2; i < k.size(); ++i)
        if (k[i] == k[i - 1] && k[i] == k[i - 2]) return true;
    return false;
}

namespace {

struct Walker {
    const SearchSpec& spec;
    std::uint64_t cap;
    std::uint64_t nodes = 0;  // complete tuples examined
    bool aborted = false;
    std::vector<int> vals;

    int low(int i) const {
        return spec.cls == TupleClass::Merged3Regular ? std::max(i, 2) : i;
    }

    bool accept(const RhoTuple& t) const {
        if (!class_violations(t).empty() || !is_canonical(t)) return false;
        if (!is_valid(t, spec.connectivity)) return false;
        if (spec.lemma4 && lemma4_prunable(t)) return false;
        if (spec.lemma5 && lemma5_prunable(t)) return false;
        if (spec.simple_only && !decode(t).is_simple()) return false;
        return true;
    }

    template <class F>
    void dfs(F& visit) {
        if (aborted) return;
        const int L = spec.n;
        const int i = static_cast<int>(vals.size()) + 1;
        if (i > L) {
            if (++nodes > cap) {
                aborted = true;
                return;
            }
            RhoTuple t{vals, spec.cls};
            if (accept(t)) visit(t);
            return;
        }
        int hi = L;
        if (spec.cls == TupleClass::Merged3Regular && i == 2) hi = std::min(hi, vals[0]);
        for (int r = low(i); r <= hi; ++r) {
            vals.push_back(r);
            dfs(visit);
            vals.pop_back();
        }
    }
};

std::vector<std::vector<int>> partitions(const SearchSpec& spec) {
    const int L = spec.n;
    std::vector<std::vector<int>> out;
    auto low = [&](int i) { return spec.cls == TupleClass::Merged3Regular ? std::max(i, 2) : i; };
    for (int a = low(1); a <= L; ++a) {
        if (L < 2) {
            out.push_back({a});
            continue;
        }
        int hi = spec.cls == TupleClass::Merged3Regular ? std::min(L, a) : L;
        for (int b = low(2); b <= hi; ++b) out.push_back({a, b});
    }
    return out;
}

struct Partial {
    BigUint max_total = 0;
    std::vector<RhoTuple> witnesses;
    std::uint64_t candidates = 0;
    std::uint64_t nodes = 0;
    bool aborted = false;
};

Partial explore(const SearchSpec& spec, std::vector<int> prefix) {
    Partial p;
    Walker w{spec, spec.budget, 0, false, std::move(prefix)};
    auto visit = [&](const RhoTuple& t) {
        ++p.candidates;
        BigUint total = tuple_mu(t).total;
        if (p.witnesses.empty() || total > p.max_total) {
            p.max_total = total;
            p.witnesses.clear();
        }
        if (total == p.max_total) p.witnesses.push_back(t);
    };
    w.dfs(visit);
    p.nodes = w.nodes;
    p.aborted = w.aborted;
    return p;
}

void check_spec(const SearchSpec& spec) {
    if (spec.n < 1) throw PreconditionError("search: tuple length must be positive");
    if (spec.connectivity < 1 || spec.connectivity > 3)
        throw PreconditionError("search: connectivity must be 1, 2 or 3");
    if (spec.cls == TupleClass::Merged3Regular && spec.n < 2)
        throw PreconditionError("search: merged tuples have length at least 2");
}

std::string decimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void attach_closed_form(ExtremalReport& r) {
    const SearchSpec& s = r.spec;
    if (s.cls != TupleClass::Merged3Regular || !r.complete || r.witnesses.empty()) return;
    const int n = s.n - 1;  // 2n vertices
    ClosedForm cf;
    Conjecture which;
    if (s.connectivity == 3) which = Conjecture::ThreeEC_Fib;
    else if (s.connectivity == 2) which = s.simple_only ? Conjecture::Simple2EC : Conjecture::TwoEC;
    else which = s.simple_only ? Conjecture::SimpleConn : Conjecture::Conn;

    std::optional<BigUint> exact;
    double approx = 0;
    bool tight = false;
    switch (which) {
        case Conjecture::Conn: {
            if (n < 3) return;  // the statement is for n >= 3
            BigUint v;
            mpz_ui_pow_ui(v.get_mpz_t(), 2, n - 3);
            exact = v * 9;
            cf.formula = "9*2^(n-3)";
            tight = true;
            break;
        }
        case Conjecture::TwoEC: {
            BigUint v;
            mpz_ui_pow_ui(v.get_mpz_t(), 2, n);
            exact = v + 1;
            cf.formula = "2^n+1";
            tight = true;
            break;
        }
        case Conjecture::ThreeEC_Fib:
            exact = fibonacci(n + 2) + 1;
            cf.formula = "F(n+2)+1";
            tight = true;
            break;
        case Conjecture::SimpleConn:
            cf.formula = "16*sqrt(3)^(n-5)";
            if (n % 2 == 1 && n >= 5) {
                BigUint v;
                mpz_ui_pow_ui(v.get_mpz_t(), 3, (n - 5) / 2);
                exact = v * 16;
                tight = true;
            } else {
                approx = 16.0 * std::pow(std::sqrt(3.0), n - 5);
            }
            break;
        case Conjecture::Simple2EC:
            cf.formula = "sqrt(3)^n+1";
            if (n % 2 == 0) {
                BigUint v;
                mpz_ui_pow_ui(v.get_mpz_t(), 3, n / 2);
                exact = v + 1;
                tight = n >= 2;
            } else {
                approx = std::pow(std::sqrt(3.0), n) + 1.0;
            }
            break;
    }
    if (exact) {
        cf.value = exact->get_str();
        cf.exceeded = r.max_total > *exact;
        if (tight) cf.equal = r.max_total == *exact;
    } else {
        cf.value = decimal(approx);
        cf.exceeded = r.max_total.get_d() > approx;
    }
    if (cf.exceeded)
        r.counterexamples.push_back("COUNTEREXAMPLE " + std::string(to_string(which)) + " n=" + std::to_string(n) +
                                    ": max " + r.max_total.get_str() + " exceeds " + cf.formula + " = " +
                                    cf.value + ", witness " + to_text(r.witnesses.front()));
    r.closed_form = cf;
}

ExtremalReport finish(const SearchSpec& spec, const std::vector<Partial>& parts) {
    ExtremalReport r;
    r.spec = spec;
    std::uint64_t nodes = 0;
    bool have = false;
    for (const Partial& p : parts) {
        nodes += p.nodes;
        r.candidates += p.candidates;
        if (p.aborted) r.complete = false;
        if (p.witnesses.empty()) continue;
        if (!have || p.max_total > r.max_total) {
            r.max_total = p.max_total;
            r.witnesses.clear();
            have = true;
        }
        if (p.max_total == r.max_total)
            r.witnesses.insert(r.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
    }
    r.nodes = nodes;
    if (nodes > spec.budget) r.complete = false;
    attach_closed_form(r);
    return r;
}

}  // namespace

void for_each_tuple(const SearchSpec& spec, const std::function<void(const RhoTuple&)>& visit) {
    check_spec(spec);
    SearchSpec unbounded = spec;
    unbounded.budget = UINT64_MAX;
    Walker w{unbounded, UINT64_MAX, 0, false, {}};
    w.dfs(visit);
}

std::vector<RhoTuple> enumerate_tuples(const SearchSpec& spec) {
    std::vector<RhoTuple> out;
    for_each_tuple(spec, [&](const RhoTuple& t) { out.push_back(t); });
    return out;
}

ExtremalReport find_extremal_serial(const SearchSpec& spec) {
    check_spec(spec);
    return finish(spec, {explore(spec, {})});
}

ExtremalReport find_extremal(const SearchSpec& spec) {
    check_spec(spec);
    auto prefixes = partitions(spec);
    std::vector<Partial> parts(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(prefixes.size()); ++i) parts[i] = explore(spec, prefixes[i]);
    return finish(spec, parts);
}

const char* to_string(Conjecture c) {
    switch (c) {
        case Conjecture::Conn: return "Conn";
        case Conjecture::TwoEC: return "TwoEC";
        case Conjecture::ThreeEC_Fib: return "ThreeEC_Fib";
        case Conjecture::SimpleConn: return "SimpleConn";
        case Conjecture::Simple2EC: return "Simple2EC";
    }
    return "?";
}

Conjecture parse_conjecture(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "conn" || s == "connected") return Conjecture::Conn;
    if (s == "twoec" || s == "2ec") return Conjecture::TwoEC;
    if (s == "threeec_fib" || s == "fibonacci" || s == "fib" || s == "3ec") return Conjecture::ThreeEC_Fib;
    if (s == "simpleconn") return Conjecture::SimpleConn;
    if (s == "simple2ec") return Conjecture::Simple2EC;
    throw ValidationError("unknown conjecture '" + std::string(name) + "'");
}

SearchSpec conjecture_spec(Conjecture c, int n) {
    if (n < 1) throw PreconditionError("check_conjecture: n must be positive");
    SearchSpec s;
    s.n = n + 1;
    s.cls = TupleClass::Merged3Regular;
    switch (c) {
        case Conjecture::Conn: s.connectivity = 1; break;
        case Conjecture::TwoEC: s.connectivity = 2; break;
        case Conjecture::ThreeEC_Fib: s.connectivity = 3; break;
        case Conjecture::SimpleConn: s.connectivity = 1; s.simple_only = true; break;
        case Conjecture::Simple2EC: s.connectivity = 2; s.simple_only = true; break;
    }
    return s;
}

ExtremalReport check_conjecture(Conjecture c, int n, std::uint64_t budget) {
    SearchSpec s = conjecture_spec(c, n);
    s.budget = budget;
    return find_extremal(s);
}

const char* to_string(Family f) {
    switch (f) {
        case Family::Wedge: return "Wedge";
        case Family::CorollaryConn: return "CorollaryConn";
        case Family::Corollary2EC: return "Corollary2EC";
        case Family::SimpleConnFamily: return "SimpleConnFamily";
        case Family::Simple2ECFamily: return "Simple2ECFamily";
    }
    return "?";
}

RhoTuple family_generator(Family f, int n) {
    auto range = [&](bool ok, const char* need) {
        if (!ok) throw PreconditionError(std::string(to_string(f)) + ": n=" + std::to_string(n) + " outside " + need);
    };
    RhoTuple t;
    t.cls = TupleClass::Merged3Regular;
    auto& v = t.values;
    switch (f) {
        case Family::Wedge:
            range(n >= 1, "n >= 1");
            v.push_back(n + 1);
            for (int i = 2; i <= n; ++i) v.push_back(i + 1);
            v.push_back(n + 1);
            break;
        case Family::CorollaryConn:
            range(n >= 3, "n >= 3");
            v = {2, 2};
            for (int i = 3; i <= n - 1; ++i) v.push_back(i);
            v.push_back(n + 1);
            v.push_back(n + 1);
            break;
        case Family::Corollary2EC:
            range(n >= 1, "n >= 1");
            v.push_back(n + 1);
            for (int i = 2; i <= n + 1; ++i) v.push_back(i);
            break;
        case Family::SimpleConnFamily:
            range(n >= 5 && n % 2 == 1, "odd n >= 5");
            v = {3, 3, 3};
            for (int p = 5; p <= n - 2; p += 2) v.insert(v.end(), {p, p});
            v.insert(v.end(), {n + 1, n + 1, n + 1});
            break;
        case Family::Simple2ECFamily:
            range(n >= 2 && n % 2 == 0, "even n >= 2");
            v.push_back(n + 1);
            for (int p = 3; p <= n - 1; p += 2) v.insert(v.end(), {p, p});
            v.insert(v.end(), {n + 1, n + 1});
            break;
    }
    return t;
}

BigUint fibonacci(int n) {
    BigUint a = 0, b = 1;  // F_0, F_1
    for (int i = 0; i < n; ++i) {
        BigUint c = a + b;
        a = b;
        b = c;
    }
    return a;
}

}  // namespace monopath
