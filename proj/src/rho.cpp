#include "monopath/rho.hpp"

#include <algorithm>
#include <charconv>

namespace monopath {

const char* to_string(TupleClass c) {
    return c == TupleClass::BoundaryDeg2 ? "boundary-deg2" : "merged";
}

std::string to_text(const RhoTuple& t) {
    std::string s;
    for (int v : t.values) {
        if (!s.empty()) s += ',';
        s += std::to_string(v);
    }
    return s;
}

RhoTuple parse_tuple(std::string_view text, TupleClass cls) {
    RhoTuple t;
    t.cls = cls;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
            throw ValidationError("bad tuple entry '" + std::string(tok) + "'");
        t.values.push_back(v);
        pos = end + 1;
    }
    return t;
}

std::vector<std::string> class_violations(const RhoTuple& t) {
    std::vector<std::string> out;
    const int L = t.size();
    if (L == 0) {
        out.push_back("tuple is empty");
        return out;
    }
    for (int i = 1; i <= L; ++i) {
        int r = t.rho(i);
        if (r < 1 || r > L)
            out.push_back("rho(" + std::to_string(i) + ")=" + std::to_string(r) + " outside 1.." + std::to_string(L));
        else if (r < i)
            out.push_back("rho(" + std::to_string(i) + ")=" + std::to_string(r) + " < " + std::to_string(i));
    }
    if (t.cls == TupleClass::Merged3Regular) {
        if (L < 2) out.push_back("merged tuple needs at least 2 entries");
        if (t.rho(1) < 2) out.push_back("rho(1) < 2");
        if (std::count(t.values.begin(), t.values.end(), L) < 2)
            out.push_back("value " + std::to_string(L) + " appears fewer than twice");
    }
    return out;
}

bool is_canonical(const RhoTuple& t) {
    return t.cls == TupleClass::BoundaryDeg2 || t.size() < 2 || t.values[0] >= t.values[1];
}

RhoTuple canonicalize(RhoTuple t) {
    if (!is_canonical(t)) std::swap(t.values[0], t.values[1]);
    return t;
}

namespace {

void require_class(const RhoTuple& t, const char* op) {
    auto v = class_violations(t);
    if (!v.empty()) throw ValidationError(std::string(op) + ": " + v.front());
}

// Boundary-degree-2 decode on 2L vertices.
std::vector<Edge> decode_boundary(const std::vector<int>& rho) {
    const int L = static_cast<int>(rho.size());
    std::vector<int> out_pos(L + 1), in_pos(L + 1);
    int pos = 0;
    for (int p = 1; p <= L; ++p) {
        out_pos[p] = ++pos;
        for (int i = 1; i <= L; ++i)  // equal-rho heads in increasing arc order
            if (rho[i - 1] == p) in_pos[i] = ++pos;
    }
    std::vector<Edge> es;
    for (int v = 1; v < 2 * L; ++v) es.push_back({v, v + 1});
    for (int i = 1; i <= L; ++i) es.push_back({out_pos[i], in_pos[i]});
    return es;
}

}  // namespace

Dag decode(const RhoTuple& t) {
    require_class(t, "decode");
    const int L = t.size();
    std::vector<Edge> es = decode_boundary(t.values);
    if (t.cls == TupleClass::BoundaryDeg2) return Dag(2 * L, std::move(es), DegreeProfile::BoundaryDeg2);

    // merge the first two and the last two vertices, dropping the path edge inside each pair
    const int n0 = 2 * L;
    auto map = [&](int v) { return v <= 2 ? 1 : (v >= n0 - 1 ? n0 - 2 : v - 1); };
    std::vector<Edge> merged;
    bool dropped_first = false, dropped_last = false;
    for (const Edge& e : es) {
        if (!dropped_first && e == Edge{1, 2}) {
            dropped_first = true;
            continue;
        }
        if (!dropped_last && e == Edge{n0 - 1, n0}) {
            dropped_last = true;
            continue;
        }
        merged.push_back({map(e.tail), map(e.head)});
    }
    return Dag(n0 - 2, std::move(merged), DegreeProfile::ThreeRegular);
}

RhoTuple encode(const Dag& dag) {
    auto rep = validate(dag);
    if (!rep.ok()) throw ValidationError("encode: " + rep.issues.front());
    if (!is_on_ham_path(dag)) throw PreconditionError("encode: graph is not on a Hamiltonian path");
    const int n = dag.vertex_count();
    const bool merged = dag.profile() == DegreeProfile::ThreeRegular;

    // arcs: all edges minus one copy of each path edge
    std::vector<Edge> arcs;
    {
        const auto& es = dag.edges();
        for (size_t i = 0; i < es.size(); ++i) {
            bool path = es[i].head == es[i].tail + 1 && (i == 0 || es[i - 1] != es[i]);
            if (!path) arcs.push_back(es[i]);
        }
    }

    // labels per vertex; the merged source carries labels 1 and 2
    std::vector<int> first_label(n + 1, 0), labels_before(n + 2, 0);
    int next = 1;
    for (int v = 1; v <= n; ++v) {
        labels_before[v] = next - 1;
        int k = 0;
        for (const Edge& a : arcs)
            if (a.tail == v) ++k;
        if (k > 0) first_label[v] = next;
        next += k;
    }
    const int L = next - 1;
    RhoTuple t;
    t.cls = merged ? TupleClass::Merged3Regular : TupleClass::BoundaryDeg2;
    t.values.assign(L, 0);
    std::vector<int> source_heads;
    for (const Edge& a : arcs) {
        if (merged && a.tail == 1) {
            source_heads.push_back(a.head);
            continue;
        }
        t.values[first_label[a.tail] - 1] = labels_before[a.head];
    }
    if (merged) {
        if (source_heads.size() != 2) throw PreconditionError("encode: source must carry two arcs");
        std::sort(source_heads.begin(), source_heads.end());
        t.values[0] = labels_before[source_heads[1]];
        t.values[1] = labels_before[source_heads[0]];
    }
    auto v = class_violations(t);
    if (!v.empty()) throw PreconditionError("encode: graph does not fit the tuple class: " + v.front());
    return t;
}

bool TupleVerdict::valid() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const ConditionVerdict& c) { return c.holds; });
}

TupleVerdict check_tuple(const RhoTuple& t, int connectivity) {
    if (connectivity < 1 || connectivity > 3) throw PreconditionError("connectivity must be 1, 2 or 3");
    TupleVerdict out;
    auto base = class_violations(t);
    out.conditions.push_back({"class-invariants", base.empty(), base.empty() ? "" : base.front()});
    if (!base.empty()) return out;

    const int L = t.size();
    const bool merged = t.cls == TupleClass::Merged3Regular;
    auto landed_by = [&](int k) {  // #{j : rho(j) <= k}
        return static_cast<int>(std::count_if(t.values.begin(), t.values.end(), [k](int r) { return r <= k; }));
    };

    if (merged && connectivity >= 2) {
        // no k whose first k arcs all land by label k: that cut is a bridge
        ConditionVerdict c{"no-bridge", true, ""};
        for (int k = 1; k < L && c.holds; ++k) {
            bool all = true;
            for (int j = 1; j <= k; ++j) all = all && t.rho(j) <= k;
            if (all) c = {"no-bridge", false, "k=" + std::to_string(k)};
        }
        out.conditions.push_back(c);
    }
    if (merged && connectivity == 3) {
        // at least two arcs leave every initial segment
        ConditionVerdict c{"initial-segment", true, ""};
        for (int k = 2; k < L && c.holds; ++k)
            if (k - landed_by(k) < 2) c = {"initial-segment", false, "k=" + std::to_string(k)};
        out.conditions.push_back(c);
    }
    if (connectivity == 3) {
        ConditionVerdict c{"interval", true, ""};
        for (int i = 1; i <= L && c.holds; ++i)
            for (int k = i; k <= L && c.holds; ++k) {
                if (k - i >= L - 1) continue;
                bool closed = true;
                int inside = 0;
                for (int j = 1; j <= L; ++j) {
                    bool lands = t.rho(j) >= i && t.rho(j) <= k;
                    if (lands) ++inside;
                    if (lands != (j >= i && j <= k)) closed = false;
                }
                if (closed && inside == k - i + 1)
                    c = {"interval", false, "[" + std::to_string(i) + "," + std::to_string(k) + "]"};
            }
        out.conditions.push_back(c);
    }
    return out;
}

bool is_valid(const RhoTuple& t, int connectivity) { return check_tuple(t, connectivity).valid(); }

TupleMu tuple_mu(const RhoTuple& t) {
    require_class(t, "tuple_mu");
    const int L = t.size();
    TupleMu r;
    r.arc_mu.assign(L, BigUint(0));
    r.total = 1;
    for (int i = 1; i <= L; ++i) {
        // mu(alpha_i) = 1 + sum of arcs landed before the outgoing end of arc i
        BigUint s = 1;
        for (int k = 1; k < i; ++k)
            if (t.rho(k) <= i - 1) s += r.arc_mu[k - 1];
        r.arc_mu[i - 1] = s;
        r.total += s;
    }
    return r;
}

}  // namespace monopath
