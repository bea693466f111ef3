#include "dsrg/verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace dsrg {

std::string ClassifyResult::str() const {
    switch (kind) {
        case ClassifyKind::Dsrg:
            return "DSRG" + params.str();
        case ClassifyKind::Srg: {
            std::ostringstream os;
            os << "SRG(" << params.n << ',' << params.k << ',' << params.lambda << ','
               << params.mu << ')';
            return os.str();
        }
        case ClassifyKind::CompleteGraph:
            return "CompleteGraph(" + std::to_string(params.n) + ")";
        case ClassifyKind::NotStronglyRegular:
            return "NotStronglyRegular(" + (witness ? witness->reason : std::string()) + ")";
    }
    return {};
}

ClassifyResult classify(const Digraph& g) {
    ClassifyResult res;
    const int n = g.order();
    res.params.n = n;

    auto not_srg = [&](int u, int v, std::string reason) {
        res.kind = ClassifyKind::NotStronglyRegular;
        res.witness = RegularityWitness{u, v, std::move(reason)};
        return res;
    };

    const std::int64_t k = g.out_degree(0);
    DenseBinaryMatrix at = transpose(g.adj());
    for (int v = 0; v < n; ++v) {
        if (g.out_degree(v) != k)
            return not_srg(v, 0, "out-degree " + std::to_string(g.out_degree(v)) +
                                     " differs from " + std::to_string(k));
        if (at.row_popcount(v) != k)
            return not_srg(v, 0, "in-degree " + std::to_string(at.row_popcount(v)) +
                                     " differs from out-degree " + std::to_string(k));
    }
    res.params.k = k;

    if (k == n - 1) {
        // zero diagonal + full degree leaves no off-diagonal zero entry
        res.kind = ClassifyKind::CompleteGraph;
        res.params.t = k;
        res.params.lambda = n - 2;
        res.params.mu = 0;  // undefined; kept zero for value semantics
        return res;
    }

    IntegerMatrix a2 = matmul(g.adj(), g.adj());

    const std::int64_t t = a2.at(0, 0);
    for (int v = 0; v < n; ++v)
        if (a2.at(v, v) != t)
            return not_srg(v, v, "digon count " + std::to_string(a2.at(v, v)) +
                                     " differs from " + std::to_string(t));
    res.params.t = t;

    std::int64_t lambda = -1, mu = -1;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            std::int64_t paths = a2.at(u, v);
            if (g.arc(u, v)) {
                if (lambda < 0) lambda = paths;
                if (paths != lambda)
                    return not_srg(u, v, "lambda " + std::to_string(paths) +
                                             " differs from " + std::to_string(lambda));
            } else {
                if (mu < 0) mu = paths;
                if (paths != mu)
                    return not_srg(u, v, "mu " + std::to_string(paths) + " differs from " +
                                             std::to_string(mu));
            }
        }
    res.params.lambda = lambda < 0 ? 0 : lambda;  // no arcs at all (k=0)
    res.params.mu = mu < 0 ? 0 : mu;
    res.kind = t == k ? ClassifyKind::Srg : ClassifyKind::Dsrg;
    return res;
}

namespace {

// Precomputed views used by the isomorphism search.
struct IsoGraph {
    const Digraph* g;
    DenseBinaryMatrix at;  // transposed adjacency, for in-neighbour scans

    explicit IsoGraph(const Digraph& gr) : g(&gr), at(transpose(gr.adj())) {}
};

using Colors = std::vector<int>;

// Signature of a vertex under the current colouring: own colour plus the
// sorted colour multisets of out- and in-neighbours.
std::vector<int> vertex_signature(const IsoGraph& ig, const Colors& col, int v) {
    const int n = ig.g->order();
    std::vector<int> sig;
    sig.reserve(2 * ig.g->out_degree(v) + 2);
    sig.push_back(col[v]);
    std::vector<int> outc, inc;
    for (int u = 0; u < n; ++u) {
        if (ig.g->arc(v, u)) outc.push_back(col[u]);
        if (ig.at.get(v, u)) inc.push_back(col[u]);
    }
    std::sort(outc.begin(), outc.end());
    std::sort(inc.begin(), inc.end());
    sig.insert(sig.end(), outc.begin(), outc.end());
    sig.push_back(-1);
    sig.insert(sig.end(), inc.begin(), inc.end());
    return sig;
}

// One joint refinement pass to a fixpoint. Colour ids stay comparable across
// the two graphs because they are assigned from the pooled sorted signature
// list. Returns false as soon as the per-colour class sizes diverge.
// Refinement never merges classes (the old colour is part of the signature),
// so a stable class count means a stable partition.
bool joint_refine(const IsoGraph& a, const IsoGraph& b, Colors& ca, Colors& cb) {
    const int n = a.g->order();
    for (;;) {
        int old_classes;
        {
            Colors tmp = ca;
            std::sort(tmp.begin(), tmp.end());
            old_classes = static_cast<int>(
                std::unique(tmp.begin(), tmp.end()) - tmp.begin());
        }

        std::vector<std::vector<int>> sa(n), sb(n);
        for (int v = 0; v < n; ++v) {
            sa[v] = vertex_signature(a, ca, v);
            sb[v] = vertex_signature(b, cb, v);
        }
        std::vector<std::vector<int>> uniq;
        uniq.reserve(2 * n);
        uniq.insert(uniq.end(), sa.begin(), sa.end());
        uniq.insert(uniq.end(), sb.begin(), sb.end());
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

        auto id_of = [&](const std::vector<int>& s) {
            return static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), s) - uniq.begin());
        };

        Colors na(n), nb(n);
        std::vector<int> cnt_a(uniq.size(), 0), cnt_b(uniq.size(), 0);
        for (int v = 0; v < n; ++v) {
            na[v] = id_of(sa[v]);
            nb[v] = id_of(sb[v]);
            ++cnt_a[na[v]];
            ++cnt_b[nb[v]];
        }
        if (cnt_a != cnt_b) return false;

        ca = std::move(na);
        cb = std::move(nb);
        if (static_cast<int>(uniq.size()) == old_classes) return true;
    }
}

bool verify_mapping(const Digraph& g1, const Digraph& g2, const std::vector<int>& map) {
    const int n = g1.order();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g1.arc(u, v) != g2.arc(map[u], map[v])) return false;
    return true;
}

struct IsoSearch {
    const IsoGraph& a;
    const IsoGraph& b;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    // Returns a mapping if one exists below this branch; empty optional
    // means proven absence (unless out_of_budget got set).
    std::optional<std::vector<int>> run(Colors ca, Colors cb) {
        if (!joint_refine(a, b, ca, cb)) return std::nullopt;
        const int n = a.g->order();

        // smallest colour class of size >= 2
        std::vector<int> class_size(2 * n + 2, 0);
        for (int v = 0; v < n; ++v) ++class_size[ca[v]];
        int best_color = -1, best = n + 1;
        for (int v = 0; v < n; ++v) {
            int c = ca[v];
            if (class_size[c] >= 2 && class_size[c] < best) {
                best = class_size[c];
                best_color = c;
            }
        }

        if (best_color < 0) {  // discrete colouring: read off the bijection
            std::vector<int> pos(2 * n + 2, -1), map(n, -1);
            for (int v = 0; v < n; ++v) pos[cb[v]] = v;
            for (int v = 0; v < n; ++v) map[v] = pos[ca[v]];
            if (verify_mapping(*a.g, *b.g, map)) return map;
            return std::nullopt;
        }

        int v = 0;
        while (ca[v] != best_color) ++v;  // fixed representative in g1
        int fresh = 2 * n + 2;

        for (int u = 0; u < n; ++u) {
            if (cb[u] != best_color) continue;
            if (++nodes > budget) {
                out_of_budget = true;
                return std::nullopt;
            }
            Colors na = ca, nb = cb;
            na[v] = fresh;
            nb[u] = fresh;
            auto r = run(std::move(na), std::move(nb));
            if (r) return r;
            if (out_of_budget) return std::nullopt;
        }
        return std::nullopt;
    }
};

}  // namespace

IsoResult isomorphic(const Digraph& g1, const Digraph& g2, IsoOptions opts) {
    IsoResult res;
    if (g1.order() != g2.order()) {
        res.status = IsoStatus::Absent;
        return res;
    }
    const int n = g1.order();
    IsoGraph a(g1), b(g2);

    // initial colours: (out-degree, in-degree, digon count), jointly encoded
    auto seed = [&](const IsoGraph& ig) {
        std::vector<std::array<int, 3>> s(n);
        for (int v = 0; v < n; ++v)
            s[v] = {ig.g->out_degree(v), ig.at.row_popcount(v),
                    ig.g->adj().and_popcount(v, ig.at, v)};
        return s;
    };
    auto sa = seed(a), sb = seed(b);
    std::vector<std::array<int, 3>> pool;
    pool.insert(pool.end(), sa.begin(), sa.end());
    pool.insert(pool.end(), sb.begin(), sb.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    Colors ca(n), cb(n);
    for (int v = 0; v < n; ++v) {
        ca[v] = static_cast<int>(std::lower_bound(pool.begin(), pool.end(), sa[v]) -
                                 pool.begin());
        cb[v] = static_cast<int>(std::lower_bound(pool.begin(), pool.end(), sb[v]) -
                                 pool.begin());
    }
    {
        std::vector<int> cnt_a(pool.size(), 0), cnt_b(pool.size(), 0);
        for (int v = 0; v < n; ++v) {
            ++cnt_a[ca[v]];
            ++cnt_b[cb[v]];
        }
        if (cnt_a != cnt_b) {
            res.status = IsoStatus::Absent;
            return res;
        }
    }

    IsoSearch search{a, b, opts.node_budget};
    auto m = search.run(std::move(ca), std::move(cb));
    res.nodes = search.nodes;
    if (m) {
        res.status = IsoStatus::Found;
        res.mapping = std::move(*m);
    } else {
        res.status = search.out_of_budget ? IsoStatus::Undecided : IsoStatus::Absent;
    }
    return res;
}

std::string to_string(EquivalenceClass c) {
    switch (c) {
        case EquivalenceClass::Isomorphic: return "Isomorphic";
        case EquivalenceClass::ReverseIsomorphic: return "ReverseIsomorphic";
        case EquivalenceClass::ComplementIsomorphic: return "ComplementIsomorphic";
        case EquivalenceClass::ReverseComplementIsomorphic:
            return "ReverseComplementIsomorphic";
        case EquivalenceClass::NonEquivalent: return "NonEquivalent";
        case EquivalenceClass::Undecided: return "Undecided";
    }
    return {};
}

EquivalenceVerdict equivalence(const Digraph& g1, const Digraph& g2, IsoOptions opts) {
    if (!classify(g1).strongly_regular() || !classify(g2).strongly_regular())
        fail("equivalence: both digraphs must classify as DSRG/SRG");

    struct Target {
        EquivalenceClass cls;
        Digraph graph;
    };
    std::vector<Target> targets;
    targets.push_back({EquivalenceClass::Isomorphic, g2});
    targets.push_back({EquivalenceClass::ReverseIsomorphic, transpose(g2)});
    Digraph comp = complement(g2);
    targets.push_back({EquivalenceClass::ComplementIsomorphic, comp});
    targets.push_back({EquivalenceClass::ReverseComplementIsomorphic, transpose(comp)});

    bool undecided = false;
    for (auto& t : targets) {
        IsoResult r = isomorphic(g1, t.graph, opts);
        if (r.status == IsoStatus::Found) return {t.cls, std::move(r.mapping)};
        if (r.status == IsoStatus::Undecided) undecided = true;
    }
    return {undecided ? EquivalenceClass::Undecided : EquivalenceClass::NonEquivalent, {}};
}

}  // namespace dsrg
