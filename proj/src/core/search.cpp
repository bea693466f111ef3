#include "dsrg/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace dsrg {

namespace {

struct Searcher {
    const Digraph& g;
    int n, a, b;
    std::int64_t diag, offdiag;
    std::size_t limit;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    std::vector<std::vector<int>> out_nbrs;  // out-neighbour lists
    std::vector<int> assign;                 // -1 = unassigned
    std::vector<int> cell_size;
    std::vector<std::vector<std::int64_t>> cnt;  // cnt[v][c]: in-darts to v from cell c
    int cells_used = 0;

    std::vector<Partition> found;
    bool exhausted = true;
    std::uint64_t nodes = 0;

    Searcher(const Digraph& gr, const JoinSolution& s, std::size_t lim,
             std::optional<std::chrono::steady_clock::time_point> dl)
        : g(gr), n(gr.order()), a(static_cast<int>(s.a)), b(static_cast<int>(s.b)),
          diag(s.diag), offdiag(s.offdiag), limit(lim), deadline(dl) {
        out_nbrs.resize(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (g.arc(u, v)) out_nbrs[u].push_back(v);
        assign.assign(n, -1);
        cell_size.assign(a, 0);
        cnt.assign(n, std::vector<std::int64_t>(a, 0));
    }

    std::int64_t target(int from_cell, int to_cell) const {
        return from_cell == to_cell ? diag : offdiag;
    }

    // Feasibility of the partial assignment after u joined cell c.
    bool consistent(int u, int c) {
        // u against every cell it already has incoming counts from
        for (int d = 0; d < cells_used; ++d) {
            std::int64_t have = cnt[u][d];
            std::int64_t tgt = target(d, c);
            if (have > tgt) return false;
            std::int64_t slack = b - cell_size[d];
            if (have + slack < tgt) return false;
            if (cell_size[d] == b && have != tgt) return false;
        }
        // every vertex against cell c, whose size (and slack) just changed
        const bool closed = cell_size[c] == b;
        const std::int64_t slack = b - cell_size[c];
        for (int v = 0; v < n; ++v) {
            std::int64_t have = cnt[v][c];
            if (assign[v] >= 0) {
                std::int64_t tgt = target(c, assign[v]);
                if (have > tgt) return false;
                if (have + slack < tgt) return false;
                if (closed && have != tgt) return false;
            } else if (closed) {
                // v can only join some other cell now
                if (have != offdiag) return false;
            } else {
                bool can_other = have <= offdiag && have + slack >= offdiag;
                bool can_self = have <= diag && have + slack - 1 >= diag;
                if (!can_other && !can_self) return false;
            }
        }
        return true;
    }

    void place(int u, int c) {
        assign[u] = c;
        ++cell_size[c];
        for (int v : out_nbrs[u]) ++cnt[v][c];
    }

    void unplace(int u, int c) {
        assign[u] = -1;
        --cell_size[c];
        for (int v : out_nbrs[u]) --cnt[v][c];
    }

    std::uint32_t clock_probe = 0;

    bool stop() {
        if (found.size() >= limit) {
            exhausted = false;  // remaining subtrees stay unexplored
            return true;
        }
        if (deadline && (clock_probe++ & 255) == 0 &&
            std::chrono::steady_clock::now() > *deadline) {
            exhausted = false;
            return true;
        }
        return false;
    }

    void dfs(int u) {
        if (u == n) {
            found.push_back(Partition::from_assignment(assign));
            return;
        }
        int cmax = std::min(cells_used, a - 1);  // first-occurrence canonical order
        for (int c = 0; c <= cmax; ++c) {
            if (cell_size[c] == b) continue;
            ++nodes;
            bool fresh = c == cells_used;
            place(u, c);
            if (fresh) ++cells_used;
            if (consistent(u, c)) dfs(u + 1);
            if (fresh) --cells_used;
            unplace(u, c);
            if (stop()) return;
        }
    }

    // Runs the search constrained to a fixed assignment prefix.
    bool seed_prefix(const std::vector<int>& prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            int c = prefix[i];
            if (cell_size[c] == b) return false;
            bool fresh = c == cells_used;
            place(static_cast<int>(i), c);
            if (fresh) ++cells_used;
            if (!consistent(static_cast<int>(i), c)) return false;
        }
        return true;
    }
};

void validate_shape(const Digraph& g, const JoinSolution& s) {
    if (s.a < 2 || s.b < 1 || s.a * s.b != g.order())
        fail("search: (a,b) does not split this graph");
}

}  // namespace

JoinSolution resolve_shape(const Digraph& g, std::int64_t a, std::int64_t b) {
    if (a < 2 || b < 1 || a * b != g.order())
        fail("shape: need a >= 2 and ab = " + std::to_string(g.order()));
    ClassifyResult c = classify(g);
    if (c.kind == ClassifyKind::CompleteGraph) return complete_join_solution(g.order(), a);
    if (!c.strongly_regular())
        fail("shape: graph is not strongly regular (" + c.str() + ")");
    for (const JoinSolution& s : solve_eq1(c.params))
        if (s.a == a && s.b == b) return s;
    fail("shape: (a,b)=(" + std::to_string(a) + "," + std::to_string(b) +
         ") is not an admissible solution for " + c.params.str());
}

QuotientMatrix search_target(const Digraph& g, const JoinSolution& s) {
    validate_shape(g, s);
    ClassifyResult c = classify(g);
    if (c.kind == ClassifyKind::CompleteGraph) {
        JoinSolution ref = complete_join_solution(g.order(), s.a);
        if (!(s == ref))
            fail("search: join shape does not match the complete-graph quotient");
        return target_quotient(s);
    }
    if (!c.strongly_regular())
        fail("search: graph is not strongly regular (" + c.str() + ")");
    for (const JoinSolution& cand : solve_eq1(c.params))
        if (cand == s) return target_quotient(s);
    fail("search: (a,b)=(" + std::to_string(s.a) + "," + std::to_string(s.b) +
         ") is not an admissible solution for " + c.params.str());
}

SearchResult find_good_partitions(const Digraph& g, const JoinSolution& s,
                                  SearchOptions opts) {
    search_target(g, s);  // validate; target entries travel inside s

    if (opts.jobs <= 1) {
        Searcher se(g, s, opts.limit, opts.deadline);
        se.dfs(0);
        SearchResult r;
        r.partitions = std::move(se.found);
        r.exhausted = se.exhausted;
        r.nodes = se.nodes;
        return r;
    }

    // Work splitting: enumerate assignment prefixes for the first few
    // vertices, then search subtrees concurrently. Prefixes are generated in
    // lexicographic order and each subtree emits in lexicographic order, so
    // concatenation keeps the deterministic global order.
    const int depth = std::min(3, g.order());
    std::vector<std::vector<int>> prefixes;
    {
        std::vector<int> cur;
        auto rec = [&](auto&& self, int u, int used) -> void {
            if (u == depth) {
                prefixes.push_back(cur);
                return;
            }
            int cmax = std::min(used, static_cast<int>(s.a) - 1);
            for (int c = 0; c <= cmax; ++c) {
                cur.push_back(c);
                self(self, u + 1, std::max(used, c + 1));
                cur.pop_back();
            }
        };
        rec(rec, 0, 0);
    }

    std::atomic<std::size_t> next{0};
    std::vector<SearchResult> partial(prefixes.size());
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) return;
            Searcher se(g, s, opts.limit, opts.deadline);
            if (se.seed_prefix(prefixes[i])) se.dfs(depth);
            SearchResult r;
            r.partitions = std::move(se.found);
            r.exhausted = se.exhausted;
            r.nodes = se.nodes;
            partial[i] = std::move(r);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < opts.jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    SearchResult all;
    for (auto& r : partial) {
        all.nodes += r.nodes;
        all.exhausted = all.exhausted && r.exhausted;
        for (auto& p : r.partitions) all.partitions.push_back(std::move(p));
    }
    std::sort(all.partitions.begin(), all.partitions.end());
    if (all.partitions.size() > opts.limit) {
        all.partitions.erase(all.partitions.begin() + opts.limit, all.partitions.end());
        all.exhausted = false;
    }
    return all;
}

std::uint64_t homogeneous_partition_count(int a, int b) {
    // product of C(remaining-1, b-1): each factor picks the cell of the
    // smallest unplaced vertex
    auto binom = [](std::uint64_t n, std::uint64_t k) {
        std::uint64_t r = 1;
        for (std::uint64_t i = 1; i <= k; ++i) {
            if (r > static_cast<std::uint64_t>(-1) / (n - k + i)) return static_cast<std::uint64_t>(-1);
            r = r * (n - k + i) / i;
        }
        return r;
    };
    std::uint64_t total = 1;
    int remaining = a * b;
    while (remaining > 0) {
        std::uint64_t f = binom(remaining - 1, b - 1);
        if (f == static_cast<std::uint64_t>(-1) ||
            total > static_cast<std::uint64_t>(-1) / f)
            return static_cast<std::uint64_t>(-1);
        total *= f;
        remaining -= b;
    }
    return total;
}

std::vector<Partition> brute_force_partitions(const Digraph& g, const JoinSolution& s,
                                              std::uint64_t guard) {
    QuotientMatrix target = search_target(g, s);
    std::uint64_t count = homogeneous_partition_count(static_cast<int>(s.a),
                                                      static_cast<int>(s.b));
    if (count > guard)
        fail("brute force: " + std::to_string(count) +
             " homogeneous partitions exceed the guard of " + std::to_string(guard));

    const int n = g.order();
    const int a = static_cast<int>(s.a), b = static_cast<int>(s.b);
    std::vector<Partition> out;
    std::vector<int> assign(n, -1), size(a, 0);
    auto rec = [&](auto&& self, int u, int used) -> void {
        if (u == n) {
            Partition p = Partition::from_assignment(assign);
            auto measured = measure_quotient(g, p);
            if (measured && *measured == target) out.push_back(std::move(p));
            return;
        }
        int cmax = std::min(used, a - 1);
        for (int c = 0; c <= cmax; ++c) {
            if (size[c] == b) continue;
            assign[u] = c;
            ++size[c];
            self(self, u + 1, std::max(used, c + 1));
            assign[u] = -1;
            --size[c];
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace dsrg
