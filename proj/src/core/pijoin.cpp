#include "dsrg/pijoin.hpp"

#include <algorithm>
#include <numeric>

namespace dsrg {

std::vector<JoinSolution> solve_eq1(const ParameterSet& p, bool apply_eq2) {
    std::vector<JoinSolution> out;
    const std::int64_t n = p.n;
    for (std::int64_t a = 2; a <= n; ++a) {
        if (n % a != 0) continue;
        std::int64_t b = n / a;
        if (b < 2) continue;
        if (2 * p.k + p.mu - p.lambda != a * p.mu + b) continue;
        std::int64_t diag = p.lambda + b - p.k;
        if (apply_eq2 && diag < 0) continue;
        out.push_back({a, b, diag, p.mu});
    }
    return out;
}

JoinSolution complete_join_solution(std::int64_t n, std::int64_t a) {
    if (a < 2 || n % a != 0) fail("complete join: a must divide n and be >= 2");
    std::int64_t b = n / a;
    return {a, b, b - 1, b};
}

QuotientMatrix target_quotient(const JoinSolution& s) {
    QuotientMatrix q(static_cast<int>(s.a), static_cast<int>(s.a));
    for (int i = 0; i < q.rows; ++i)
        for (int l = 0; l < q.cols; ++l) q.at(i, l) = i == l ? s.diag : s.offdiag;
    return q;
}

std::optional<QuotientMatrix> measure_quotient(const Digraph& g, const Partition& pi,
                                               QuotientWitness* witness) {
    if (pi.n() != g.order()) fail("measure_quotient: partition order mismatch");
    const int n = g.order();
    const int a = pi.cell_count();

    // cell characteristic vectors, bit-packed for AND/popcount against
    // transposed adjacency rows (in-neighbourhoods)
    DenseBinaryMatrix cell_mask(a, n);
    for (int v = 0; v < n; ++v) cell_mask.set(pi.cell_of(v), v, true);
    DenseBinaryMatrix at = transpose(g.adj());

    QuotientMatrix q(a, a);
    std::vector<int> seen(a, 0);
    for (int v = 0; v < n; ++v) {
        int l = pi.cell_of(v);
        for (int i = 0; i < a; ++i) {
            std::int64_t cnt = at.and_popcount(v, cell_mask, i);
            if (!seen[l]) {
                q.at(i, l) = cnt;
            } else if (q.at(i, l) != cnt) {
                if (witness) *witness = {v, i};
                return std::nullopt;
            }
        }
        seen[l] = 1;
    }
    return q;
}

bool is_good_partition(const Digraph& g, const Partition& pi) {
    if (pi.n() != g.order()) fail("is_good_partition: partition order mismatch");
    ClassifyResult c = classify(g);
    if (c.kind == ClassifyKind::CompleteGraph) return pi.cell_count() >= 2;
    if (!c.strongly_regular())
        fail("is_good_partition: graph is not strongly regular (" + c.str() + ")");

    for (const JoinSolution& s : solve_eq1(c.params)) {
        if (s.a != pi.cell_count()) continue;
        auto measured = measure_quotient(g, pi);
        return measured && *measured == target_quotient(s);
    }
    return false;
}

DenseBinaryMatrix u_matrix(int i, int a, int b) {
    if (i < 1 || i > a) fail("u_matrix: cell index out of range");
    const int n = a * b;
    DenseBinaryMatrix u(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = (i - 1) * b; c < i * b; ++c) u.set(r, c, true);
    return u;
}

std::vector<int> respecting_order(const Partition& pi) {
    std::vector<int> order(pi.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int u, int v) { return pi.cell_of(u) < pi.cell_of(v); });
    return order;
}

PiJoin build_pi_join(const Digraph& g, const Partition& pi, int j) {
    if (j < 1) fail("build_pi_join: j must be >= 1");
    if (pi.n() != g.order()) fail("build_pi_join: partition order mismatch");

    const int n = g.order();
    const int a = pi.cell_count();
    const int b = pi.cell_size();
    std::vector<int> order = respecting_order(pi);
    Digraph base = permuted(g, order);

    const int copies = j * a + 1;
    const std::int64_t big = static_cast<std::int64_t>(copies) * n;
    if (big > 10'000) fail("build_pi_join: result exceeds 10^4 vertices");
    const int N = static_cast<int>(big);

    DenseBinaryMatrix m(N, N);
    for (int cr = 0; cr < copies; ++cr) {
        for (int cc = 0; cc < copies; ++cc) {
            int pos = cc - cr;
            if (pos < 0) pos += copies;
            if (pos == 0) {
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v)
                        if (base.arc(u, v)) m.set(cr * n + u, cc * n + v, true);
            } else {
                int cell = (pos - 1) / j;  // 0-based: block is U_{cell+1}
                for (int u = 0; u < n; ++u)
                    for (int v = cell * b; v < (cell + 1) * b; ++v)
                        m.set(cr * n + u, cc * n + v, true);
            }
        }
    }
    return {Digraph(std::move(m)), std::move(order)};
}

}  // namespace dsrg
