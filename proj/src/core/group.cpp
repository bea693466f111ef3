#include "dsrg/group.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace dsrg {

void GroupTable::validate() const {
    const int n = order;
    if (static_cast<int>(mul.size()) != n * n || static_cast<int>(inverse.size()) != n)
        fail("group: table size mismatch");
    for (int x = 0; x < n; ++x) {
        if (op(identity, x) != x || op(x, identity) != x) fail("group: identity law fails");
        if (op(x, inverse[x]) != identity || op(inverse[x], x) != identity)
            fail("group: inverse law fails");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (op(op(x, y), z) != op(x, op(y, z))) fail("group: associativity fails");
}

int GroupTable::element(const std::string& label) const {
    for (int i = 0; i < order; ++i)
        if (labels[i] == label) return i;
    fail("group: no element labelled '" + label + "'");
}

GroupTable cyclic_group(int n) {
    if (n < 1) fail("cyclic group: order must be >= 1");
    GroupTable g;
    g.order = n;
    g.mul.resize(static_cast<std::size_t>(n) * n);
    g.inverse.resize(n);
    g.labels.resize(n);
    for (int x = 0; x < n; ++x) {
        g.inverse[x] = (n - x) % n;
        g.labels[x] = std::to_string(x);
        for (int y = 0; y < n; ++y) g.mul[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
    }
    return g;
}

GroupTable dihedral_group(int n) {
    if (n < 1) fail("dihedral group: n must be >= 1");
    // element s^e r^i has index e*n + i; (s^e1 r^i1)(s^e2 r^i2) =
    // s^(e1+e2) r^(i1*(-1)^e2 + i2)
    GroupTable g;
    g.order = 2 * n;
    g.mul.resize(static_cast<std::size_t>(g.order) * g.order);
    g.inverse.resize(g.order);
    g.labels.resize(g.order);
    auto idx = [n](int e, int i) { return e * n + ((i % n) + n) % n; };
    for (int e1 = 0; e1 < 2; ++e1)
        for (int i1 = 0; i1 < n; ++i1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int i2 = 0; i2 < n; ++i2) {
                    int e = (e1 + e2) % 2;
                    int i = (e2 ? -i1 : i1) + i2;
                    g.mul[static_cast<std::size_t>(idx(e1, i1)) * g.order + idx(e2, i2)] =
                        idx(e, i);
                }
    for (int e = 0; e < 2; ++e)
        for (int i = 0; i < n; ++i) {
            g.inverse[idx(e, i)] = e ? idx(1, i) : idx(0, -i);
            std::string lab = e ? "s" : "";
            if (i == 1)
                lab += "r";
            else if (i > 1)
                lab += "r^" + std::to_string(i);
            if (lab.empty()) lab = "1";
            g.labels[idx(e, i)] = lab;
        }
    return g;
}

namespace {

using Perm4 = std::array<int, 4>;  // images of 0..3

Perm4 compose_lr(const Perm4& x, const Perm4& y) {
    // left-to-right action: p^(x*y) = (p^x)^y
    Perm4 r;
    for (int p = 0; p < 4; ++p) r[p] = y[x[p]];
    return r;
}

std::string cycle_label(const Perm4& p) {
    std::array<bool, 4> seen{};
    std::ostringstream os;
    bool any = false;
    for (int s = 0; s < 4; ++s) {
        if (seen[s] || p[s] == s) continue;
        os << '(';
        int c = s;
        bool first = true;
        while (!seen[c]) {
            seen[c] = true;
            if (!first) os << ',';
            os << c + 1;
            first = false;
            c = p[c];
        }
        os << ')';
        any = true;
    }
    return any ? os.str() : "id";
}

}  // namespace

GroupTable symmetric_group_4() {
    std::vector<Perm4> perms;
    Perm4 p{0, 1, 2, 3};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    GroupTable g;
    g.order = 24;
    g.mul.resize(24 * 24);
    g.inverse.resize(24);
    g.labels.resize(24);
    auto index_of = [&](const Perm4& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) -
                                perms.begin());
    };
    for (int x = 0; x < 24; ++x) {
        g.labels[x] = cycle_label(perms[x]);
        Perm4 inv;
        for (int i = 0; i < 4; ++i) inv[perms[x][i]] = i;
        g.inverse[x] = index_of(inv);
        for (int y = 0; y < 24; ++y)
            g.mul[static_cast<std::size_t>(x) * 24 + y] = index_of(compose_lr(perms[x], perms[y]));
    }
    g.identity = index_of({0, 1, 2, 3});
    return g;
}

GroupTable metacyclic_group_21() {
    // x^i y^j with y^j x^k = x^k y^(j * 2^k mod 7): index i*7 + j
    GroupTable g;
    g.order = 21;
    g.mul.resize(21 * 21);
    g.inverse.resize(21);
    g.labels.resize(21);
    auto pow2 = [](int k) { return k == 0 ? 1 : k == 1 ? 2 : 4; };
    auto idx = [](int i, int j) { return ((i % 3) + 3) % 3 * 7 + ((j % 7) + 7) % 7; };
    for (int i1 = 0; i1 < 3; ++i1)
        for (int j1 = 0; j1 < 7; ++j1)
            for (int i2 = 0; i2 < 3; ++i2)
                for (int j2 = 0; j2 < 7; ++j2) {
                    // (x^i1 y^j1)(x^i2 y^j2) = x^(i1+i2) y^(j1*2^i2 + j2)
                    int i = (i1 + i2) % 3;
                    int j = (j1 * pow2(i2) + j2) % 7;
                    g.mul[static_cast<std::size_t>(idx(i1, j1)) * 21 + idx(i2, j2)] =
                        idx(i, j);
                }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 7; ++j) {
            std::string lab;
            if (i == 1) lab += "x";
            if (i == 2) lab += "x^2";
            if (j == 1) lab += "y";
            if (j > 1) lab += "y^" + std::to_string(j);
            if (lab.empty()) lab = "1";
            g.labels[idx(i, j)] = lab;
            // inverse by scan (table is small)
        }
    for (int e = 0; e < 21; ++e)
        for (int f = 0; f < 21; ++f)
            if (g.mul[static_cast<std::size_t>(e) * 21 + f] == 0) {
                g.inverse[e] = f;
                break;
            }
    return g;
}

GroupTable elementary_abelian_2(int m) {
    if (m < 0 || m > 20) fail("elementary abelian group: rank out of range");
    int n = 1 << m;
    GroupTable g;
    g.order = n;
    g.mul.resize(static_cast<std::size_t>(n) * n);
    g.inverse.resize(n);
    g.labels.resize(n);
    for (int x = 0; x < n; ++x) {
        g.inverse[x] = x;
        g.labels[x] = std::to_string(x);
        for (int y = 0; y < n; ++y) g.mul[static_cast<std::size_t>(x) * n + y] = x ^ y;
    }
    return g;
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
    GroupTable p;
    p.order = g.order * h.order;
    p.mul.resize(static_cast<std::size_t>(p.order) * p.order);
    p.inverse.resize(p.order);
    p.labels.resize(p.order);
    auto idx = [&](int a, int b) { return a * h.order + b; };
    for (int a1 = 0; a1 < g.order; ++a1)
        for (int b1 = 0; b1 < h.order; ++b1) {
            int e1 = idx(a1, b1);
            p.inverse[e1] = idx(g.inverse[a1], h.inverse[b1]);
            p.labels[e1] = "(" + g.labels[a1] + "," + h.labels[b1] + ")";
            for (int a2 = 0; a2 < g.order; ++a2)
                for (int b2 = 0; b2 < h.order; ++b2)
                    p.mul[static_cast<std::size_t>(e1) * p.order + idx(a2, b2)] =
                        idx(g.op(a1, a2), h.op(b1, b2));
        }
    p.identity = idx(g.identity, h.identity);
    return p;
}

Digraph cayley_digraph(const GroupTable& h, const std::vector<int>& connection) {
    for (int z : connection)
        if (z == h.identity) fail("cayley digraph: identity in connection set");
    DenseBinaryMatrix m(h.order, h.order);
    for (int x = 0; x < h.order; ++x)
        for (int z : connection) m.set(x, h.op(z, x), true);  // y = z*x, so y*x^{-1} = z
    return Digraph(std::move(m));
}

std::vector<int> generated_subgroup(const GroupTable& g, const std::vector<int>& gens) {
    std::vector<char> in(g.order, 0);
    std::vector<int> queue{g.identity};
    in[g.identity] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (int gen : gens) {
            int next = g.op(queue[q], gen);
            if (!in[next]) {
                in[next] = 1;
                queue.push_back(next);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

}  // namespace dsrg
