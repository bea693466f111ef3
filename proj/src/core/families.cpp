#include "dsrg/families.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace dsrg {

std::string FamilySpec::str() const {
    if (params.empty()) return id;
    std::ostringstream os;
    os << id << '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) os << ',';
        os << params[i];
    }
    os << ')';
    return os.str();
}

namespace {

std::int64_t param(const FamilySpec& s, std::size_t i) {
    if (i >= s.params.size()) fail(s.str() + ": missing parameter");
    return s.params[i];
}

// ---- vertex indexers shared between generators and their partitions ----

// ordered pairs (x,y), x != y, over m points, lexicographic
int pair_index(int x, int y, int m) { return x * (m - 1) + (y > x ? y - 1 : y); }

// 2-subsets {i,j}, i < j, of an n-set, lexicographic
int subset_index(int i, int j, int n) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Digraph make_complete(int n) {
    if (n < 2) fail("complete: n must be >= 2");
    DenseBinaryMatrix m(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) m.set(u, v, true);
    return Digraph(std::move(m));
}

Digraph make_duval(int k) {
    if (k < 1) fail("duval: k must be >= 1");
    const int m = k + 1, n = m * k;
    DenseBinaryMatrix adj(n, n);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            if (x == y) continue;
            for (int v = 0; v < m; ++v)
                if (v != y) adj.set(pair_index(x, y, m), pair_index(y, v, m), true);
        }
    return Digraph(std::move(adj));
}

void jorgensen_domain(std::int64_t k, std::int64_t mu) {
    if (k < 2 || mu < 1 || (k - 1) % mu != 0)
        fail("jorgensen: need k >= 2 and mu | k-1");
}

Digraph make_jorgensen(int k, int mu) {
    jorgensen_domain(k, mu);
    const int n = static_cast<int>((static_cast<std::int64_t>(k) * k - 1) / mu);
    DenseBinaryMatrix adj(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            int r = (x + k * y) % n;
            if (r >= 1 && r <= k) adj.set(x, y, true);
        }
    return Digraph(std::move(adj));
}

Digraph make_triangular(int n) {
    if (n < 4) fail("triangular: n must be >= 4");
    const int m = n * (n - 1) / 2;
    DenseBinaryMatrix adj(m, m);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int p = 0; p < n; ++p)
                for (int q = p + 1; q < n; ++q) {
                    if (i == p && j == q) continue;
                    int common = (p == i) + (p == j) + (q == i) + (q == j);
                    if (common == 1) {
                        adj.set(subset_index(i, j, n), subset_index(p, q, n), true);
                    }
                }
    return Digraph(std::move(adj));
}

Digraph make_lattice(int n) {
    if (n < 2) fail("lattice: n must be >= 2");
    const int m = n * n;
    DenseBinaryMatrix adj(m, m);
    for (int x1 = 0; x1 < n; ++x1)
        for (int y1 = 0; y1 < n; ++y1)
            for (int x2 = 0; x2 < n; ++x2)
                for (int y2 = 0; y2 < n; ++y2) {
                    if (x1 == x2 && y1 == y2) continue;
                    if ((x1 == x2) != (y1 == y2))
                        adj.set(x1 * n + y1, x2 * n + y2, true);
                }
    return Digraph(std::move(adj));
}

Digraph make_dihedral(int n) {
    if (n < 5 || n % 2 == 0) fail("dihedral: n must be odd and >= 5");
    GroupTable d = dihedral_group(n);
    std::vector<int> x;
    for (int i = 1; i <= (n - 1) / 2; ++i) {
        x.push_back(i);      // r^i
        x.push_back(n + i);  // s r^i
    }
    return cayley_digraph(d, x);
}

Digraph make_clebsch() {
    // Cayley graph over Z_2^4: units plus the all-ones word, i.e. vertices
    // are binary 4-strings adjacent at Hamming distance 1 or 4
    GroupTable g = elementary_abelian_2(4);
    return cayley_digraph(g, {1, 2, 4, 8, 15});
}

Digraph make_shrikhande() {
    // Cayley graph over Z4 x Z4 with connection set +-{(1,0),(0,1),(1,1)};
    // element (x,y) has index 4x+y
    GroupTable g = direct_product(cyclic_group(4), cyclic_group(4));
    std::vector<int> conn{4 * 1 + 0, 4 * 3 + 0, 4 * 0 + 1,
                          4 * 0 + 3, 4 * 1 + 1, 4 * 3 + 3};
    return cayley_digraph(g, conn);
}

// one Cayley connection set per the three printed generator lists
std::vector<int> s4_connection(const GroupTable& g, int which) {
    static const std::vector<std::vector<const char*>> sets = {
        {"(3,4)", "(2,3)", "(2,3,4)", "(1,2)(3,4)", "(1,2,3,4)", "(1,3,2)", "(1,3,4,2)",
         "(1,3,4)"},
        {"(3,4)", "(2,3)", "(1,2,3)", "(1,2,4,3)", "(1,3,2)", "(1,3,4)", "(1,3)(2,4)",
         "(1,4,3)", "(1,4,2,3)"},
        {"(3,4)", "(2,3)", "(2,3,4)", "(2,4,3)", "(1,2)", "(1,2,3)", "(1,2,3,4)",
         "(1,4,3,2)", "(1,4,3)", "(1,4)"},
    };
    if (which < 1 || which > 3) fail("s4: index must be 1, 2 or 3");
    std::vector<int> conn;
    for (const char* lab : sets[which - 1]) conn.push_back(g.element(lab));
    return conn;
}

Digraph make_metacyclic21() {
    GroupTable g = metacyclic_group_21();
    auto idx = [](int i, int j) { return i * 7 + j; };
    // S = {y, y^3, x, x y^2, x^2, x^2 y^5}
    std::vector<int> s{idx(0, 1), idx(0, 3), idx(1, 0), idx(1, 2), idx(2, 0), idx(2, 5)};
    return cayley_digraph(g, s);
}

int hs_p(int h, int i) { return h * 5 + ((i % 5) + 5) % 5; }
int hs_q(int j, int m) { return 25 + j * 5 + ((m % 5) + 5) % 5; }

Digraph make_hoffman_singleton() {
    // five pentagons P_h, five pentagrams Q_j, spoke p_{h,i} ~ q_{j,hj+i}
    DenseBinaryMatrix adj(50, 50);
    auto edge = [&](int u, int v) {
        adj.set(u, v, true);
        adj.set(v, u, true);
    };
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i) edge(hs_p(h, i), hs_p(h, i + 1));
    for (int j = 0; j < 5; ++j)
        for (int m = 0; m < 5; ++m) edge(hs_q(j, m), hs_q(j, m + 2));
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) edge(hs_p(h, i), hs_q(j, h * j + i));
    return Digraph(std::move(adj));
}

// permutation utilities over the label strings of symmetric_group_4
std::array<int, 4> perm_of_cycles(const std::string& label) {
    std::array<int, 4> p{0, 1, 2, 3};
    if (label == "id") return p;
    std::vector<int> cyc;
    auto close_cycle = [&] {
        for (std::size_t i = 0; i < cyc.size(); ++i)
            p[cyc[i]] = cyc[(i + 1) % cyc.size()];
        cyc.clear();
    };
    for (char ch : label) {
        if (ch >= '1' && ch <= '4') cyc.push_back(ch - '1');
        if (ch == ')') close_cycle();
    }
    return p;
}

bool perm_even(const std::array<int, 4>& p) {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0;
}

}  // namespace

Digraph make_graph(const FamilySpec& spec) {
    const std::string& id = spec.id;
    if (id == "complete") return make_complete(static_cast<int>(param(spec, 0)));
    if (id == "duval") return make_duval(static_cast<int>(param(spec, 0)));
    if (id == "jorgensen")
        return make_jorgensen(static_cast<int>(param(spec, 0)),
                              static_cast<int>(param(spec, 1)));
    if (id == "triangular") return make_triangular(static_cast<int>(param(spec, 0)));
    if (id == "tri_complement")
        return complement(make_triangular(static_cast<int>(param(spec, 0))));
    if (id == "lattice") return make_lattice(static_cast<int>(param(spec, 0)));
    if (id == "dihedral") return make_dihedral(static_cast<int>(param(spec, 0)));
    if (id == "petersen") return complement(make_triangular(5));
    if (id == "clebsch") return make_clebsch();
    if (id == "shrikhande") return make_shrikhande();
    if (id == "a_15_5" || id == "a_16" || id == "a_18_7")
        return read_matrix(embedded_matrix_text(id));
    if (id == "metacyclic21") return make_metacyclic21();
    if (id == "s4") {
        GroupTable g = symmetric_group_4();
        return cayley_digraph(g, s4_connection(g, static_cast<int>(param(spec, 0))));
    }
    if (id == "hoffman_singleton") return make_hoffman_singleton();
    fail("unknown family '" + id + "'");
}

ParameterSet documented_params(const FamilySpec& spec) {
    const std::string& id = spec.id;
    auto srg = [](std::int64_t n, std::int64_t k, std::int64_t l, std::int64_t m) {
        return ParameterSet{n, k, k, l, m};
    };
    if (id == "complete") {
        std::int64_t n = param(spec, 0);
        if (n < 2) fail("complete: n must be >= 2");
        return {n, n - 1, n - 1, n - 2, 0};
    }
    if (id == "duval") {
        std::int64_t k = param(spec, 0);
        if (k < 1) fail("duval: k must be >= 1");
        return {k * k + k, k, 1, 0, 1};
    }
    if (id == "jorgensen") {
        std::int64_t k = param(spec, 0), mu = param(spec, 1);
        jorgensen_domain(k, mu);
        return {(k * k - 1) / mu, k, mu + 1, mu, mu};
    }
    if (id == "triangular") {
        std::int64_t n = param(spec, 0);
        if (n < 4) fail("triangular: n must be >= 4");
        return srg(n * (n - 1) / 2, 2 * (n - 2), n - 2, 4);
    }
    if (id == "tri_complement") {
        std::int64_t n = param(spec, 0);
        if (n < 5) fail("tri_complement: n must be >= 5");
        auto ch2 = [](std::int64_t m) { return m * (m - 1) / 2; };
        return srg(ch2(n), ch2(n - 2), ch2(n - 4), ch2(n - 3));
    }
    if (id == "lattice") {
        std::int64_t n = param(spec, 0);
        if (n < 2) fail("lattice: n must be >= 2");
        return srg(n * n, 2 * n - 2, n - 2, 2);
    }
    if (id == "dihedral") {
        std::int64_t n = param(spec, 0);
        if (n < 5 || n % 2 == 0) fail("dihedral: n must be odd and >= 5");
        return {2 * n, n - 1, (n - 1) / 2, (n - 3) / 2, (n - 1) / 2};
    }
    if (id == "petersen") return srg(10, 3, 0, 1);
    if (id == "clebsch") return srg(16, 5, 0, 2);
    if (id == "shrikhande") return srg(16, 6, 2, 2);
    if (id == "a_15_5") return {15, 5, 2, 1, 2};
    if (id == "a_16") return {16, 7, 5, 4, 2};
    if (id == "a_18_7") return {18, 7, 5, 2, 3};
    if (id == "metacyclic21") return {21, 6, 2, 1, 2};
    if (id == "s4") {
        switch (param(spec, 0)) {
            case 1: return {24, 8, 3, 2, 3};
            case 2: return {24, 9, 7, 2, 4};
            case 3: return {24, 10, 8, 4, 4};
        }
        fail("s4: index must be 1, 2 or 3");
    }
    if (id == "hoffman_singleton") return srg(50, 7, 0, 1);
    fail("unknown family '" + id + "'");
}

namespace {

Partition cells_partition(int n, const std::vector<std::vector<int>>& cells) {
    return Partition::from_cells(n, cells);
}

std::vector<Partition> jorgensen_partitions(std::int64_t k, std::int64_t mu,
                                            const JoinSolution& s) {
    jorgensen_domain(k, mu);
    const std::int64_t n = (k * k - 1) / mu;
    std::vector<Partition> out;
    if (s.a == (k - 1) / mu && s.b == k + 1 && s.a >= 2) {
        // C_i = {ib} u {k(s-ib) : s = 1..k}
        std::vector<std::vector<int>> cells;
        for (std::int64_t i = 0; i < s.a; ++i) {
            std::vector<int> cell{static_cast<int>((i * s.b) % n)};
            for (std::int64_t x = 1; x <= k; ++x) {
                std::int64_t e = ((x - i * s.b) % n + n) % n;
                cell.push_back(static_cast<int>((k * e) % n));
            }
            std::sort(cell.begin(), cell.end());
            cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
            cells.push_back(std::move(cell));
        }
        out.push_back(cells_partition(static_cast<int>(n), cells));
    }
    if ((mu == 1 || mu == 2) && (k + 1) % mu == 0 && s.a == (k + 1) / mu &&
        s.b == k - 1) {
        // residue classes modulo a
        std::vector<std::vector<int>> cells(s.a);
        for (int v = 0; v < n; ++v) cells[v % s.a].push_back(v);
        out.push_back(cells_partition(static_cast<int>(n), cells));
    }
    return out;
}

}  // namespace

std::vector<Partition> known_partitions(const FamilySpec& spec, const JoinSolution& s) {
    const std::string& id = spec.id;
    const int a = static_cast<int>(s.a), b = static_cast<int>(s.b);

    if (id == "complete") {
        int n = static_cast<int>(param(spec, 0));
        if (a * b != n || a < 2) return {};
        std::vector<std::vector<int>> cells(a);
        for (int v = 0; v < n; ++v) cells[v / b].push_back(v);
        return {cells_partition(n, cells)};
    }
    if (id == "duval") {
        int k = static_cast<int>(param(spec, 0));
        int m = k + 1, n = m * k;
        if (a == m && b == k) {  // same first coordinate
            std::vector<std::vector<int>> cells(m);
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y)
                    if (x != y) cells[x].push_back(pair_index(x, y, m));
            return {cells_partition(n, cells)};
        }
        if (a == k && b == m) {  // difference classes (x, x+c)
            std::vector<std::vector<int>> cells;
            for (int c = 1; c <= k; ++c) {
                std::vector<int> cell;
                for (int x = 0; x < m; ++x) cell.push_back(pair_index(x, (x + c) % m, m));
                cells.push_back(std::move(cell));
            }
            return {cells_partition(n, cells)};
        }
        return {};
    }
    if (id == "jorgensen") return jorgensen_partitions(param(spec, 0), param(spec, 1), s);
    if (id == "triangular" || id == "petersen") {
        int n = id == "petersen" ? 5 : static_cast<int>(param(spec, 0));
        int m = n * (n - 1) / 2;
        if (n % 2 == 1 && a == (n - 1) / 2 && b == n) {
            // C_i = {{l, l+i} : l in Z_n}
            std::vector<std::vector<int>> cells;
            for (int i = 1; i <= (n - 1) / 2; ++i) {
                std::vector<int> cell;
                for (int l = 0; l < n; ++l) cell.push_back(subset_index(l, (l + i) % n, n));
                std::sort(cell.begin(), cell.end());
                cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
                cells.push_back(std::move(cell));
            }
            return {cells_partition(m, cells)};
        }
        return {};
    }
    if (id == "lattice") {
        int n = static_cast<int>(param(spec, 0));
        if (a == n && b == n) {  // shifted diagonals
            std::vector<std::vector<int>> cells;
            for (int d = 0; d < n; ++d) {
                std::vector<int> cell;
                for (int x = 0; x < n; ++x) cell.push_back(x * n + (x + d) % n);
                cells.push_back(std::move(cell));
            }
            return {cells_partition(n * n, cells)};
        }
        if (n % 2 == 0 && a == n / 2 && b == 2 * n && a >= 2) {  // column pairs
            std::vector<std::vector<int>> cells;
            for (int d = 0; d < n / 2; ++d) {
                std::vector<int> cell;
                for (int x = 0; x < n; ++x) {
                    cell.push_back(x * n + 2 * d);
                    cell.push_back(x * n + 2 * d + 1);
                }
                cells.push_back(std::move(cell));
            }
            return {cells_partition(n * n, cells)};
        }
        return {};
    }
    if (id == "dihedral") {
        int n = static_cast<int>(param(spec, 0));
        if (a == 2 && b == n) {
            std::vector<std::vector<int>> cells(2);
            for (int i = 0; i < n; ++i) cells[0].push_back(i);
            for (int i = n; i < 2 * n; ++i) cells[1].push_back(i);
            return {cells_partition(2 * n, cells)};
        }
        return {};
    }
    if (id == "clebsch" || id == "shrikhande") {
        if (a == 2 && b == 8) {
            std::vector<std::vector<int>> cells(2);
            for (int v = 0; v < 8; ++v) cells[0].push_back(v);
            for (int v = 8; v < 16; ++v) cells[1].push_back(v);
            return {cells_partition(16, cells)};
        }
        if (id == "shrikhande" && a == 4 && b == 4) {
            // cosets of the subgroup 2Z4 x 2Z4
            std::vector<std::vector<int>> cells;
            for (int rx = 0; rx < 2; ++rx)
                for (int ry = 0; ry < 2; ++ry) {
                    std::vector<int> cell;
                    for (int kx = 0; kx < 4; kx += 2)
                        for (int ky = 0; ky < 4; ky += 2)
                            cell.push_back(((rx + kx) % 4) * 4 + (ry + ky) % 4);
                    std::sort(cell.begin(), cell.end());
                    cells.push_back(std::move(cell));
                }
            return {cells_partition(16, cells)};
        }
        return {};
    }
    if (id == "a_15_5") {
        if (a == 3 && b == 5)
            return {cells_partition(
                15, {{0, 1, 6, 7, 9}, {2, 3, 8, 10, 14}, {4, 5, 11, 12, 13}})};
        return {};
    }
    if (id == "a_16") {
        if (a == 2 && b == 8)
            return {cells_partition(16, {{0, 1, 4, 5, 8, 9, 12, 13},
                                         {2, 3, 6, 7, 10, 11, 14, 15}})};
        if (a == 4 && b == 4)
            return {cells_partition(
                16, {{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}, {12, 13, 14, 15}})};
        return {};
    }
    if (id == "a_18_7") {
        if (a == 2 && b == 9) {
            std::vector<std::vector<int>> cells(2);
            for (int v = 0; v < 9; ++v) cells[0].push_back(v);
            for (int v = 9; v < 18; ++v) cells[1].push_back(v);
            return {cells_partition(18, cells)};
        }
        if (a == 3 && b == 6) {
            std::vector<std::vector<int>> cells(3);
            for (int v = 0; v < 18; ++v) cells[v % 3].push_back(v);
            return {cells_partition(18, cells)};
        }
        return {};
    }
    if (id == "metacyclic21") {
        if (a == 3 && b == 7) {
            std::vector<std::vector<int>> cells(3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 7; ++j) cells[i].push_back(i * 7 + j);
            return {cells_partition(21, cells)};
        }
        return {};
    }
    if (id == "s4") {
        int which = static_cast<int>(param(spec, 0));
        GroupTable g = symmetric_group_4();
        if (which == 1 && a == 3 && b == 8) {
            // found by exhaustive search over this labelling; the published
            // cell list presupposes its own vertex identification
            static const int assign[24] = {0, 0, 1, 0, 1, 1, 0, 0, 2, 0, 2, 1,
                                           1, 0, 2, 0, 2, 2, 1, 1, 2, 1, 2, 2};
            return {Partition::from_assignment(
                std::vector<int>(assign, assign + 24))};
        }
        if (which == 2 && a == 2 && b == 12) {
            // even versus odd permutations
            std::vector<std::vector<int>> cells(2);
            for (int v = 0; v < 24; ++v)
                cells[perm_even(perm_of_cycles(g.labels[v])) ? 0 : 1].push_back(v);
            return {cells_partition(24, cells)};
        }
        if (which == 3 && a == 2 && b == 12) {
            // head split: permutations mapping point 1 into {1,2}
            std::vector<std::vector<int>> cells(2);
            for (int v = 0; v < 24; ++v) {
                auto p = perm_of_cycles(g.labels[v]);
                cells[(p[0] == 0 || p[0] == 1) ? 0 : 1].push_back(v);
            }
            return {cells_partition(24, cells)};
        }
        if ((which == 2 || which == 3) && a == 3 && b == 8) {
            // right cosets of the printed index-3 subgroups
            std::vector<int> h =
                which == 2
                    ? generated_subgroup(g, {g.element("(1,2)(3,4)"), g.element("(1,2,3,4)")})
                    : generated_subgroup(g, {g.element("(1,2,3,4)"), g.element("(1,3)")});
            std::vector<std::string> reps = which == 2
                                                ? std::vector<std::string>{"id", "(2,3)", "(3,4)"}
                                                : std::vector<std::string>{"id", "(1,2)", "(1,4)"};
            std::vector<std::vector<int>> cells;
            for (const auto& rep : reps) {
                int r = g.element(rep);
                std::vector<int> cell;
                for (int e : h) cell.push_back(g.op(e, r));
                std::sort(cell.begin(), cell.end());
                cells.push_back(std::move(cell));
            }
            return {cells_partition(24, cells)};
        }
        return {};
    }
    if (id == "hoffman_singleton") {
        if (a == 5 && b == 10) {
            // pentagon h united with pentagram h: five disjoint Petersens
            std::vector<std::vector<int>> cells;
            for (int h = 0; h < 5; ++h) {
                std::vector<int> cell;
                for (int i = 0; i < 5; ++i) cell.push_back(hs_p(h, i));
                for (int m = 0; m < 5; ++m) cell.push_back(hs_q(h, m));
                cells.push_back(std::move(cell));
            }
            return {cells_partition(50, cells)};
        }
        return {};
    }
    return {};
}

std::vector<FamilySpec> shipped_specs() {
    std::vector<FamilySpec> out;
    auto add = [&](std::string id, std::vector<std::int64_t> ps = {}) {
        out.push_back({std::move(id), std::move(ps)});
    };
    add("complete", {4});
    add("complete", {6});
    add("complete", {8});
    add("complete", {9});
    add("complete", {10});
    add("complete", {12});
    add("duval", {2});
    add("duval", {3});
    add("duval", {4});
    add("jorgensen", {3, 1});
    add("jorgensen", {4, 1});
    add("jorgensen", {5, 1});
    add("jorgensen", {5, 2});
    add("jorgensen", {6, 1});
    add("jorgensen", {7, 2});
    add("jorgensen", {7, 3});
    add("jorgensen", {9, 4});
    add("triangular", {5});
    add("triangular", {7});
    add("triangular", {9});
    add("triangular", {11});
    add("tri_complement", {6});
    add("lattice", {2});
    add("lattice", {3});
    add("lattice", {4});
    add("lattice", {5});
    add("lattice", {6});
    add("lattice", {7});
    add("lattice", {8});
    add("dihedral", {5});
    add("dihedral", {7});
    add("dihedral", {9});
    add("dihedral", {11});
    add("dihedral", {13});
    add("petersen");
    add("clebsch");
    add("shrikhande");
    add("a_15_5");
    add("a_16");
    add("a_18_7");
    add("metacyclic21");
    add("s4", {1});
    add("s4", {2});
    add("s4", {3});
    add("hoffman_singleton");
    return out;
}

FamilySpec parse_family(const std::string& id, const std::vector<std::int64_t>& params) {
    FamilySpec spec{id, params};
    documented_params(spec);  // validates id and parameter domain
    return spec;
}

}  // namespace dsrg
