#include "dsrg/digraph.hpp"

#include <cctype>
#include <sstream>

namespace dsrg {

Digraph transpose(const Digraph& g) { return Digraph(transpose(g.adj())); }

Digraph complement(const Digraph& g) {
    int n = g.order();
    DenseBinaryMatrix m(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !g.arc(u, v)) m.set(u, v, true);
    return Digraph(std::move(m));
}

Digraph permuted(const Digraph& g, const std::vector<int>& order) {
    int n = g.order();
    if (static_cast<int>(order.size()) != n) fail("permutation length mismatch");
    DenseBinaryMatrix m(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.arc(order[u], order[v])) m.set(u, v, true);
    return Digraph(std::move(m));
}

namespace {

// Splits text into lines, dropping '#' comments and blank lines.
std::vector<std::string> content_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    auto flush = [&] {
        while (!cur.empty() && (cur.back() == '\r' || cur.back() == ' ' || cur.back() == '\t'))
            cur.pop_back();
        std::size_t start = 0;
        while (start < cur.size() && (cur[start] == ' ' || cur[start] == '\t')) ++start;
        std::string trimmed = cur.substr(start);
        if (!trimmed.empty() && trimmed[0] != '#') lines.push_back(trimmed);
        cur.clear();
    };
    for (char ch : text) {
        if (ch == '\n')
            flush();
        else
            cur.push_back(ch);
    }
    flush();
    return lines;
}

}  // namespace

Digraph read_matrix(std::string_view text) {
    std::vector<std::string> lines = content_lines(text);
    if (lines.empty()) fail("matrix file: missing order line");

    long n = 0;
    try {
        std::size_t pos = 0;
        n = std::stol(lines[0], &pos);
        if (pos != lines[0].size()) fail("");
    } catch (...) {
        fail("matrix file: malformed order line '" + lines[0] + "'");
    }
    if (n < 1) fail("matrix file: order must be >= 1");
    if (static_cast<long>(lines.size()) != n + 1)
        fail("matrix file: expected " + std::to_string(n) + " rows, found " +
             std::to_string(lines.size() - 1));

    DenseBinaryMatrix m(static_cast<int>(n), static_cast<int>(n));
    for (long r = 0; r < n; ++r) {
        const std::string& row = lines[r + 1];
        if (static_cast<long>(row.size()) != n)
            fail("matrix file: row " + std::to_string(r + 1) + " has length " +
                 std::to_string(row.size()) + ", expected " + std::to_string(n));
        for (long c = 0; c < n; ++c) {
            char ch = row[c];
            if (ch != '0' && ch != '1')
                fail(std::string("matrix file: invalid symbol '") + ch + "' in row " +
                     std::to_string(r + 1));
            if (ch == '1') {
                if (r == c)
                    fail("matrix file: nonzero diagonal at vertex " + std::to_string(r + 1));
                m.set(static_cast<int>(r), static_cast<int>(c), true);
            }
        }
    }
    return Digraph(std::move(m));
}

std::string write_matrix(const Digraph& g) {
    std::ostringstream os;
    int n = g.order();
    os << n << '\n';
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) os << (g.arc(r, c) ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

}  // namespace dsrg
