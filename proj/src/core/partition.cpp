#include "dsrg/partition.hpp"

#include <sstream>

namespace dsrg {

Partition Partition::from_assignment(std::vector<int> assign) {
    if (assign.empty()) fail("partition: empty assignment");
    const int n = static_cast<int>(assign.size());

    // renumber cells by first occurrence
    std::vector<int> remap;
    for (int v = 0; v < n; ++v) {
        int c = assign[v];
        if (c < 0) fail("partition: negative cell index");
        int id = -1;
        for (std::size_t i = 0; i < remap.size(); ++i)
            if (remap[i] == c) { id = static_cast<int>(i); break; }
        if (id < 0) {
            id = static_cast<int>(remap.size());
            remap.push_back(c);
        }
        assign[v] = id;
    }

    Partition p;
    p.a_ = static_cast<int>(remap.size());
    std::vector<int> sizes(p.a_, 0);
    for (int v = 0; v < n; ++v) ++sizes[assign[v]];
    for (int c = 1; c < p.a_; ++c)
        if (sizes[c] != sizes[0])
            fail("partition: not homogeneous (cell sizes " + std::to_string(sizes[0]) +
                 " vs " + std::to_string(sizes[c]) + ")");
    p.b_ = sizes[0];
    p.assign_ = std::move(assign);
    return p;
}

Partition Partition::from_cells(int n, const std::vector<std::vector<int>>& cells) {
    std::vector<int> assign(n, -1);
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) {
            if (v < 0 || v >= n) fail("partition: vertex index out of range");
            if (assign[v] != -1) fail("partition: vertex listed twice");
            assign[v] = static_cast<int>(c);
        }
    for (int v = 0; v < n; ++v)
        if (assign[v] == -1) fail("partition: vertex " + std::to_string(v + 1) + " missing");
    return from_assignment(std::move(assign));
}

std::vector<std::vector<int>> Partition::cells() const {
    std::vector<std::vector<int>> out(a_);
    for (int v = 0; v < n(); ++v) out[assign_[v]].push_back(v);
    return out;
}

Partition parse_partition(std::string_view text) {
    std::vector<int> assign;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') {  // rest of the line is a comment
            std::string rest;
            std::getline(is, rest);
            continue;
        }
        long c = 0;
        bool ok = true;
        try {
            std::size_t pos = 0;
            c = std::stol(tok, &pos);
            ok = pos == tok.size();
        } catch (...) {
            ok = false;
        }
        if (!ok || c < 1) fail("partition: invalid cell label '" + tok + "'");
        assign.push_back(static_cast<int>(c - 1));
    }
    if (assign.empty()) fail("partition: no cell labels found");
    return Partition::from_assignment(std::move(assign));
}

std::string format_partition(const Partition& p) {
    std::ostringstream os;
    for (int v = 0; v < p.n(); ++v) {
        if (v) os << ' ';
        os << p.cell_of(v) + 1;
    }
    return os.str();
}

}  // namespace dsrg
