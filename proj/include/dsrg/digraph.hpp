#pragma once

#include <string>
#include <string_view>

#include "dsrg/bitmatrix.hpp"

namespace dsrg {

// Simple directed graph carried as a square 0/1 adjacency matrix with zero
// diagonal; entry (u,v)=1 means a dart u -> v. Immutable after construction,
// safe to share between threads.
class Digraph {
public:
    explicit Digraph(DenseBinaryMatrix adj) : adj_(std::move(adj)) {
        if (adj_.rows() != adj_.cols()) fail("digraph adjacency matrix must be square");
        for (int v = 0; v < adj_.rows(); ++v)
            if (adj_.get(v, v)) fail("digraph adjacency matrix must have zero diagonal");
    }

    static Digraph empty(int n) { return Digraph(DenseBinaryMatrix(n, n)); }

    int order() const { return adj_.rows(); }
    const DenseBinaryMatrix& adj() const { return adj_; }
    bool arc(int u, int v) const { return adj_.get(u, v); }
    int out_degree(int v) const { return adj_.row_popcount(v); }

    bool operator==(const Digraph& o) const { return adj_ == o.adj_; }

private:
    DenseBinaryMatrix adj_;
};

Digraph transpose(const Digraph& g);
Digraph complement(const Digraph& g);

// Digraph relabelled by `order`: vertex order[i] of g becomes vertex i.
Digraph permuted(const Digraph& g, const std::vector<int>& order);

// Matrix file format: optional '#' comment lines, one line with the order n,
// then n lines of exactly n characters from {0,1} (row i = out-neighbourhood
// of vertex i). Rejects nonsquare data, nonzero diagonal and stray symbols.
Digraph read_matrix(std::string_view text);
std::string write_matrix(const Digraph& g);

}  // namespace dsrg
