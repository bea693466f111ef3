#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dsrg/bitmatrix.hpp"

namespace dsrg {

// Homogeneous vertex partition into a cells of size b, ab = n, held as a
// cell-assignment vector in canonical form: cells numbered by first
// occurrence, so vertex 0 always sits in cell 0.
class Partition {
public:
    static Partition from_assignment(std::vector<int> assign);
    static Partition from_cells(int n, const std::vector<std::vector<int>>& cells);

    int n() const { return static_cast<int>(assign_.size()); }
    int cell_count() const { return a_; }
    int cell_size() const { return b_; }
    int cell_of(int v) const { return assign_[v]; }
    const std::vector<int>& assignment() const { return assign_; }
    std::vector<std::vector<int>> cells() const;

    bool operator==(const Partition& o) const { return assign_ == o.assign_; }
    bool operator<(const Partition& o) const { return assign_ < o.assign_; }

private:
    Partition() = default;
    std::vector<int> assign_;
    int a_ = 0;
    int b_ = 0;
};

// File/CLI format: one line of n whitespace-separated 1-based cell labels
// (vertex i's cell). Canonicalised on read.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

}  // namespace dsrg
