#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "dsrg/pijoin.hpp"

namespace dsrg {

struct SearchOptions {
    std::size_t limit = static_cast<std::size_t>(-1);
    int jobs = 1;
    // wall-clock cut-off; search reports exhausted=false when it fires
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SearchResult {
    std::vector<Partition> partitions;  // lexicographically smallest assignment first
    bool exhausted = true;              // false when limit or deadline stopped the search
    std::uint64_t nodes = 0;
};

// Pruned backtracking over cell assignments: vertex 0 pinned to cell 0,
// cells introduced in first-occurrence order, branches cut as soon as some
// vertex's in-dart count from a cell can no longer meet the target quotient
// entry. Deterministic output for any job count. An empty exhausted result
// is a proof of nonexistence.
SearchResult find_good_partitions(const Digraph& g, const JoinSolution& s,
                                  SearchOptions opts = {});

// Complete enumeration of all homogeneous (a,b)-partitions filtered by the
// quotient condition; the independent oracle for the pruned search. Throws
// when the enumeration count exceeds `guard`.
std::vector<Partition> brute_force_partitions(const Digraph& g, const JoinSolution& s,
                                              std::uint64_t guard = 1'000'000);

// Number of homogeneous partitions of n vertices into a cells of size b.
std::uint64_t homogeneous_partition_count(int a, int b);

// Validates that s comes from solve_eq1 of g's parameters (or is a legal
// complete-graph shape) and returns the target quotient.
QuotientMatrix search_target(const Digraph& g, const JoinSolution& s);

// JoinSolution for (a,b) on this graph: the complete-graph shape for
// complete inputs, otherwise the matching solve_eq1 entry. Throws when
// (a,b) is not admissible.
JoinSolution resolve_shape(const Digraph& g, std::int64_t a, std::int64_t b);

}  // namespace dsrg
