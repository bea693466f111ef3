#pragma once

#include <optional>
#include <vector>

#include "dsrg/digraph.hpp"
#include "dsrg/params.hpp"
#include "dsrg/partition.hpp"
#include "dsrg/verify.hpp"

namespace dsrg {

// Admissible cell shape (a,b) for the pi-join: ab = n with
// 2k + mu - lambda = a*mu + b and lambda + b - k >= 0. diag/offdiag are the
// entries of the required quotient matrix (lambda+b-k) I + mu (J-I).
struct JoinSolution {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t diag = 0;
    std::int64_t offdiag = 0;

    bool operator==(const JoinSolution&) const = default;
};

// All (a,b) with ab=n, a>=2, b>=2 satisfying the admissibility equation,
// sorted by a ascending. apply_eq2=false keeps the raw solutions that the
// nonnegativity condition lambda+b-k >= 0 would remove.
std::vector<JoinSolution> solve_eq1(const ParameterSet& p, bool apply_eq2 = true);

// Complete graphs carry no mu, so every homogeneous split is admissible;
// the effective quotient is (b-1) I + b (J-I).
JoinSolution complete_join_solution(std::int64_t n, std::int64_t a);

using QuotientMatrix = IntegerMatrix;

QuotientMatrix target_quotient(const JoinSolution& s);

struct QuotientWitness {
    int vertex = -1;
    int cell = -1;
};

// The measured per-cell in-dart counts when the partition is column
// equitable (A^T H = H Q), or nullopt with the first violating
// (vertex, cell) pair.
std::optional<QuotientMatrix> measure_quotient(const Digraph& g, const Partition& pi,
                                               QuotientWitness* witness = nullptr);

// True iff (a,b) is admissible for classify(g) and the measured quotient
// equals the required one. For complete graphs any homogeneous partition
// with a >= 2 qualifies. Throws when g is not strongly regular.
bool is_good_partition(const Digraph& g, const Partition& pi);

// n x n matrix with ones exactly in columns (i-1)b+1 .. ib (1-based i<=a).
DenseBinaryMatrix u_matrix(int i, int a, int b);

// Permutation making the adjacency matrix respect pi: stable sort of the
// vertices by cell, then original index.
std::vector<int> respecting_order(const Partition& pi);

struct PiJoin {
    Digraph graph;        // the block circulant M_j(A) on (ja+1)n vertices
    std::vector<int> order;  // vertex order applied to g before block assembly
};

PiJoin build_pi_join(const Digraph& g, const Partition& pi, int j);

}  // namespace dsrg
