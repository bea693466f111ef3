#pragma once

#include <string>
#include <vector>

#include "dsrg/group.hpp"
#include "dsrg/pijoin.hpp"

namespace dsrg {

// Generator id plus integer parameters, e.g. {"jorgensen", {3, 1}}.
struct FamilySpec {
    std::string id;
    std::vector<std::int64_t> params;

    std::string str() const;
    bool operator==(const FamilySpec&) const = default;
};

// Families:
//   complete n          K_n
//   duval k             line digraph of the complete digraph on k+1 points,
//                       (k^2+k, k, 1, 0, 1)
//   jorgensen k mu      vertices Z_n, n=(k^2-1)/mu, dart x->y iff
//                       x+ky in {1..k}; requires mu | k-1
//   triangular n        line graph of K_n
//   tri_complement n    complement of triangular(n)
//   lattice n           rook's graph L_2(n)
//   dihedral n          Cayley DSRG (2n, n-1, (n-1)/2, (n-3)/2, (n-1)/2), n odd
//   petersen            complement of triangular(5)
//   clebsch             16 binary 4-strings, adjacent at Hamming distance 1 or 4
//   shrikhande          Cayley graph over Z4 x Z4, connection +-{(1,0),(0,1),(1,1)}
//   a_15_5, a_16, a_18_7   embedded adjacency matrices
//   metacyclic21        Cayley DSRG(21,6,2,1,2) over <x,y | x^3=y^7=1, xy^2=yx>
//   s4 m                Cayley DSRG over S4, m in {1,2,3}
//   hoffman_singleton   SRG(50,7,0,1)
Digraph make_graph(const FamilySpec& spec);

// Expected classification of make_graph (complete graphs: t=k=n-1 with mu
// meaningless and set to 0 like classify does).
ParameterSet documented_params(const FamilySpec& spec);

// Documented good partitions for the given admissible shape; empty when the
// family carries none for this shape (caller falls back to search).
std::vector<Partition> known_partitions(const FamilySpec& spec, const JoinSolution& s);

// The generator corpus exercised by the test and acceptance suites.
std::vector<FamilySpec> shipped_specs();

// Verbatim matrix file text for a_15_5 / a_16 / a_18_7.
const char* embedded_matrix_text(const std::string& id);

FamilySpec parse_family(const std::string& id, const std::vector<std::int64_t>& params);

}  // namespace dsrg
