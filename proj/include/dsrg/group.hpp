#pragma once

#include <string>
#include <vector>

#include "dsrg/digraph.hpp"

namespace dsrg {

// Finite group as an explicit multiplication table. op(x,y) is the product
// x*y; permutation groups compose left-to-right (x first, then y), matching
// the exponent notation p^(xy) = (p^x)^y used for the printed connection
// sets and coset partitions.
struct GroupTable {
    int order = 0;
    std::vector<int> mul;  // order x order, row-major
    std::vector<int> inverse;
    int identity = 0;
    std::vector<std::string> labels;

    int op(int x, int y) const { return mul[static_cast<std::size_t>(x) * order + y]; }

    // Checks identity, inverse and associativity laws; throws on violation.
    void validate() const;

    int element(const std::string& label) const;  // lookup by label, throws if absent
};

GroupTable cyclic_group(int n);
GroupTable dihedral_group(int n);  // order 2n; labels 1, r, ..., s, sr, ...
GroupTable symmetric_group_4();    // labels in cycle notation, e.g. (1,2)(3,4)
GroupTable metacyclic_group_21();  // <x,y | x^3 = y^7 = 1, x y^2 = y x>
GroupTable elementary_abelian_2(int m);
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

// Cayley digraph over h: dart x -> y iff y * x^{-1} is in the connection
// set. Requires the identity to stay outside the connection set.
Digraph cayley_digraph(const GroupTable& h, const std::vector<int>& connection);

// Subgroup generated by the given elements, as a sorted element list.
std::vector<int> generated_subgroup(const GroupTable& g, const std::vector<int>& gens);

}  // namespace dsrg
