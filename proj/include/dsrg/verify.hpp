#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsrg/digraph.hpp"
#include "dsrg/params.hpp"

namespace dsrg {

enum class ClassifyKind { Dsrg, Srg, CompleteGraph, NotStronglyRegular };

// First vertex pair found to violate regularity or 2-path constancy,
// together with what was expected there.
struct RegularityWitness {
    int u = -1;
    int v = -1;
    std::string reason;
};

struct ClassifyResult {
    ClassifyKind kind = ClassifyKind::NotStronglyRegular;
    ParameterSet params;  // valid for Dsrg/Srg; for CompleteGraph mu is undefined
    std::optional<RegularityWitness> witness;

    bool strongly_regular() const {
        return kind == ClassifyKind::Dsrg || kind == ClassifyKind::Srg;
    }
    std::string str() const;
};

// Recovers (n,k,t,lambda,mu) from the adjacency matrix: k from row/column
// sums, t from the diagonal of A^2, lambda from entries of A^2 where A=1 and
// mu from off-diagonal entries where A=0. A graph with no off-diagonal zero
// is reported complete (mu undefined).
ClassifyResult classify(const Digraph& g);

struct IsoOptions {
    std::uint64_t node_budget = 10'000'000;
};

enum class IsoStatus { Found, Absent, Undecided };

struct IsoResult {
    IsoStatus status = IsoStatus::Absent;
    std::vector<int> mapping;  // when Found: adj2[map[u]][map[v]] == adj1[u][v]
    std::uint64_t nodes = 0;
};

// Digraph isomorphism by iterated in/out colour refinement plus
// individualisation backtracking over refined colour classes
// (smallest-class-first). Exceeding the node budget yields Undecided,
// never a wrong answer.
IsoResult isomorphic(const Digraph& g1, const Digraph& g2, IsoOptions opts = {});

enum class EquivalenceClass {
    Isomorphic,
    ReverseIsomorphic,
    ComplementIsomorphic,
    ReverseComplementIsomorphic,
    NonEquivalent,
    Undecided,
};

std::string to_string(EquivalenceClass c);

struct EquivalenceVerdict {
    EquivalenceClass cls = EquivalenceClass::NonEquivalent;
    // When found, sigma with T(g2)[sigma(u)][sigma(v)] == g1[u][v] where T is
    // the transformation named by cls.
    std::vector<int> mapping;
};

// Tests g1 against g2, g2^T, complement(g2), complement(g2)^T in that fixed
// order and reports the first hit.
EquivalenceVerdict equivalence(const Digraph& g1, const Digraph& g2, IsoOptions opts = {});

}  // namespace dsrg
