#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsrg/bitmatrix.hpp"

namespace dsrg {

// (n,k,t,lambda,mu): order, valency, digons per vertex, and 2-path counts
// towards out-neighbours / non-neighbours.
struct ParameterSet {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t t = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;

    bool operator==(const ParameterSet&) const = default;
    std::string str() const;
};

// t=k collapses to an undirected SRG, t=0 to a doubly regular tournament;
// both are admitted wherever a (D)SRG is, with the boundary noted by kind.
enum class ParameterKind { ProperDsrg, Srg, Tournament, Degenerate };

ParameterKind parameter_kind(const ParameterSet& p);

struct ConditionVerdict {
    std::string name;
    bool satisfied = false;
    std::string detail;
};

struct FeasibilityReport {
    std::vector<ConditionVerdict> conditions;
    bool feasible = false;                   // conjunction of all conditions
    std::optional<std::int64_t> d;           // d > 0 with d^2 = (mu-lambda)^2 + 4(t-mu)
    std::optional<std::int64_t> s;           // (2k - (mu-lambda)(n-1)) / d
};

// Evaluates the arithmetic feasibility conditions independently; failures
// are verdicts, never exceptions.
FeasibilityReport feasibility_check(const ParameterSet& p);

struct Spectrum {
    std::int64_t theta0 = 0, theta1 = 0, theta2 = 0;  // theta1 > theta2
    std::int64_t m0 = 1, m1 = 0, m2 = 0;

    bool operator==(const Spectrum&) const = default;
};

// Integer eigenvalues theta0=k, theta12 = (lambda-mu +- d)/2 and their
// multiplicities from the trace system m1+m2 = n-1, k + m1*theta1 +
// m2*theta2 = 0. Throws when the discriminant is not a positive perfect
// square or a multiplicity comes out non-integral or non-positive.
Spectrum spectrum(const ParameterSet& p);

// Parameter set of the complementary digraph; throws when a component would
// be negative (p not complement-admissible).
ParameterSet complement_params(const ParameterSet& p);

// Parameter set ((ja+1)n, jn+k, jb+t, jb+lambda, jb+mu) of the pi-join in
// power j over a cells of size b. Requires ab = n and j >= 1.
ParameterSet pi_join_params(const ParameterSet& p, std::int64_t a, std::int64_t b,
                            std::int64_t j);

// Exact integer square root when x is a perfect square.
std::optional<std::int64_t> perfect_sqrt(std::int64_t x);

}  // namespace dsrg
