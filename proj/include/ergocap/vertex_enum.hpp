#pragma once

#include "ergocap/capacity.hpp"

#include <vector>

namespace ergocap {

// A halfspace coeffs . x <= rhs over the standard simplex.
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rational rhs;
};

// Exact vertex enumeration for {x >= 0, sum x = 1, A x <= b} by incremental
// double description: start from the simplex vertices and cut with each
// halfspace in turn, using the combinatorial adjacency test on tight sets.
// Output is deduplicated and lexicographically sorted. Empty iff infeasible.
std::vector<std::vector<Rational>> enumerate_standard_polytope(
    int dim, const std::vector<LinearConstraint>& cuts);

// Dimension cap for the enumeration entry points; reads ERGOCAP_MAX_STATES,
// default 8.
int max_enumeration_states();

// Extreme points of the core {P : P(A) <= V(A) for all A}.
std::vector<Measure> core_vertices(const Capacity& cap);

// Extreme points of the invariant slice of the core. Invariant measures of a
// functional graph are exactly the convex combinations of uniform-on-cycle
// measures, so the enumeration runs in cycle-weight space.
std::vector<Measure> theta0_vertices(const Capacity& cap, const FiniteSystem& sys,
                                     const InvariantStructure& inv);

// The ergodic measures in the core: uniform-on-cycle measures passing all
// dominance constraints inside their cycle.
std::vector<Measure> theta_star(const Capacity& cap, const FiniteSystem& sys,
                                const InvariantStructure& inv);

struct CredalCore {
    std::vector<Measure> core;
    std::vector<Measure> theta0;
    std::vector<Measure> theta_star;
};

CredalCore build_credal_core(const Capacity& cap, const FiniteSystem& sys,
                             const InvariantStructure& inv);

}  // namespace ergocap
