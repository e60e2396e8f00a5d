#pragma once

#include "ergocap/measure.hpp"

#include <vector>

namespace ergocap {

// A finite deterministic system: states {0,...,n-1} with self-map T.
class FiniteSystem {
public:
    FiniteSystem(int n, std::vector<int> map);

    int size() const { return n_; }
    int step(int state) const { return map_[state]; }
    const std::vector<int>& map() const { return map_; }

private:
    int n_;
    std::vector<int> map_;
};

// The invariant algebra of a functional graph, in concrete form: its atoms
// are the weakly connected components, each containing a unique cycle.
struct InvariantStructure {
    std::vector<Event> components;          // ordered by smallest member
    std::vector<std::vector<int>> cycles;   // per component, starting at smallest cycle state
    std::vector<Event> cycle_events;        // bitmask of each cycle
    std::vector<int> cycle_lengths;
    std::vector<int> basin;                 // state -> component index
    std::vector<int> preperiod;             // state -> steps until entering its cycle

    int component_count() const { return static_cast<int>(components.size()); }
    int max_preperiod() const;
    // lcm of all cycle lengths
    long long period_lcm() const;
};

InvariantStructure analyze(const FiniteSystem& sys);

// {w : T(w) in a}
Event preimage(const FiniteSystem& sys, Event a);

// true iff T^{-1}A = A, equivalently A is a union of components.
bool is_invariant_set(const FiniteSystem& sys, Event a);

// (T_* P)(w') = sum of P over the fiber of w'.
Measure pushforward(const FiniteSystem& sys, const Measure& p);

// (1/h) * sum_{k<h} T_*^k P, exact.
Measure cesaro_average(const FiniteSystem& sys, const Measure& p, int horizon);

// The exact Cesaro limit of the pushforward averages, in closed form:
// each state's mass is spread uniformly over the cycle its orbit enters.
// The result is T-invariant and agrees with P on every invariant event.
Measure cesaro_invariantize(const FiniteSystem& sys, const Measure& p);
Measure cesaro_invariantize(const FiniteSystem& sys, const InvariantStructure& inv,
                            const Measure& p);

// (1/h) * sum_{k<h} xi(T^k w)
Rational birkhoff_average(const FiniteSystem& sys, const RandomVariable& xi, int omega,
                          int horizon);

// The exact limit of the time means: the mean of xi over the cycle that
// omega's orbit enters. limsup and liminf coincide on finite systems.
Rational birkhoff_limit(const FiniteSystem& sys, const RandomVariable& xi, int omega);

// The full limit function xi*, constant on every component.
RandomVariable birkhoff_limit_function(const FiniteSystem& sys, const InvariantStructure& inv,
                                       const RandomVariable& xi);

}  // namespace ergocap
