#pragma once

#include "ergocap/dynamics.hpp"
#include "ergocap/measure.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ergocap {

// An upper probability V(A) = max_P P(A) over a finite generator set,
// tabulated over all 2^n events. Always an envelope; arbitrary set
// functions are not representable.
class Capacity {
public:
    static Capacity from_generators(std::vector<Measure> generators);

    int size() const { return n_; }
    const Rational& of(Event a) const { return values_[a]; }
    const std::vector<Measure>& generators() const { return generators_; }

private:
    Capacity() = default;
    int n_ = 0;
    std::vector<Rational> values_;
    std::vector<Measure> generators_;
};

inline Capacity capacity_from_generators(std::vector<Measure> generators) {
    return Capacity::from_generators(std::move(generators));
}

struct CapacityCheck {
    bool holds = false;
    std::optional<Event> witness;  // minimal-cardinality counterexample
};

// V(A) = V(T^{-1}A) for all events?
CapacityCheck is_invariant_capacity(const Capacity& cap, const FiniteSystem& sys);

// V restricted to invariant events takes only values 0 and 1?
CapacityCheck is_ergodic_capacity(const Capacity& cap, const FiniteSystem& sys,
                                  const InvariantStructure& inv);

// P(A) <= V(A) for all 2^n events.
bool core_membership(const Capacity& cap, const Measure& p);

// The Choquet integral, by summing rectangles over the sorted distinct
// values of xi. Handles signed xi; equals the two-integral definition.
Rational choquet_integral(const Capacity& cap, const RandomVariable& xi);

struct TwoAlternatingCheck {
    bool holds = false;
    std::optional<std::pair<Event, Event>> witness;  // pair violating submodularity
};

// V(A u B) + V(A n B) <= V(A) + V(B) over all event pairs.
TwoAlternatingCheck is_two_alternating(const Capacity& cap);

}  // namespace ergocap
