#pragma once

#include "ergocap/event.hpp"
#include "ergocap/rational.hpp"

#include <compare>
#include <vector>

namespace ergocap {

// A probability measure on {0,...,n-1}. Entries are validated on
// construction: nonnegative and summing to exactly 1.
class Measure {
public:
    explicit Measure(std::vector<Rational> mass);

    int size() const { return static_cast<int>(mass_.size()); }
    const Rational& operator[](int state) const { return mass_[state]; }
    const std::vector<Rational>& mass() const { return mass_; }

    Rational of(Event a) const;

    friend bool operator==(const Measure&, const Measure&) = default;

private:
    std::vector<Rational> mass_;
};

// Point mass at a single state.
Measure dirac(int n, int state);

// Uniform distribution on a nonempty event.
Measure uniform_on(int n, Event support);

struct SignedMeasure {
    std::vector<Rational> mass;

    int size() const { return static_cast<int>(mass.size()); }
    Rational of(Event a) const;
};

SignedMeasure operator-(const Measure& a, const Measure& b);

struct RandomVariable {
    std::vector<Rational> values;

    int size() const { return static_cast<int>(values.size()); }
    const Rational& operator[](int state) const { return values[state]; }

    friend bool operator==(const RandomVariable&, const RandomVariable&) = default;
};

RandomVariable constant_rv(int n, const Rational& c);

// Lexicographic order on the mass vectors; the canonical ordering used
// whenever vertex sets are compared or serialized.
bool lex_less(const Measure& a, const Measure& b);

// E_P[xi], exact.
Rational expectation(const Measure& p, const RandomVariable& xi);

struct UpperExpectation {
    Rational value;
    std::vector<int> maximizers;  // indices into the input set
};

// max_P E_P[xi] over a finite nonempty set, with the argmax set.
UpperExpectation upper_expectation_detail(const std::vector<Measure>& ps,
                                          const RandomVariable& xi);
Rational upper_expectation(const std::vector<Measure>& ps, const RandomVariable& xi);

struct HahnDecomposition {
    Event positive;  // {w : mu(w) >= 0}; zeros go to the positive side
    Event negative;
};

HahnDecomposition hahn_decomposition(const SignedMeasure& mu);

// P(. | b). Throws ConditioningError when P(b) = 0.
Measure conditional_measure(const Measure& p, Event b);

}  // namespace ergocap
