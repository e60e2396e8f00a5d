// Small construction helpers shared by the test files.
#pragma once

#include "ergocap/capacity.hpp"
#include "ergocap/io.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace ergocap::testing {

inline Rational q(const std::string& s) { return parse_rational(s); }

inline Measure measure(std::initializer_list<std::string> entries) {
    std::vector<Rational> mass;
    for (const auto& e : entries) mass.push_back(parse_rational(e));
    return Measure(std::move(mass));
}

inline RandomVariable rv(std::initializer_list<std::string> entries) {
    std::vector<Rational> values;
    for (const auto& e : entries) values.push_back(parse_rational(e));
    return RandomVariable{std::move(values)};
}

inline SignedMeasure signed_measure(std::initializer_list<std::string> entries) {
    SignedMeasure m;
    for (const auto& e : entries) m.mass.push_back(parse_rational(e));
    return m;
}

inline Event ev(std::initializer_list<int> idx, int n) {
    return event_from_indices(std::vector<int>(idx), n);
}

// The reference instance used throughout: two disjoint 2-cycles with one
// uniform generator per cycle.
inline Capacity s1_capacity() {
    return capacity_from_generators(
        {measure({"1/2", "1/2", "0", "0"}), measure({"0", "0", "1/2", "1/2"})});
}

inline FiniteSystem s1_system() { return FiniteSystem(4, {1, 0, 3, 2}); }

// A random dominated measure: convex combination of a capacity's generators.
inline Measure random_core_member(const std::vector<Measure>& extremes, Rng& rng) {
    const int k = static_cast<int>(extremes.size());
    const int n = extremes[0].size();
    const int den = 1 + static_cast<int>(rng.below(8));
    std::vector<int> units(k, 0);
    for (int u = 0; u < den; ++u) units[rng.below(k)]++;
    std::vector<Rational> mass(n, Rational(0));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) mass[i] += Rational(units[j], den) * extremes[j][i];
    return Measure(std::move(mass));
}

}  // namespace ergocap::testing
