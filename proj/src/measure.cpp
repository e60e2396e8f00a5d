#include "ergocap/measure.hpp"

#include "ergocap/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace ergocap {

namespace {

void require_same_length(int a, int b, const char* what) {
    if (a != b)
        throw InputError(std::string(what) + ": length mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
}

}  // namespace

Measure::Measure(std::vector<Rational> mass) : mass_(std::move(mass)) {
    Rational total = 0;
    for (std::size_t i = 0; i < mass_.size(); ++i) {
        if (mass_[i] < 0)
            throw InputError("measure entry " + std::to_string(i) + " is negative");
        total += mass_[i];
    }
    if (total != 1) throw InputError("measure entries sum to " + to_string(total) + ", not 1");
}

Rational Measure::of(Event a) const {
    Rational s = 0;
    for (int i = 0; i < size(); ++i)
        if (event_contains(a, i)) s += mass_[i];
    return s;
}

Measure dirac(int n, int state) {
    std::vector<Rational> m(n, Rational(0));
    m.at(state) = 1;
    return Measure(std::move(m));
}

Measure uniform_on(int n, Event support) {
    const int k = event_size(support);
    if (k == 0) throw InputError("uniform_on: empty support");
    std::vector<Rational> m(n, Rational(0));
    for (int i = 0; i < n; ++i)
        if (event_contains(support, i)) m[i] = Rational(1, k);
    return Measure(std::move(m));
}

Rational SignedMeasure::of(Event a) const {
    Rational s = 0;
    for (int i = 0; i < size(); ++i)
        if (event_contains(a, i)) s += mass[i];
    return s;
}

SignedMeasure operator-(const Measure& a, const Measure& b) {
    require_same_length(a.size(), b.size(), "signed difference");
    SignedMeasure d;
    d.mass.reserve(a.size());
    for (int i = 0; i < a.size(); ++i) d.mass.push_back(a[i] - b[i]);
    return d;
}

RandomVariable constant_rv(int n, const Rational& c) {
    return RandomVariable{std::vector<Rational>(n, c)};
}

bool lex_less(const Measure& a, const Measure& b) {
    return std::lexicographical_compare(a.mass().begin(), a.mass().end(),
                                        b.mass().begin(), b.mass().end());
}

Rational expectation(const Measure& p, const RandomVariable& xi) {
    require_same_length(p.size(), xi.size(), "expectation");
    Rational s = 0;
    for (int i = 0; i < p.size(); ++i) s += p[i] * xi[i];
    return s;
}

UpperExpectation upper_expectation_detail(const std::vector<Measure>& ps,
                                          const RandomVariable& xi) {
    if (ps.empty()) throw InputError("upper_expectation: empty measure set");
    UpperExpectation out;
    out.value = expectation(ps[0], xi);
    out.maximizers = {0};
    for (std::size_t i = 1; i < ps.size(); ++i) {
        const Rational e = expectation(ps[i], xi);
        if (e > out.value) {
            out.value = e;
            out.maximizers = {static_cast<int>(i)};
        } else if (e == out.value) {
            out.maximizers.push_back(static_cast<int>(i));
        }
    }
    return out;
}

Rational upper_expectation(const std::vector<Measure>& ps, const RandomVariable& xi) {
    return upper_expectation_detail(ps, xi).value;
}

HahnDecomposition hahn_decomposition(const SignedMeasure& mu) {
    HahnDecomposition h{0, 0};
    for (int i = 0; i < mu.size(); ++i) {
        if (mu.mass[i] >= 0)
            h.positive |= Event{1} << i;
        else
            h.negative |= Event{1} << i;
    }
    return h;
}

Measure conditional_measure(const Measure& p, Event b) {
    const Rational pb = p.of(b);
    if (pb == 0) throw ConditioningError("conditional_measure: conditioning event has mass 0");
    std::vector<Rational> m(p.size(), Rational(0));
    for (int i = 0; i < p.size(); ++i)
        if (event_contains(b, i)) m[i] = p[i] / pb;
    return Measure(std::move(m));
}

}  // namespace ergocap
