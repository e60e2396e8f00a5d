#include "ergocap/capacity.hpp"

#include "ergocap/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace ergocap {

namespace {

constexpr int kMaxTabulatedStates = 24;

}  // namespace

Capacity Capacity::from_generators(std::vector<Measure> generators) {
    if (generators.empty()) throw InputError("capacity needs at least one generator");
    const int n = generators[0].size();
    for (const auto& g : generators)
        if (g.size() != n) throw InputError("capacity generators have mixed lengths");
    if (n > kMaxTabulatedStates)
        throw ResourceError("state count " + std::to_string(n) + " exceeds tabulation limit " +
                            std::to_string(kMaxTabulatedStates));

    Capacity cap;
    cap.n_ = n;
    cap.generators_ = std::move(generators);
    const Event full = full_event(n);
    cap.values_.assign(static_cast<std::size_t>(full) + 1, Rational(0));
    for (Event a = 1; a <= full; ++a) {
        Rational best = cap.generators_[0].of(a);
        for (std::size_t i = 1; i < cap.generators_.size(); ++i)
            best = std::max(best, cap.generators_[i].of(a));
        cap.values_[a] = best;
    }
    return cap;
}

namespace {

// Events sorted by cardinality then value, so the first counterexample
// found is minimal-cardinality.
std::vector<Event> events_by_cardinality(int n) {
    std::vector<Event> evs;
    evs.reserve(std::size_t{1} << n);
    for (Event a = 0; a <= full_event(n); ++a) evs.push_back(a);
    std::stable_sort(evs.begin(), evs.end(),
                     [](Event a, Event b) { return event_size(a) < event_size(b); });
    return evs;
}

}  // namespace

CapacityCheck is_invariant_capacity(const Capacity& cap, const FiniteSystem& sys) {
    if (cap.size() != sys.size()) throw InputError("is_invariant_capacity: size mismatch");
    for (Event a : events_by_cardinality(cap.size()))
        if (cap.of(a) != cap.of(preimage(sys, a))) return {false, a};
    return {true, std::nullopt};
}

CapacityCheck is_ergodic_capacity(const Capacity& cap, const FiniteSystem& sys,
                                  const InvariantStructure& inv) {
    if (cap.size() != sys.size()) throw InputError("is_ergodic_capacity: size mismatch");
    const int m = inv.component_count();
    std::vector<Event> invariant_events;
    invariant_events.reserve(std::size_t{1} << m);
    for (Event sel = 0; sel < (Event{1} << m); ++sel) {
        Event a = 0;
        for (int c = 0; c < m; ++c)
            if (event_contains(sel, c)) a |= inv.components[c];
        invariant_events.push_back(a);
    }
    std::stable_sort(invariant_events.begin(), invariant_events.end(),
                     [](Event a, Event b) { return event_size(a) < event_size(b); });
    for (Event a : invariant_events) {
        const Rational& v = cap.of(a);
        if (v != 0 && v != 1) return {false, a};
    }
    return {true, std::nullopt};
}

bool core_membership(const Capacity& cap, const Measure& p) {
    if (cap.size() != p.size()) throw InputError("core_membership: size mismatch");
    for (Event a = 1; a < full_event(cap.size()); ++a)
        if (p.of(a) > cap.of(a)) return false;
    return true;
}

Rational choquet_integral(const Capacity& cap, const RandomVariable& xi) {
    if (cap.size() != xi.size()) throw InputError("choquet_integral: size mismatch");
    std::vector<Rational> levels = xi.values;
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    // C = t_min + sum over higher levels of (t_j - t_{j+1}) V(xi >= t_j).
    Rational c = levels.back();
    for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
        Event at_least = 0;
        for (int i = 0; i < xi.size(); ++i)
            if (xi[i] >= levels[j]) at_least |= Event{1} << i;
        c += (levels[j] - levels[j + 1]) * cap.of(at_least);
    }
    return c;
}

TwoAlternatingCheck is_two_alternating(const Capacity& cap) {
    const Event full = full_event(cap.size());
    for (Event a = 0; a <= full; ++a)
        for (Event b = a; b <= full; ++b)
            if (cap.of(a | b) + cap.of(a & b) > cap.of(a) + cap.of(b))
                return {false, std::make_pair(a, b)};
    return {true, std::nullopt};
}

}  // namespace ergocap
