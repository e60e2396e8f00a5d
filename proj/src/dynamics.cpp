#include "ergocap/dynamics.hpp"

#include "ergocap/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace ergocap {

FiniteSystem::FiniteSystem(int n, std::vector<int> map) : n_(n), map_(std::move(map)) {
    if (n_ < 1) throw InputError("state count must be positive");
    if (static_cast<int>(map_.size()) != n_)
        throw InputError("map has " + std::to_string(map_.size()) + " entries, expected " +
                         std::to_string(n_));
    for (int i = 0; i < n_; ++i)
        if (map_[i] < 0 || map_[i] >= n_)
            throw InputError("map[" + std::to_string(i) + "]=" + std::to_string(map_[i]) +
                             " out of range");
}

int InvariantStructure::max_preperiod() const {
    return *std::max_element(preperiod.begin(), preperiod.end());
}

long long InvariantStructure::period_lcm() const {
    long long l = 1;
    for (int c : cycle_lengths) l = std::lcm(l, static_cast<long long>(c));
    return l;
}

InvariantStructure analyze(const FiniteSystem& sys) {
    const int n = sys.size();

    // Union-find over w ~ T(w) gives the weakly connected components.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i) {
        int a = find(i), b = find(sys.step(i));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    // Component indices in order of smallest member.
    std::vector<int> root_to_comp(n, -1);
    InvariantStructure inv;
    inv.basin.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        const int r = find(i);
        if (root_to_comp[r] < 0) {
            root_to_comp[r] = inv.component_count();
            inv.components.push_back(0);
        }
        const int c = root_to_comp[r];
        inv.basin[i] = c;
        inv.components[c] |= Event{1} << i;
    }

    // Cycle states: iterate n steps from any state to land on the cycle.
    std::vector<bool> on_cycle(n, false);
    for (int i = 0; i < n; ++i) {
        int w = i;
        for (int k = 0; k < n; ++k) w = sys.step(w);
        on_cycle[w] = true;
    }

    inv.cycles.resize(inv.component_count());
    inv.cycle_events.assign(inv.component_count(), 0);
    for (int i = 0; i < n; ++i) {
        if (!on_cycle[i]) continue;
        const int c = inv.basin[i];
        inv.cycle_events[c] |= Event{1} << i;
    }
    inv.cycle_lengths.resize(inv.component_count());
    for (int c = 0; c < inv.component_count(); ++c) {
        // Canonical listing starts at the smallest cycle state.
        const int start = event_to_indices(inv.cycle_events[c]).front();
        int w = start;
        do {
            inv.cycles[c].push_back(w);
            w = sys.step(w);
        } while (w != start);
        inv.cycle_lengths[c] = static_cast<int>(inv.cycles[c].size());
    }

    inv.preperiod.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        int w = i, k = 0;
        while (!on_cycle[w]) {
            w = sys.step(w);
            ++k;
        }
        inv.preperiod[i] = k;
    }
    return inv;
}

Event preimage(const FiniteSystem& sys, Event a) {
    Event out = 0;
    for (int i = 0; i < sys.size(); ++i)
        if (event_contains(a, sys.step(i))) out |= Event{1} << i;
    return out;
}

bool is_invariant_set(const FiniteSystem& sys, Event a) {
    return preimage(sys, a) == a;
}

Measure pushforward(const FiniteSystem& sys, const Measure& p) {
    if (p.size() != sys.size()) throw InputError("pushforward: length mismatch");
    std::vector<Rational> m(sys.size(), Rational(0));
    for (int i = 0; i < sys.size(); ++i) m[sys.step(i)] += p[i];
    return Measure(std::move(m));
}

Measure cesaro_average(const FiniteSystem& sys, const Measure& p, int horizon) {
    if (horizon < 1) throw InputError("cesaro_average: horizon must be >= 1");
    std::vector<Rational> acc(sys.size(), Rational(0));
    Measure q = p;
    for (int k = 0; k < horizon; ++k) {
        for (int i = 0; i < sys.size(); ++i) acc[i] += q[i];
        if (k + 1 < horizon) q = pushforward(sys, q);
    }
    for (auto& x : acc) x /= horizon;
    return Measure(std::move(acc));
}

Measure cesaro_invariantize(const FiniteSystem& sys, const InvariantStructure& inv,
                            const Measure& p) {
    if (p.size() != sys.size()) throw InputError("cesaro_invariantize: length mismatch");
    std::vector<Rational> m(sys.size(), Rational(0));
    for (int i = 0; i < sys.size(); ++i) {
        if (p[i] == 0) continue;
        const int c = inv.basin[i];
        const Rational share = p[i] / inv.cycle_lengths[c];
        for (int w : inv.cycles[c]) m[w] += share;
    }
    return Measure(std::move(m));
}

Measure cesaro_invariantize(const FiniteSystem& sys, const Measure& p) {
    return cesaro_invariantize(sys, analyze(sys), p);
}

Rational birkhoff_average(const FiniteSystem& sys, const RandomVariable& xi, int omega,
                          int horizon) {
    if (horizon < 1) throw InputError("birkhoff_average: horizon must be >= 1");
    if (xi.size() != sys.size()) throw InputError("birkhoff_average: length mismatch");
    Rational s = 0;
    int w = omega;
    for (int k = 0; k < horizon; ++k) {
        s += xi[w];
        w = sys.step(w);
    }
    return s / horizon;
}

Rational birkhoff_limit(const FiniteSystem& sys, const RandomVariable& xi, int omega) {
    if (xi.size() != sys.size()) throw InputError("birkhoff_limit: length mismatch");
    const auto inv = analyze(sys);
    const int c = inv.basin.at(omega);
    Rational s = 0;
    for (int w : inv.cycles[c]) s += xi[w];
    return s / inv.cycle_lengths[c];
}

RandomVariable birkhoff_limit_function(const FiniteSystem& sys, const InvariantStructure& inv,
                                       const RandomVariable& xi) {
    if (xi.size() != sys.size()) throw InputError("birkhoff_limit_function: length mismatch");
    std::vector<Rational> cycle_mean(inv.component_count());
    for (int c = 0; c < inv.component_count(); ++c) {
        Rational s = 0;
        for (int w : inv.cycles[c]) s += xi[w];
        cycle_mean[c] = s / inv.cycle_lengths[c];
    }
    std::vector<Rational> v(sys.size());
    for (int i = 0; i < sys.size(); ++i) v[i] = cycle_mean[inv.basin[i]];
    return RandomVariable{std::move(v)};
}

}  // namespace ergocap
