#include "ergocap/vertex_enum.hpp"

#include "ergocap/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>

namespace ergocap {

namespace {

// Tight-constraint index sets as packed bitsets.
using TightSet = std::vector<std::uint64_t>;

TightSet make_tight_set(std::size_t bits) { return TightSet((bits + 63) / 64, 0); }

void set_bit(TightSet& t, std::size_t i) { t[i / 64] |= std::uint64_t{1} << (i % 64); }

TightSet intersect(const TightSet& a, const TightSet& b) {
    TightSet out(a.size());
    for (std::size_t w = 0; w < a.size(); ++w) out[w] = a[w] & b[w];
    return out;
}

bool contains_all(const TightSet& big, const TightSet& small) {
    for (std::size_t w = 0; w < big.size(); ++w)
        if ((small[w] & ~big[w]) != 0) return false;
    return true;
}

struct DDVertex {
    std::vector<Rational> coords;
    TightSet tight;
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

std::vector<std::vector<Rational>> enumerate_standard_polytope(
    int dim, const std::vector<LinearConstraint>& cuts) {
    // Constraint indexing: [0, dim) nonnegativity, dim + j for cuts[j].
    const std::size_t total_constraints = dim + cuts.size();

    std::vector<DDVertex> verts;
    for (int i = 0; i < dim; ++i) {
        DDVertex v;
        v.coords.assign(dim, Rational(0));
        v.coords[i] = 1;
        v.tight = make_tight_set(total_constraints);
        for (int j = 0; j < dim; ++j)
            if (j != i) set_bit(v.tight, j);
        verts.push_back(std::move(v));
    }

    for (std::size_t j = 0; j < cuts.size(); ++j) {
        const auto& cut = cuts[j];
        std::vector<Rational> slack(verts.size());
        std::vector<std::size_t> sat, tight, viol;
        for (std::size_t k = 0; k < verts.size(); ++k) {
            slack[k] = cut.rhs - dot(cut.coeffs, verts[k].coords);
            if (slack[k] > 0)
                sat.push_back(k);
            else if (slack[k] == 0)
                tight.push_back(k);
            else
                viol.push_back(k);
        }
        for (std::size_t k : tight) set_bit(verts[k].tight, dim + j);
        if (viol.empty()) continue;

        std::vector<DDVertex> next;
        for (std::size_t k : sat) next.push_back(verts[k]);
        for (std::size_t k : tight) next.push_back(verts[k]);

        for (std::size_t p : sat) {
            for (std::size_t m : viol) {
                // Combinatorial adjacency: no third vertex is tight on
                // everything both endpoints are tight on.
                const TightSet common = intersect(verts[p].tight, verts[m].tight);
                bool adjacent = true;
                for (std::size_t k = 0; k < verts.size() && adjacent; ++k)
                    if (k != p && k != m && contains_all(verts[k].tight, common))
                        adjacent = false;
                if (!adjacent) continue;

                const Rational lambda = slack[p] / (slack[p] - slack[m]);
                DDVertex nv;
                nv.coords.resize(dim);
                for (int i = 0; i < dim; ++i)
                    nv.coords[i] =
                        verts[p].coords[i] + lambda * (verts[m].coords[i] - verts[p].coords[i]);
                // Exact tight set at the new point, over constraints seen so far.
                nv.tight = make_tight_set(total_constraints);
                for (int i = 0; i < dim; ++i)
                    if (nv.coords[i] == 0) set_bit(nv.tight, i);
                for (std::size_t jj = 0; jj <= j; ++jj)
                    if (dot(cuts[jj].coeffs, nv.coords) == cuts[jj].rhs)
                        set_bit(nv.tight, dim + jj);

                if (std::none_of(next.begin(), next.end(),
                                 [&](const DDVertex& v) { return v.coords == nv.coords; }))
                    next.push_back(std::move(nv));
            }
        }
        verts = std::move(next);
        if (verts.empty()) return {};
    }

    std::vector<std::vector<Rational>> out;
    out.reserve(verts.size());
    for (auto& v : verts) out.push_back(std::move(v.coords));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int max_enumeration_states() {
    if (const char* env = std::getenv("ERGOCAP_MAX_STATES")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 8;
}

namespace {

void check_dimension_cap(int n) {
    const int cap = max_enumeration_states();
    if (n > cap)
        throw ResourceError("vertex enumeration over " + std::to_string(n) +
                            " states exceeds the cap of " + std::to_string(cap) +
                            "; set ERGOCAP_MAX_STATES to raise it");
}

// Dominance constraint for A is implied by a split A = B + (A\B) with
// V(B) + V(A\B) <= V(A).
bool dominance_redundant(const Capacity& cap, Event a) {
    if (cap.of(a) >= 1) return true;
    for (Event b = (a - 1) & a; b != 0; b = (b - 1) & a)
        if (b != a && cap.of(b) + cap.of(a & ~b) <= cap.of(a)) return true;
    return false;
}

std::vector<Event> dominance_events(const Capacity& cap, Event universe) {
    std::vector<Event> evs;
    for (Event a = universe; a != 0; a = (a - 1) & universe)
        if (!dominance_redundant(cap, a)) evs.push_back(a);
    // Insert smaller events first.
    std::stable_sort(evs.begin(), evs.end(),
                     [](Event x, Event y) { return event_size(x) < event_size(y); });
    return evs;
}

std::vector<Measure> to_sorted_measures(std::vector<std::vector<Rational>> pts) {
    std::vector<Measure> out;
    out.reserve(pts.size());
    for (auto& p : pts) out.emplace_back(std::move(p));
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace

std::vector<Measure> core_vertices(const Capacity& cap) {
    const int n = cap.size();
    check_dimension_cap(n);
    std::vector<LinearConstraint> cuts;
    for (Event a : dominance_events(cap, full_event(n))) {
        LinearConstraint c;
        c.coeffs.assign(n, Rational(0));
        for (int i = 0; i < n; ++i)
            if (event_contains(a, i)) c.coeffs[i] = 1;
        c.rhs = cap.of(a);
        cuts.push_back(std::move(c));
    }
    return to_sorted_measures(enumerate_standard_polytope(n, cuts));
}

std::vector<Measure> theta0_vertices(const Capacity& cap, const FiniteSystem& sys,
                                     const InvariantStructure& inv) {
    const int n = cap.size();
    check_dimension_cap(n);
    const int m = inv.component_count();
    std::vector<Measure> cycle_uniform;
    Event cycle_union = 0;
    for (int c = 0; c < m; ++c) {
        cycle_uniform.push_back(uniform_on(n, inv.cycle_events[c]));
        cycle_union |= inv.cycle_events[c];
    }

    // An invariant measure is a convex combination of the cycle uniforms;
    // enumerate in weight space. Constraints for events outside the cycle
    // union are implied by monotonicity.
    std::vector<LinearConstraint> cuts;
    for (Event a : dominance_events(cap, cycle_union)) {
        LinearConstraint c;
        c.coeffs.reserve(m);
        for (int k = 0; k < m; ++k) c.coeffs.push_back(cycle_uniform[k].of(a));
        c.rhs = cap.of(a);
        cuts.push_back(std::move(c));
    }

    std::vector<Measure> out;
    for (const auto& lambda : enumerate_standard_polytope(m, cuts)) {
        std::vector<Rational> mass(n, Rational(0));
        for (int k = 0; k < m; ++k)
            for (int i = 0; i < n; ++i) mass[i] += lambda[k] * cycle_uniform[k][i];
        out.emplace_back(std::move(mass));
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Measure> theta_star(const Capacity& cap, const FiniteSystem& sys,
                                const InvariantStructure& inv) {
    const int n = cap.size();
    std::vector<Measure> out;
    for (int c = 0; c < inv.component_count(); ++c) {
        const Event cyc = inv.cycle_events[c];
        const Measure u = uniform_on(n, cyc);
        bool dominated = true;
        // Dominance outside the cycle follows from monotonicity of V.
        for (Event a = cyc; a != 0 && dominated; a = (a - 1) & cyc)
            if (u.of(a) > cap.of(a)) dominated = false;
        if (dominated) out.push_back(u);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

CredalCore build_credal_core(const Capacity& cap, const FiniteSystem& sys,
                             const InvariantStructure& inv) {
    return CredalCore{core_vertices(cap), theta0_vertices(cap, sys, inv),
                      theta_star(cap, sys, inv)};
}

}  // namespace ergocap
