#pragma once

#include "ergocap/vertex_enum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ergocap {

enum class Status { Holds, Violated, HypothesisUnmet };

const char* status_name(Status s);

struct Verdict {
    Status status = Status::Holds;
    std::string detail;  // witness description or unmet-hypothesis reason

    bool holds() const { return status == Status::Holds; }
};

// Shared per-instance context for the checkers.
struct InstanceContext {
    FiniteSystem sys;
    InvariantStructure inv;
    Capacity cap;
    CapacityCheck invariant;
    CapacityCheck ergodic;
    CredalCore credal;

    InstanceContext(FiniteSystem s, Capacity c);
};

// The invariantization statement: the Cesaro limit P' of a core member P is
// invariant, dominated, and agrees with P on every invariant event.
// Requires an invariant capacity; P must itself be in the core.
Verdict check_invariantization(const InstanceContext& ctx, const Measure& p);

struct ZeroOneWitness {
    Verdict verdict;
    std::optional<Measure> witness;  // P' in Theta0 with P'(A) = 1
};

// For an invariant event with V(A) > 0, produce an invariant core member
// giving A full mass (scan over cycles inside A).
ZeroOneWitness zero_one_witness(const InstanceContext& ctx, Event a);

// Absolute-continuity closure: any ergodic measure dominated-in-support by
// some invariant core member must itself lie in the core. `diagnostic`
// evaluates the conclusion even when the hypotheses fail.
Verdict check_ac_closure(const InstanceContext& ctx, bool diagnostic = false);

// Structure statement: theta_star is nonempty and finite, and equals the
// vertex set of the invariant slice of the core.
Verdict check_structure(const InstanceContext& ctx, bool diagnostic = false);

struct DecompositionResult {
    std::vector<Rational> weights;    // P(B_k), positive, summing to 1
    std::vector<Measure> components;  // P(. | B_k), ergodic
    std::vector<Event> atoms;         // the invariant events B_k
};

// Splits an invariant core member over the components it charges.
DecompositionResult ergodic_decomposition(const InstanceContext& ctx, const Measure& p);

struct BoundReport {
    Rational upper;                     // E0[xi]
    Rational lower;                     // -E0[-xi]
    Rational choquet_xi_star;           // C_V[xi*]
    Rational choquet_xi;                // C_V[xi]
    Rational sup_core;                  // max over core vertices of E_P[xi]
    RandomVariable xi_star;             // the exact Birkhoff limit function
    std::vector<Rational> per_component_limits;
};

struct ErgodicBoundResult {
    Verdict verdict;
    BoundReport report;
};

// Two-sided time-mean bound by the invariant-slice upper expectation,
// checked pointwise on every state with positive singleton capacity, plus
// the conditional-expectation identity on invariant atoms.
ErgodicBoundResult check_ergodic_bound(const InstanceContext& ctx, const RandomVariable& xi);

// Comparison of the invariant-slice bound against the Choquet integrals;
// asserts E0[xi] = C_V[xi*] (an identity in this model class) and
// sup-core E_P[xi] <= C_V[xi].
ErgodicBoundResult bound_report(const InstanceContext& ctx, const RandomVariable& xi);

}  // namespace ergocap
