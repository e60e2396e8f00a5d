#include "ergocap/theorems.hpp"

#include "ergocap/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ergocap {

const char* status_name(Status s) {
    switch (s) {
        case Status::Holds: return "HOLDS";
        case Status::Violated: return "VIOLATED";
        case Status::HypothesisUnmet: return "HYPOTHESIS-UNMET";
    }
    return "?";
}

namespace {

std::string event_str(Event a) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i : event_to_indices(a)) {
        if (!first) os << ",";
        os << i;
        first = false;
    }
    os << "}";
    return os.str();
}

std::string measure_str(const Measure& p) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << to_string(p[i]);
    }
    os << ")";
    return os.str();
}

// Unions of components, i.e. all invariant events.
std::vector<Event> invariant_events(const InvariantStructure& inv) {
    const int m = inv.component_count();
    std::vector<Event> out;
    out.reserve(std::size_t{1} << m);
    for (Event sel = 0; sel < (Event{1} << m); ++sel) {
        Event a = 0;
        for (int c = 0; c < m; ++c)
            if (event_contains(sel, c)) a |= inv.components[c];
        out.push_back(a);
    }
    return out;
}

std::optional<std::string> unmet_ergodic_hypotheses(const InstanceContext& ctx) {
    if (!ctx.invariant.holds)
        return "capacity is not invariant (witness " + event_str(*ctx.invariant.witness) + ")";
    if (!ctx.ergodic.holds)
        return "capacity is not ergodic (witness " + event_str(*ctx.ergodic.witness) + ")";
    return std::nullopt;
}

bool measure_in_list(const std::vector<Measure>& list, const Measure& p) {
    return std::find(list.begin(), list.end(), p) != list.end();
}

}  // namespace

InstanceContext::InstanceContext(FiniteSystem s, Capacity c)
    : sys(std::move(s)),
      inv(analyze(sys)),
      cap(std::move(c)),
      invariant(is_invariant_capacity(cap, sys)),
      ergodic(is_ergodic_capacity(cap, sys, inv)),
      credal(build_credal_core(cap, sys, inv)) {
    if (cap.size() != sys.size()) throw InputError("capacity/system size mismatch");
}

Verdict check_invariantization(const InstanceContext& ctx, const Measure& p) {
    if (!ctx.invariant.holds)
        return {Status::HypothesisUnmet,
                "capacity is not invariant (witness " + event_str(*ctx.invariant.witness) + ")"};
    if (!core_membership(ctx.cap, p))
        throw InputError("check_invariantization: P is not in the core");

    const Measure pp = cesaro_invariantize(ctx.sys, ctx.inv, p);
    if (pushforward(ctx.sys, pp) != pp)
        return {Status::Violated, "P' = " + measure_str(pp) + " is not invariant"};
    if (!core_membership(ctx.cap, pp))
        return {Status::Violated, "P' = " + measure_str(pp) + " is not dominated by V"};
    for (Event a : invariant_events(ctx.inv))
        if (pp.of(a) != p.of(a))
            return {Status::Violated,
                    "P' disagrees with P on the invariant event " + event_str(a)};
    return {Status::Holds, ""};
}

ZeroOneWitness zero_one_witness(const InstanceContext& ctx, Event a) {
    if (!is_invariant_set(ctx.sys, a))
        throw InputError("zero_one_witness: event " + event_str(a) + " is not invariant");
    if (ctx.cap.of(a) == 0)
        throw InputError("zero_one_witness: V(" + event_str(a) + ") = 0");
    if (auto reason = unmet_ergodic_hypotheses(ctx))
        return {{Status::HypothesisUnmet, *reason}, std::nullopt};

    for (int c = 0; c < ctx.inv.component_count(); ++c) {
        if (!event_subset(ctx.inv.components[c], a)) continue;
        Measure u = uniform_on(ctx.sys.size(), ctx.inv.cycle_events[c]);
        if (core_membership(ctx.cap, u)) return {{Status::Holds, ""}, std::move(u)};
    }
    return {{Status::Violated,
             "no invariant core member gives " + event_str(a) + " full mass"},
            std::nullopt};
}

namespace {

// A conclusion evaluated under unmet hypotheses is reported inside the
// HYPOTHESIS-UNMET verdict; it is a necessity witness, not a violation.
Verdict with_hypotheses(const std::optional<std::string>& reason, bool diagnostic,
                        const Verdict& conclusion) {
    if (!reason) return conclusion;
    if (!diagnostic) return {Status::HypothesisUnmet, *reason};
    std::string detail = *reason + "; diagnostic: ";
    detail += conclusion.holds() ? "conclusion holds anyway"
                                 : "conclusion fails: " + conclusion.detail;
    return {Status::HypothesisUnmet, detail};
}

}  // namespace

Verdict check_ac_closure(const InstanceContext& ctx, bool diagnostic) {
    const auto reason = unmet_ergodic_hypotheses(ctx);
    if (reason && !diagnostic) return {Status::HypothesisUnmet, *reason};

    Verdict conclusion{Status::Holds, ""};
    for (int c = 0; c < ctx.inv.component_count(); ++c) {
        const Event cyc = ctx.inv.cycle_events[c];
        const bool charged = std::any_of(
            ctx.credal.theta0.begin(), ctx.credal.theta0.end(),
            [&](const Measure& p) { return p.of(cyc) > 0; });
        if (!charged) continue;
        const Measure u = uniform_on(ctx.sys.size(), cyc);
        if (!core_membership(ctx.cap, u)) {
            conclusion = {Status::Violated,
                          "ergodic measure " + measure_str(u) +
                              " is absolutely continuous w.r.t. an invariant core "
                              "member but lies outside the core"};
            break;
        }
    }
    return with_hypotheses(reason, diagnostic, conclusion);
}

Verdict check_structure(const InstanceContext& ctx, bool diagnostic) {
    const auto reason = unmet_ergodic_hypotheses(ctx);
    if (reason && !diagnostic) return {Status::HypothesisUnmet, *reason};

    Verdict conclusion{Status::Holds, ""};
    if (ctx.credal.theta_star.empty()) {
        conclusion = {Status::Violated, "theta_star is empty"};
    } else if (ctx.credal.theta0 != ctx.credal.theta_star) {
        std::ostringstream os;
        os << "vertex set of Theta0 (" << ctx.credal.theta0.size()
           << " vertices) differs from Theta* (" << ctx.credal.theta_star.size()
           << " measures)";
        conclusion = {Status::Violated, os.str()};
    }
    return with_hypotheses(reason, diagnostic, conclusion);
}

DecompositionResult ergodic_decomposition(const InstanceContext& ctx, const Measure& p) {
    if (pushforward(ctx.sys, p) != p)
        throw InputError("ergodic_decomposition: P is not invariant");
    if (!core_membership(ctx.cap, p))
        throw InputError("ergodic_decomposition: P is not dominated by V");

    DecompositionResult out;
    for (int c = 0; c < ctx.inv.component_count(); ++c) {
        const Event b = ctx.inv.components[c];
        const Rational w = p.of(b);
        if (w == 0) continue;
        Measure pk = conditional_measure(p, b);
        // Invariant restricted to a component must be uniform on its cycle.
        if (pk != uniform_on(ctx.sys.size(), ctx.inv.cycle_events[c]))
            throw TheoremViolation("decomposition component on " + event_str(b) +
                                   " is not ergodic");
        if (ctx.ergodic.holds && ctx.invariant.holds &&
            !measure_in_list(ctx.credal.theta_star, pk))
            throw TheoremViolation("decomposition component " + measure_str(pk) +
                                   " is not in theta_star");
        out.weights.push_back(w);
        out.components.push_back(std::move(pk));
        out.atoms.push_back(b);
    }
    return out;
}

namespace {

BoundReport compute_bound_report(const InstanceContext& ctx, const RandomVariable& xi) {
    BoundReport r;
    RandomVariable neg{xi.values};
    for (auto& v : neg.values) v = -v;
    r.upper = upper_expectation(ctx.credal.theta0, xi);
    r.lower = -upper_expectation(ctx.credal.theta0, neg);
    r.xi_star = birkhoff_limit_function(ctx.sys, ctx.inv, xi);
    r.choquet_xi_star = choquet_integral(ctx.cap, r.xi_star);
    r.choquet_xi = choquet_integral(ctx.cap, xi);
    r.sup_core = upper_expectation(ctx.credal.core, xi);
    for (int c = 0; c < ctx.inv.component_count(); ++c)
        r.per_component_limits.push_back(r.xi_star[event_to_indices(ctx.inv.components[c])[0]]);
    return r;
}

}  // namespace

ErgodicBoundResult check_ergodic_bound(const InstanceContext& ctx, const RandomVariable& xi) {
    if (xi.size() != ctx.sys.size()) throw InputError("check_ergodic_bound: length mismatch");
    BoundReport r = compute_bound_report(ctx, xi);
    if (auto reason = unmet_ergodic_hypotheses(ctx))
        return {{Status::HypothesisUnmet, *reason}, std::move(r)};

    // Pointwise bound on every state the capacity charges; this covers the
    // a.s. statement for every dominated P.
    for (int w = 0; w < ctx.sys.size(); ++w) {
        if (ctx.cap.of(Event{1} << w) == 0) continue;
        if (r.xi_star[w] < r.lower || r.xi_star[w] > r.upper)
            return {{Status::Violated,
                     "time-mean limit " + to_string(r.xi_star[w]) + " at state " +
                         std::to_string(w) + " escapes [" + to_string(r.lower) + ", " +
                         to_string(r.upper) + "]"},
                    std::move(r)};
    }

    // Conditional-expectation identity on the invariant atoms.
    for (const Measure& p : ctx.credal.theta0) {
        for (int c = 0; c < ctx.inv.component_count(); ++c) {
            const Event b = ctx.inv.components[c];
            if (p.of(b) == 0) continue;
            const Rational cond = expectation(conditional_measure(p, b), xi);
            if (cond != r.per_component_limits[c])
                return {{Status::Violated,
                         "conditional expectation on atom " + event_str(b) + " is " +
                             to_string(cond) + ", expected " +
                             to_string(r.per_component_limits[c])},
                        std::move(r)};
        }
    }
    return {{Status::Holds, ""}, std::move(r)};
}

ErgodicBoundResult bound_report(const InstanceContext& ctx, const RandomVariable& xi) {
    if (xi.size() != ctx.sys.size()) throw InputError("bound_report: length mismatch");
    BoundReport r = compute_bound_report(ctx, xi);
    if (auto reason = unmet_ergodic_hypotheses(ctx))
        return {{Status::HypothesisUnmet, *reason}, std::move(r)};

    if (r.upper > r.choquet_xi_star)
        return {{Status::Violated, "E0[xi] = " + to_string(r.upper) + " exceeds C_V[xi*] = " +
                                       to_string(r.choquet_xi_star)},
                std::move(r)};
    // In this model class the two upper bounds coincide; a gap would mean a
    // computation bug, not a mathematical discovery.
    if (r.upper != r.choquet_xi_star)
        return {{Status::Violated, "E0[xi] = " + to_string(r.upper) + " != C_V[xi*] = " +
                                       to_string(r.choquet_xi_star)},
                std::move(r)};
    if (r.sup_core > r.choquet_xi)
        return {{Status::Violated, "sup-core expectation " + to_string(r.sup_core) +
                                       " exceeds C_V[xi] = " + to_string(r.choquet_xi)},
                std::move(r)};
    return {{Status::Holds, ""}, std::move(r)};
}

}  // namespace ergocap
