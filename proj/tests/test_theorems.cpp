#include "ergocap/errors.hpp"
#include "ergocap/theorems.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ergocap;
using namespace ergocap::testing;

namespace {

InstanceContext s1_context() { return InstanceContext(s1_system(), s1_capacity()); }

InstanceContext non_ergodic_context() {
    return InstanceContext(FiniteSystem(2, {0, 1}),
                           capacity_from_generators({measure({"1/2", "1/2"})}));
}

}  // namespace

TEST_CASE("invariantization checker") {
    const auto ctx = s1_context();
    CHECK_THROWS_AS(check_invariantization(ctx, measure({"1", "0", "0", "0"})), InputError);
    // Every core member of the reference instance is already invariant
    // (the core is the segment between the two invariant generators), and
    // (1/2,0,1/2,0) lies outside it: its mass on {0,2} is 1 > V({0,2}).
    CHECK_THROWS_AS(check_invariantization(ctx, measure({"1/2", "0", "1/2", "0"})),
                    InputError);
    CHECK(check_invariantization(ctx, measure({"1/2", "1/2", "0", "0"})).holds());
    CHECK(check_invariantization(ctx, measure({"1/4", "1/4", "1/4", "1/4"})).holds());

    // Same map with interleaved generators: the core now contains
    // non-invariant measures and invariantization genuinely averages.
    InstanceContext mixed(
        s1_system(),
        capacity_from_generators(
            {measure({"1/2", "0", "1/2", "0"}), measure({"0", "1/2", "0", "1/2"})}));
    REQUIRE(mixed.invariant.holds);
    const auto p = measure({"1/2", "0", "1/2", "0"});
    CHECK(check_invariantization(mixed, p).holds());
    CHECK(cesaro_invariantize(mixed.sys, p) == measure({"1/4", "1/4", "1/4", "1/4"}));
}

TEST_CASE("invariantization needs an invariant capacity") {
    const auto cap = capacity_from_generators({measure({"0", "0", "1/2", "1/2"})});
    InstanceContext ctx(FiniteSystem(4, {1, 0, 0, 2}), cap);
    CHECK(check_invariantization(ctx, cap.generators()[0]).status ==
          Status::HypothesisUnmet);
}

TEST_CASE("zero-one witness") {
    const auto ctx = s1_context();
    auto w = zero_one_witness(ctx, ev({0, 1}, 4));
    REQUIRE(w.verdict.holds());
    CHECK(*w.witness == measure({"1/2", "1/2", "0", "0"}));

    w = zero_one_witness(ctx, ev({2, 3}, 4));
    REQUIRE(w.verdict.holds());
    CHECK(*w.witness == measure({"0", "0", "1/2", "1/2"}));

    w = zero_one_witness(ctx, full_event(4));
    REQUIRE(w.verdict.holds());
    CHECK(w.witness->of(full_event(4)) == 1);

    CHECK_THROWS_AS(zero_one_witness(ctx, ev({0}, 4)), InputError);

    // V(A) = 0 on an invariant event.
    InstanceContext half(s1_system(),
                         capacity_from_generators({measure({"1/2", "1/2", "0", "0"})}));
    CHECK_THROWS_AS(zero_one_witness(half, ev({2, 3}, 4)), InputError);

    CHECK(zero_one_witness(non_ergodic_context(), ev({0}, 2)).verdict.status ==
          Status::HypothesisUnmet);
}

TEST_CASE("absolute-continuity closure") {
    CHECK(check_ac_closure(s1_context()).holds());

    const auto ne = non_ergodic_context();
    CHECK(check_ac_closure(ne).status == Status::HypothesisUnmet);
    // Diagnostic mode exposes that the conclusion genuinely needs the
    // hypotheses: the point masses are dominated in support but not in core.
    const auto diag = check_ac_closure(ne, true);
    CHECK(diag.status == Status::HypothesisUnmet);
    CHECK(diag.detail.find("conclusion fails") != std::string::npos);

    const FiniteSystem cyc3(3, {1, 2, 0});
    InstanceContext c3(cyc3, capacity_from_generators({measure({"1/3", "1/3", "1/3"})}));
    CHECK(check_ac_closure(c3).holds());
}

TEST_CASE("structure checker") {
    CHECK(check_structure(s1_context()).holds());

    InstanceContext simplex(FiniteSystem(2, {0, 1}),
                            capacity_from_generators({dirac(2, 0), dirac(2, 1)}));
    CHECK(check_structure(simplex).holds());
    CHECK(simplex.credal.theta0.size() == 2);

    const auto ne = non_ergodic_context();
    CHECK(check_structure(ne).status == Status::HypothesisUnmet);
    const auto diag = check_structure(ne, true);
    CHECK(diag.status == Status::HypothesisUnmet);
    CHECK(diag.detail.find("conclusion fails") != std::string::npos);
}

TEST_CASE("ergodic decomposition") {
    const auto ctx = s1_context();
    const auto dec = ergodic_decomposition(ctx, measure({"1/4", "1/4", "1/4", "1/4"}));
    REQUIRE(dec.weights.size() == 2);
    CHECK(dec.weights[0] == Rational(1, 2));
    CHECK(dec.weights[1] == Rational(1, 2));
    CHECK(dec.components[0] == measure({"1/2", "1/2", "0", "0"}));
    CHECK(dec.components[1] == measure({"0", "0", "1/2", "1/2"}));
    CHECK(dec.atoms[0] == ev({0, 1}, 4));
    CHECK(dec.atoms[1] == ev({2, 3}, 4));

    const auto single = ergodic_decomposition(ctx, measure({"1/2", "1/2", "0", "0"}));
    REQUIRE(single.weights.size() == 1);
    CHECK(single.weights[0] == 1);
    CHECK(single.components[0] == measure({"1/2", "1/2", "0", "0"}));

    InstanceContext c3(FiniteSystem(3, {1, 2, 0}),
                       capacity_from_generators({measure({"1/3", "1/3", "1/3"})}));
    const auto d3 = ergodic_decomposition(c3, measure({"1/3", "1/3", "1/3"}));
    REQUIRE(d3.weights.size() == 1);
    CHECK(d3.atoms[0] == full_event(3));

    CHECK_THROWS_AS(ergodic_decomposition(ctx, measure({"1", "0", "0", "0"})), InputError);
}

TEST_CASE("decomposition identity on random invariant core members") {
    Rng rng(83);
    int tested = 0;
    for (int t = 0; t < 60 && tested < 25; ++t) {
        const int n = 2 + static_cast<int>(rng.below(5));
        const auto inst = generate_ergodic_instance(n, rng.next());
        InstanceContext ctx(inst.sys, inst.cap);
        if (ctx.credal.theta0.empty()) continue;
        const Measure p = random_core_member(ctx.credal.theta0, rng);
        const auto dec = ergodic_decomposition(ctx, p);
        Rational wsum = 0;
        for (const auto& w : dec.weights) wsum += w;
        CHECK(wsum == 1);
        for (Event a = 0; a <= full_event(n); ++a) {
            Rational mix = 0;
            for (std::size_t k = 0; k < dec.weights.size(); ++k)
                mix += dec.weights[k] * dec.components[k].of(a);
            CHECK(mix == p.of(a));
        }
        ++tested;
    }
    CHECK(tested >= 25);
}

TEST_CASE("ergodic bound checker") {
    const auto ctx = s1_context();
    auto r = check_ergodic_bound(ctx, rv({"1", "0", "0", "0"}));
    CHECK(r.verdict.holds());
    CHECK(r.report.upper == Rational(1, 2));
    CHECK(r.report.lower == 0);
    CHECK(r.report.xi_star == rv({"1/2", "1/2", "0", "0"}));

    r = check_ergodic_bound(ctx, constant_rv(4, Rational(-2, 5)));
    CHECK(r.verdict.holds());
    CHECK(r.report.upper == Rational(-2, 5));
    CHECK(r.report.lower == Rational(-2, 5));
    CHECK(r.report.xi_star == constant_rv(4, Rational(-2, 5)));

    r = check_ergodic_bound(ctx, rv({"1", "0", "1", "0"}));
    CHECK(r.verdict.holds());
    CHECK(r.report.upper == Rational(1, 2));
    CHECK(r.report.lower == Rational(1, 2));
    CHECK(r.report.xi_star == constant_rv(4, Rational(1, 2)));

    CHECK(check_ergodic_bound(non_ergodic_context(), rv({"1", "0"})).verdict.status ==
          Status::HypothesisUnmet);
}

TEST_CASE("bound comparison report") {
    const auto ctx = s1_context();
    auto r = bound_report(ctx, rv({"1", "0", "0", "0"}));
    CHECK(r.verdict.holds());
    CHECK(r.report.upper == Rational(1, 2));
    CHECK(r.report.choquet_xi_star == Rational(1, 2));
    CHECK(r.report.choquet_xi == Rational(1, 2));

    r = bound_report(ctx, constant_rv(4, Rational(3, 7)));
    CHECK(r.verdict.holds());
    CHECK(r.report.upper == Rational(3, 7));
    CHECK(r.report.lower == Rational(3, 7));
    CHECK(r.report.choquet_xi_star == Rational(3, 7));
    CHECK(r.report.choquet_xi == Rational(3, 7));
    CHECK(r.report.sup_core == Rational(3, 7));
}

TEST_CASE("theta0 sampled convex combinations stay invariant and dominated") {
    Rng rng(89);
    for (int t = 0; t < 25; ++t) {
        const int n = 2 + static_cast<int>(rng.below(5));
        const auto inst = generate_ergodic_instance(n, rng.next());
        InstanceContext ctx(inst.sys, inst.cap);
        REQUIRE_FALSE(ctx.credal.theta_star.empty());
        for (int j = 0; j < 5; ++j) {
            const Measure p = random_core_member(ctx.credal.theta_star, rng);
            CHECK(pushforward(ctx.sys, p) == p);
            CHECK(core_membership(ctx.cap, p));
        }
    }
}
