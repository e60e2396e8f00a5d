#include "ergocap/errors.hpp"
#include "ergocap/vertex_enum.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ergocap;
using namespace ergocap::testing;

TEST_CASE("core vertices: simple cores") {
    const auto simplex = core_vertices(capacity_from_generators({dirac(2, 0), dirac(2, 1)}));
    REQUIRE(simplex.size() == 2);
    CHECK(simplex[0] == measure({"0", "1"}));
    CHECK(simplex[1] == measure({"1", "0"}));

    const auto point = core_vertices(capacity_from_generators({measure({"1/2", "1/2"})}));
    REQUIRE(point.size() == 1);
    CHECK(point[0] == measure({"1/2", "1/2"}));
}

TEST_CASE("core vertices: the reference segment") {
    const auto vs = core_vertices(s1_capacity());
    REQUIRE(vs.size() == 2);
    CHECK(vs[0] == measure({"0", "0", "1/2", "1/2"}));
    CHECK(vs[1] == measure({"1/2", "1/2", "0", "0"}));
}

TEST_CASE("theta0 vertices") {
    const auto sys = s1_system();
    const auto inv = analyze(sys);
    const auto vs = theta0_vertices(s1_capacity(), sys, inv);
    REQUIRE(vs.size() == 2);
    CHECK(vs[0] == measure({"0", "0", "1/2", "1/2"}));
    CHECK(vs[1] == measure({"1/2", "1/2", "0", "0"}));

    const FiniteSystem id2(2, {0, 1});
    const auto half = capacity_from_generators({measure({"1/2", "1/2"})});
    const auto vhalf = theta0_vertices(half, id2, analyze(id2));
    REQUIRE(vhalf.size() == 1);
    CHECK(vhalf[0] == measure({"1/2", "1/2"}));

    const FiniteSystem swap2(2, {1, 0});
    const auto points = capacity_from_generators({dirac(2, 0), dirac(2, 1)});
    const auto vswap = theta0_vertices(points, swap2, analyze(swap2));
    REQUIRE(vswap.size() == 1);
    CHECK(vswap[0] == measure({"1/2", "1/2"}));
}

TEST_CASE("theta star") {
    const auto sys = s1_system();
    const auto stars = theta_star(s1_capacity(), sys, analyze(sys));
    REQUIRE(stars.size() == 2);
    CHECK(stars[0] == measure({"0", "0", "1/2", "1/2"}));
    CHECK(stars[1] == measure({"1/2", "1/2", "0", "0"}));

    const FiniteSystem id2(2, {0, 1});
    const auto half = capacity_from_generators({measure({"1/2", "1/2"})});
    CHECK(theta_star(half, id2, analyze(id2)).empty());

    const FiniteSystem cyc3(3, {1, 2, 0});
    const auto u3 = capacity_from_generators({measure({"1/3", "1/3", "1/3"})});
    const auto s3 = theta_star(u3, cyc3, analyze(cyc3));
    REQUIRE(s3.size() == 1);
    CHECK(s3[0] == measure({"1/3", "1/3", "1/3"}));
}

TEST_CASE("dimension cap") {
    std::vector<Rational> mass(9, Rational(1, 9));
    const auto cap9 = capacity_from_generators({Measure(mass)});
    CHECK_THROWS_AS(core_vertices(cap9), ResourceError);

    // ERGOCAP_MAX_STATES raises the cap.
    setenv("ERGOCAP_MAX_STATES", "9", 1);
    CHECK(max_enumeration_states() == 9);
    const auto vs = core_vertices(cap9);
    unsetenv("ERGOCAP_MAX_STATES");
    REQUIRE(vs.size() == 1);
    CHECK(vs[0] == Measure(std::vector<Rational>(9, Rational(1, 9))));
}

TEST_CASE("double description equals brute force on random instances") {
    Rng rng(61);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const auto cap =
            generate_instance(n, 1 + static_cast<int>(rng.below(4)), rng.next()).cap;
        const auto dd = core_vertices(cap);
        const auto brute = oracle::core_vertices_brute_force(cap);
        REQUIRE(dd.size() == brute.size());
        for (std::size_t i = 0; i < dd.size(); ++i) CHECK(dd[i].mass() == brute[i]);
    }
}

TEST_CASE("vertex soundness: every output satisfies all constraints") {
    Rng rng(67);
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + static_cast<int>(rng.below(4));
        const auto cap =
            generate_instance(n, 1 + static_cast<int>(rng.below(3)), rng.next()).cap;
        for (const auto& v : core_vertices(cap)) {
            CHECK(core_membership(cap, v));
            // At least n constraints active (counting the normalization).
            int active = 1;
            for (int i = 0; i < n; ++i)
                if (v[i] == 0) ++active;
            for (Event a = 1; a < full_event(n); ++a)
                if (v.of(a) == cap.of(a)) ++active;
            CHECK(active >= n);
        }
    }
}

TEST_CASE("theta star members are vertices of theta0") {
    Rng rng(71);
    for (int t = 0; t < 30; ++t) {
        const int n = 2 + static_cast<int>(rng.below(5));
        const auto inst = generate_instance(n, 1 + static_cast<int>(rng.below(3)), rng.next());
        const auto inv = analyze(inst.sys);
        const auto t0 = theta0_vertices(inst.cap, inst.sys, inv);
        for (const auto& u : theta_star(inst.cap, inst.sys, inv))
            CHECK(std::find(t0.begin(), t0.end(), u) != t0.end());
    }
}

TEST_CASE("theta0 vertices are invariant core members") {
    Rng rng(73);
    for (int t = 0; t < 30; ++t) {
        const int n = 2 + static_cast<int>(rng.below(5));
        const auto inst = generate_instance(n, 1 + static_cast<int>(rng.below(3)), rng.next());
        const auto inv = analyze(inst.sys);
        for (const auto& p : theta0_vertices(inst.cap, inst.sys, inv)) {
            CHECK(pushforward(inst.sys, p) == p);
            CHECK(core_membership(inst.cap, p));
        }
    }
}
