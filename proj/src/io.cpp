#include "ergocap/io.hpp"

#include "ergocap/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <utility>

namespace ergocap {

using json = nlohmann::ordered_json;

namespace {

json measure_to_json(const Measure& p) {
    json row = json::array();
    for (int i = 0; i < p.size(); ++i) row.push_back(to_string(p[i]));
    return row;
}

json rv_to_json(const RandomVariable& xi) {
    json row = json::array();
    for (int i = 0; i < xi.size(); ++i) row.push_back(to_string(xi[i]));
    return row;
}

json event_to_json(Event a) {
    json row = json::array();
    for (int i : event_to_indices(a)) row.push_back(i);
    return row;
}

json instance_to_json(const Instance& inst) {
    json j;
    if (inst.name) j["name"] = *inst.name;
    j["states"] = inst.sys.size();
    j["map"] = inst.sys.map();
    json gens = json::array();
    for (const auto& g : inst.cap.generators()) gens.push_back(measure_to_json(g));
    j["generators"] = gens;
    return j;
}

Measure parse_measure_row(const json& row, int n, const std::string& where) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw InputError(where + ": expected " + std::to_string(n) + " entries");
    std::vector<Rational> mass;
    mass.reserve(n);
    for (const auto& cell : row) {
        if (!cell.is_string()) throw InputError(where + ": rationals must be strings");
        mass.push_back(parse_rational(cell.get<std::string>()));
    }
    try {
        return Measure(std::move(mass));
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

}  // namespace

Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("instance is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("instance must be a JSON object");
    if (!j.contains("states") || !j["states"].is_number_integer())
        throw InputError("missing integer field 'states'");
    const int n = j["states"].get<int>();
    if (!j.contains("map") || !j["map"].is_array())
        throw InputError("missing array field 'map'");
    std::vector<int> map;
    for (const auto& v : j["map"]) {
        if (!v.is_number_integer()) throw InputError("map entries must be integers");
        map.push_back(v.get<int>());
    }
    FiniteSystem sys(n, std::move(map));

    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        throw InputError("missing nonempty array field 'generators'");
    std::vector<Measure> gens;
    int row = 0;
    for (const auto& g : j["generators"]) {
        gens.push_back(parse_measure_row(g, n, "generators[" + std::to_string(row) + "]"));
        ++row;
    }

    Instance inst{std::nullopt, std::move(sys), capacity_from_generators(std::move(gens))};
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw InputError("'name' must be a string");
        inst.name = j["name"].get<std::string>();
    }
    return inst;
}

std::string emit_instance(const Instance& inst) {
    return instance_to_json(inst).dump(2) + "\n";
}

RandomVariable parse_random_variable(const std::string& text, int n) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("random variable is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
        throw InputError("random variable needs an array field 'values'");
    if (static_cast<int>(j["values"].size()) != n)
        throw InputError("random variable has " + std::to_string(j["values"].size()) +
                         " values, expected " + std::to_string(n));
    std::vector<Rational> values;
    for (const auto& cell : j["values"]) {
        if (!cell.is_string()) throw InputError("random variable values must be strings");
        values.push_back(parse_rational(cell.get<std::string>()));
    }
    return RandomVariable{std::move(values)};
}

std::uint64_t Rng::next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) { return next() % bound; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0xD1B54A32D192ED03ull * (index + 1)));
    return r.next();
}

namespace {

// Nonnegative rationals with common denominator <= limit, summing to 1.
Measure random_measure(int n, Rng& rng, int denominator_limit) {
    const int den = 1 + static_cast<int>(rng.below(denominator_limit));
    std::vector<int> units(n, 0);
    for (int u = 0; u < den; ++u) units[rng.below(n)]++;
    std::vector<Rational> mass(n);
    for (int i = 0; i < n; ++i) mass[i] = Rational(units[i], den);
    return Measure(std::move(mass));
}

FiniteSystem random_system(int n, Rng& rng) {
    std::vector<int> map(n);
    for (int i = 0; i < n; ++i) map[i] = static_cast<int>(rng.below(n));
    return FiniteSystem(n, std::move(map));
}

}  // namespace

Instance generate_instance(int n, int k_generators, std::uint64_t seed,
                           int denominator_limit) {
    if (n < 1 || k_generators < 1) throw InputError("generate_instance: n and k must be >= 1");
    Rng rng(seed);
    FiniteSystem sys = random_system(n, rng);
    std::vector<Measure> gens;
    for (int k = 0; k < k_generators; ++k)
        gens.push_back(random_measure(n, rng, denominator_limit));
    return Instance{std::nullopt, std::move(sys), capacity_from_generators(std::move(gens))};
}

Instance generate_ergodic_instance(int n, std::uint64_t seed) {
    if (n < 1) throw InputError("generate_ergodic_instance: n must be >= 1");
    Rng rng(seed);
    FiniteSystem sys = random_system(n, rng);
    const InvariantStructure inv = analyze(sys);
    const int m = inv.component_count();

    // Choose which cycles the capacity charges; each gets a pure uniform
    // generator, which keeps V invariant and 0/1 on invariant events.
    const int touched = 1 + static_cast<int>(rng.below(std::min(m, 3)));
    std::vector<int> order(m);
    for (int c = 0; c < m; ++c) order[c] = c;
    for (int c = m - 1; c > 0; --c)
        std::swap(order[c], order[rng.below(c + 1)]);
    std::vector<int> chosen(order.begin(), order.begin() + touched);
    std::sort(chosen.begin(), chosen.end());

    std::vector<Measure> gens;
    for (int c : chosen) gens.push_back(uniform_on(n, inv.cycle_events[c]));

    // Optionally one mixed invariant generator over the charged cycles.
    if (touched >= 2 && rng.below(2) == 0) {
        const int den = 2 + static_cast<int>(rng.below(5));
        std::vector<int> units(touched, 0);
        for (int u = 0; u < den; ++u) units[rng.below(touched)]++;
        std::vector<Rational> mass(n, Rational(0));
        for (int t = 0; t < touched; ++t) {
            const Measure& u = gens[t];
            for (int i = 0; i < n; ++i) mass[i] += Rational(units[t], den) * u[i];
        }
        gens.emplace_back(std::move(mass));
    }
    return Instance{std::nullopt, std::move(sys), capacity_from_generators(std::move(gens))};
}

RandomVariable generate_random_variable(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Rational> values(n);
    for (int i = 0; i < n; ++i) {
        const int den = 1 + static_cast<int>(rng.below(8));
        const int num = static_cast<int>(rng.below(4 * den + 1)) - 2 * den;
        values[i] = Rational(num, den);
    }
    return RandomVariable{std::move(values)};
}

namespace {

json verdict_to_json(const std::string& name, const Verdict& v) {
    json j;
    j["name"] = name;
    j["status"] = status_name(v.status);
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
}

json vertices_to_json(const std::vector<Measure>& vs) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(measure_to_json(v));
    return arr;
}

bool generators_span_core(const InstanceContext& ctx) {
    // conv(generators) equals the core iff every core vertex is itself a
    // generator: an extreme point of the core lying in the hull of the
    // generators must be one of them.
    for (const Measure& v : ctx.credal.core) {
        const auto& gens = ctx.cap.generators();
        if (std::find(gens.begin(), gens.end(), v) == gens.end()) return false;
    }
    return true;
}

json instance_summary(const Instance& inst, const InstanceContext& ctx) {
    json j = instance_to_json(inst);
    j["core_equals_generator_hull"] = generators_span_core(ctx);
    return j;
}

json structure_section(const InstanceContext& ctx, json& report) {
    report["invariant"] = json{{"holds", ctx.invariant.holds}};
    if (ctx.invariant.witness) report["invariant"]["witness"] = event_to_json(*ctx.invariant.witness);
    report["ergodic"] = json{{"holds", ctx.ergodic.holds}};
    if (ctx.ergodic.witness) report["ergodic"]["witness"] = event_to_json(*ctx.ergodic.witness);
    json comps = json::array();
    for (Event c : ctx.inv.components) comps.push_back(event_to_json(c));
    report["components"] = comps;
    json cycles = json::array();
    for (const auto& cyc : ctx.inv.cycles) cycles.push_back(cyc);
    report["cycles"] = cycles;
    report["core_vertices"] = vertices_to_json(ctx.credal.core);
    report["theta0_vertices"] = vertices_to_json(ctx.credal.theta0);
    report["theta_star"] = vertices_to_json(ctx.credal.theta_star);
    return report;
}

std::string event_name(Event a) {
    std::string s = "{";
    bool first = true;
    for (int i : event_to_indices(a)) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

}  // namespace

std::string analyze_report(const Instance& inst) {
    InstanceContext ctx(inst.sys, inst.cap);
    json report;
    report["instance"] = instance_summary(inst, ctx);
    structure_section(ctx, report);
    return report.dump(2) + "\n";
}

SuiteResult run_suite(const Instance& inst, const SuiteOptions& options) {
    InstanceContext ctx(inst.sys, inst.cap);
    json report;
    report["instance"] = instance_summary(inst, ctx);
    structure_section(ctx, report);

    std::vector<Status> statuses;
    json checks = json::array();
    auto record = [&](const std::string& name, const Verdict& v) {
        statuses.push_back(v.status);
        checks.push_back(verdict_to_json(name, v));
    };

    for (std::size_t i = 0; i < ctx.credal.core.size(); ++i)
        record("invariantization[core vertex " + std::to_string(i) + "]",
               check_invariantization(ctx, ctx.credal.core[i]));

    // Zero-one witnesses for every nonempty invariant event the capacity charges.
    const int m = ctx.inv.component_count();
    for (Event sel = 1; sel < (Event{1} << m); ++sel) {
        Event a = 0;
        for (int c = 0; c < m; ++c)
            if (event_contains(sel, c)) a |= ctx.inv.components[c];
        if (ctx.cap.of(a) == 0) continue;
        auto zw = zero_one_witness(ctx, a);
        json j = verdict_to_json("zero_one_witness" + event_name(a), zw.verdict);
        if (zw.witness) j["witness"] = measure_to_json(*zw.witness);
        statuses.push_back(zw.verdict.status);
        checks.push_back(j);
    }

    record("ac_closure", check_ac_closure(ctx, options.diagnostic));
    record("structure", check_structure(ctx, options.diagnostic));

    for (std::size_t i = 0; i < ctx.credal.theta0.size(); ++i) {
        Verdict v{Status::Holds, ""};
        try {
            ergodic_decomposition(ctx, ctx.credal.theta0[i]);
        } catch (const TheoremViolation& e) {
            v = {Status::Violated, e.what()};
        }
        record("ergodic_decomposition[theta0 vertex " + std::to_string(i) + "]", v);
    }
    report["checks"] = checks;

    std::vector<RandomVariable> xis = options.random_variables;
    if (xis.empty())
        for (int k = 0; k < options.rv_count; ++k)
            xis.push_back(generate_random_variable(ctx.sys.size(),
                                                   derive_seed(options.rv_seed, k)));

    json bounds = json::array();
    for (const auto& xi : xis) {
        const auto eb = check_ergodic_bound(ctx, xi);
        const auto cmp = bound_report(ctx, xi);
        statuses.push_back(eb.verdict.status);
        statuses.push_back(cmp.verdict.status);
        json j;
        j["xi"] = rv_to_json(xi);
        j["ergodic_bound"] = status_name(eb.verdict.status);
        if (!eb.verdict.detail.empty()) j["ergodic_bound_detail"] = eb.verdict.detail;
        j["comparison"] = status_name(cmp.verdict.status);
        if (!cmp.verdict.detail.empty()) j["comparison_detail"] = cmp.verdict.detail;
        j["upper"] = to_string(cmp.report.upper);
        j["lower"] = to_string(cmp.report.lower);
        j["choquet_xi_star"] = to_string(cmp.report.choquet_xi_star);
        j["choquet_xi"] = to_string(cmp.report.choquet_xi);
        j["sup_core"] = to_string(cmp.report.sup_core);
        j["xi_star"] = rv_to_json(cmp.report.xi_star);
        json limits = json::array();
        for (const auto& l : cmp.report.per_component_limits) limits.push_back(to_string(l));
        j["per_component_limits"] = limits;
        bounds.push_back(j);
    }
    report["bounds"] = bounds;

    SuiteResult result;
    result.report_json = report.dump(2) + "\n";
    const bool any_violated =
        std::any_of(statuses.begin(), statuses.end(),
                    [](Status s) { return s == Status::Violated; });
    const bool any_unmet =
        std::any_of(statuses.begin(), statuses.end(),
                    [](Status s) { return s == Status::HypothesisUnmet; });
    result.exit_code = any_violated ? 1 : (any_unmet ? 3 : 0);
    return result;
}

SearchProperty parse_search_property(const std::string& name) {
    if (name == "choquet-gap") return SearchProperty::ChoquetGap;
    if (name == "structure-needs-ergodicity") return SearchProperty::StructureNeedsErgodicity;
    if (name == "non-two-alternating") return SearchProperty::NonTwoAlternating;
    throw InputError("unknown search property '" + name + "'");
}

namespace {

json search_header(const SearchOptions& opt, const char* property) {
    json j;
    j["property"] = property;
    j["seed"] = opt.seed;
    j["budget"] = opt.budget;
    return j;
}

Instance non_ergodic_fixture() {
    return Instance{std::string("non-ergodic-fixture"), FiniteSystem(2, {0, 1}),
                    capacity_from_generators({Measure({Rational(1, 2), Rational(1, 2)})})};
}

bool structure_counterexample(const Instance& inst, json& out) {
    InstanceContext ctx(inst.sys, inst.cap);
    if (!ctx.invariant.holds || ctx.ergodic.holds) return false;
    if (ctx.credal.theta0 == ctx.credal.theta_star) return false;
    out["instance"] = instance_to_json(inst);
    out["theta0_vertices"] = vertices_to_json(ctx.credal.theta0);
    out["theta_star"] = vertices_to_json(ctx.credal.theta_star);
    return true;
}

Instance invariantized(Instance inst) {
    std::vector<Measure> gens;
    for (const auto& g : inst.cap.generators())
        gens.push_back(cesaro_invariantize(inst.sys, g));
    return Instance{inst.name, inst.sys, capacity_from_generators(std::move(gens))};
}

}  // namespace

SearchResult search(const SearchOptions& opt) {
    SearchResult result;
    switch (opt.property) {
        case SearchProperty::NonTwoAlternating:
        case SearchProperty::ChoquetGap: {
            const bool want_gap = opt.property == SearchProperty::ChoquetGap;
            json out = search_header(
                opt, want_gap ? "choquet-gap" : "non-two-alternating");
            for (std::uint64_t i = 0; i < opt.budget; ++i) {
                const std::uint64_t s = derive_seed(opt.seed, i);
                Instance inst = generate_instance(opt.states, opt.generators, s);
                const auto check = is_two_alternating(inst.cap);
                if (check.holds) continue;
                const auto [a, b] = *check.witness;
                out["tried"] = i + 1;
                out["found"] = true;
                out["instance_seed"] = s;
                out["instance"] = instance_to_json(inst);
                out["witness_pair"] = json::array({event_to_json(a), event_to_json(b)});
                out["v_union"] = to_string(inst.cap.of(a | b));
                out["v_intersection"] = to_string(inst.cap.of(a & b));
                out["v_a"] = to_string(inst.cap.of(a));
                out["v_b"] = to_string(inst.cap.of(b));
                if (want_gap) {
                    // xi = 1_{AnB} + 1_{AuB} exhibits the gap whenever
                    // submodularity fails at (A, B); verify exactly.
                    std::vector<Rational> v(inst.sys.size(), Rational(0));
                    for (int j = 0; j < inst.sys.size(); ++j) {
                        if (event_contains(a & b, j)) v[j] += 1;
                        if (event_contains(a | b, j)) v[j] += 1;
                    }
                    RandomVariable xi{std::move(v)};
                    const Rational choq = choquet_integral(inst.cap, xi);
                    const Rational sup = upper_expectation(core_vertices(inst.cap), xi);
                    if (!(sup < choq)) continue;
                    out["xi"] = rv_to_json(xi);
                    out["sup_core"] = to_string(sup);
                    out["choquet_xi"] = to_string(choq);
                }
                result.found = true;
                result.report_json = out.dump(2) + "\n";
                return result;
            }
            out["tried"] = opt.budget;
            out["found"] = false;
            result.report_json = out.dump(2) + "\n";
            return result;
        }
        case SearchProperty::StructureNeedsErgodicity: {
            json out = search_header(opt, "structure-needs-ergodicity");
            // The shipped fixture pool is tried before random draws.
            if (opt.budget >= 1 && structure_counterexample(non_ergodic_fixture(), out)) {
                out["tried"] = 1;
                out["found"] = true;
                result.found = true;
                result.report_json = out.dump(2) + "\n";
                return result;
            }
            for (std::uint64_t i = 1; i < opt.budget; ++i) {
                const std::uint64_t s = derive_seed(opt.seed, i);
                Instance inst = invariantized(generate_instance(opt.states, opt.generators, s));
                if (structure_counterexample(inst, out)) {
                    out["tried"] = i + 1;
                    out["found"] = true;
                    out["instance_seed"] = s;
                    result.found = true;
                    result.report_json = out.dump(2) + "\n";
                    return result;
                }
            }
            out["tried"] = opt.budget;
            out["found"] = false;
            result.report_json = out.dump(2) + "\n";
            return result;
        }
    }
    throw InputError("unreachable search property");
}

}  // namespace ergocap
