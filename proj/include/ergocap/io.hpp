#pragma once

#include "ergocap/theorems.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ergocap {

struct Instance {
    std::optional<std::string> name;
    FiniteSystem sys;
    Capacity cap;
};

// Single-JSON-document instance format:
//   {"name"?: string, "states": int, "map": int[], "generators": string[][]}
Instance parse_instance(const std::string& text);
std::string emit_instance(const Instance& inst);

// RV format: {"values": string[]}
RandomVariable parse_random_variable(const std::string& text, int n);

// Deterministic splitmix64 stream; identical seeds give identical bytes on
// every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)

private:
    std::uint64_t state_;
};

// Derives independent per-index streams from a base seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Random map plus k random measures with entry denominators bounded by
// denominator_limit. Byte-identical output for identical arguments.
Instance generate_instance(int n, int k_generators, std::uint64_t seed,
                           int denominator_limit = 12);

// Random instance constructed to have an invariant and ergodic capacity:
// every generator is invariant and every charged cycle carries a pure
// uniform generator. At most 4 generators.
Instance generate_ergodic_instance(int n, std::uint64_t seed);

// Random xi with entries in [-2, 2], denominators <= 8.
RandomVariable generate_random_variable(int n, std::uint64_t seed);

struct SuiteOptions {
    bool diagnostic = false;
    std::vector<RandomVariable> random_variables;  // generated from seed when empty
    std::uint64_t rv_seed = 0;
    int rv_count = 5;
};

struct SuiteResult {
    std::string report_json;  // byte-deterministic, fixed key order
    int exit_code = 0;        // 0 all-holds, 1 violation, 3 all hypotheses unmet
};

SuiteResult run_suite(const Instance& inst, const SuiteOptions& options);

// Same pipeline without the theorem checkers and bounds; used by `analyze`.
std::string analyze_report(const Instance& inst);

enum class SearchProperty { ChoquetGap, StructureNeedsErgodicity, NonTwoAlternating };

SearchProperty parse_search_property(const std::string& name);

struct SearchOptions {
    SearchProperty property = SearchProperty::NonTwoAlternating;
    std::uint64_t budget = 10000;
    std::uint64_t seed = 0;
    int states = 4;
    int generators = 3;
};

struct SearchResult {
    bool found = false;
    std::string report_json;
};

// Seeded random search for witness instances. Deterministic in (seed,
// budget); the shipped non-ergodic fixture is tried before random draws for
// the structure property.
SearchResult search(const SearchOptions& options);

}  // namespace ergocap
