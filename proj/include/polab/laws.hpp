#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polab/extend.hpp"
#include "polab/io.hpp"

namespace polab {

// Law groups run by the fuzzer; see law_names().
const std::vector<std::string>& law_names();

struct LawViolation {
    std::string law;
    std::string detail;
    std::string document;  // serialized counterexample
};

// Polarity laws: conditions, hierarchy, galois, concept, completion, morphism.
std::optional<LawViolation> check_polarity_laws(const ExtensionPolarity& e, const std::set<std::string>& laws);
// The extension law on one context.
std::optional<LawViolation> check_context_laws(const ExtensionContext& c);

// Drops pairs of R above R_l while the same law keeps failing.
ExtensionPolarity shrink_counterexample(const ExtensionPolarity& e, const std::string& law);

struct FuzzOptions {
    std::uint64_t seed = 0;
    Index size = 5;  // max |X u Y|
    std::size_t iters = 100;
    std::set<std::string> laws;  // empty = all
};
struct FuzzResult {
    std::size_t iterations = 0, galois = 0, contexts = 0;
    std::optional<LawViolation> violation;
    std::size_t failed_iter = 0;
};
// Iteration i draws from mt19937_64(seed * 1000003 + i), so any single
// iteration can be replayed.
FuzzResult run_fuzz(const FuzzOptions& opt);

Document document_of(const ExtensionPolarity& e, const std::string& name = "E");
Document document_of(const ExtensionContext& c, const std::string& name = "C");

}  // namespace polab
