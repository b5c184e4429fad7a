#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polab/concept.hpp"
#include "polab/extend.hpp"
#include "polab/morphism.hpp"

namespace polab {

// Brute-force references. Each evaluates its definition literally over all
// subsets of P (or all relations), and throws CarrierTooLarge past its gate.

bool naive_condition(const ExtensionPolarity& e, Cond c);  // |P| <= 10
Relation naive_z_s(const ExtensionPolarity& e);            // Y x X
Relation naive_z_t(const ExtensionPolarity& e);
// P4 and P5 for a relation on X u Y, read literally.
bool naive_p4(const ExtensionPolarity& e, const Relation& u);
bool naive_p5(const ExtensionPolarity& e, const Relation& u);

// Every preorder on n points containing `forced` and avoiding `forbidden`.
// Naive: generate-and-test, n <= 5. Pruned: n <= 6.
std::vector<Relation> oracle_preorders_naive(Index n, const Relation& forced, const Relation& forbidden);
std::vector<Relation> oracle_preorders_pruned(Index n, const Relation& forced, const Relation& forbidden);

// Closed subsets of X by scanning all 2^|X| subsets (|X| <= 12).
std::vector<BitSet> naive_closed_sets(const ExtensionPolarity& e);

// Random instances.
using Rng = std::mt19937_64;

PosetRef random_poset(Rng& rng, Index n, const std::string& prefix, double theta = 0.3);
// base plus 0..max_new fresh elements; nullopt when the draw is not an embedding.
std::optional<Extension> random_extension(Rng& rng, const PosetRef& base, const std::string& prefix, Index max_new = 2);
// |X u Y| <= max_union; R between R_l and the saturated full relation.
ExtensionPolarity random_polarity(Rng& rng, Index max_union);
// X, Y drawn inside the MacNeille completion of a random base.
std::optional<ExtensionPolarity> random_galois(Rng& rng, Index max_base);
ExtensionContext random_context(Rng& rng, Index max_union);

// Principal filters and ideals of P, each ordered as P is (copies ^p and !p), with R_l.
ExtensionPolarity principal_polarity(const PosetRef& p);

// Every triple passing M1 with monotone components, then M2/M3 (cap on visits).
std::vector<PolarityMorphism> enumerate_morphisms(const GaloisRef& a, const GaloisRef& b, std::size_t cap = 100000);
// Every Galois-stable map between the intermediate structures.
std::vector<GaloisStableMap> enumerate_galois_stable(const GaloisRef& a, const GaloisRef& b, std::size_t cap = 100000);

}  // namespace polab
