#pragma once

#include <vector>

#include "polab/coherence.hpp"

namespace polab {

// Polars of the relation of `pol`; the base, if any, is ignored.
BitSet polar_right(const ExtensionPolarity& pol, const BitSet& s);  // S subset X -> {y : all x in S, xRy}
BitSet polar_left(const ExtensionPolarity& pol, const BitSet& t);   // T subset Y -> {x : all y in T, xRy}

struct ConceptLattice {
    std::vector<BitSet> closed;  // sorted by bitmask
    PosetRef lattice;            // inclusion order on `closed`
    Index index_of(const BitSet& s) const;
};

// Throws CarrierTooLarge when |X| exceeds max_x.
ConceptLattice concept_lattice(const ExtensionPolarity& pol, Index max_x = 16);

BitSet xi(const ExtensionPolarity& pol, Index x);
BitSet upsilon(const ExtensionPolarity& pol, Index y);

struct PropOrder {
    Relation order;                  // on the union carrier, by the four clauses
    bool greatest_checked = false;   // enumeration ran
    std::size_t alternatives = 0;    // preorders satisfying 1(a), 1(b)
};
// Throws CarrierTooLarge only through the enumeration check, which is skipped
// above opt.max_carrier distinct sets.
PropOrder prop_order_preorder(const ExtensionPolarity& pol, const EnumOptions& opt = {});

bool xi_embedding(const ExtensionPolarity& pol);
bool upsilon_embedding(const ExtensionPolarity& pol);
bool inj_1b(const ExtensionPolarity& pol);
bool inj_1c(const ExtensionPolarity& pol);
bool inj_2b(const ExtensionPolarity& pol);

// ex : P -> X a meet-completion, ey : P -> Y a join-completion.
// F : Y -> X and G : X -> Y; throws NotCompletion.
MonotoneMap f_map(const Extension& ex, const Extension& ey);
MonotoneMap g_map(const Extension& ex, const Extension& ey);
// Number of Galois connections F' -| G' with F' ey = ex and G' ex = ey
// (exhaustive; |X|, |Y| <= 6).
std::size_t count_extending_galois_connections(const Extension& ex, const Extension& ey);

// iX : X -> X' completely meet-preserving meet-completion, iY likewise for
// joins. Returns the Y x X relation; throws PreservationViolation.
Relation z_doubleprime(const ExtensionPolarity& e, const Extension& ix, const Extension& iy);

}  // namespace polab
