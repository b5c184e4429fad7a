#pragma once

#include <memory>
#include <string>

#include "polab/coherence.hpp"

namespace polab {

// A Galois polarity with its unique 3-preorder and X u Y built once.
struct GaloisPolarity {
    ExtensionPolarity pol;
    Relation pre;
    Intermediate im;

    const Poset& XY() const { return *im.poset; }
    const PosetRef& XY_ref() const { return im.poset; }
};
using GaloisRef = std::shared_ptr<const GaloisPolarity>;

// Throws NotGalois.
GaloisRef make_galois(ExtensionPolarity pol);

struct MorphismCheck {
    bool ok = true;
    std::string clause;  // M1, M2, M3 (or "domain")
    Witness witness;
};

struct PolarityMorphism {
    GaloisRef src, dst;
    MonotoneMap hx, hp, hy;
    bool embedding = false;
    bool isomorphism = false;

    friend bool operator==(const PolarityMorphism& a, const PolarityMorphism& b) {
        return a.hx == b.hx && a.hp == b.hp && a.hy == b.hy;
    }
};

MorphismCheck check_morphism(const GaloisRef& src, const GaloisRef& dst, const MonotoneMap& hx, const MonotoneMap& hp,
                             const MonotoneMap& hy);
// Throws NotMorphism (message names the clause and witness) or DomainMismatch.
PolarityMorphism validate_morphism(const GaloisRef& src, const GaloisRef& dst, MonotoneMap hx, MonotoneMap hp,
                                   MonotoneMap hy);
PolarityMorphism identity_morphism(const GaloisRef& g);

struct GaloisStableMap {
    GaloisRef src, dst;
    MonotoneMap psi;  // X u Y -> X' u Y'

    friend bool operator==(const GaloisStableMap& a, const GaloisStableMap& b) { return a.psi == b.psi; }
};

// clause: cut-stable, G1, G2, G3
MorphismCheck check_galois_stable(const GaloisRef& src, const GaloisRef& dst, const MonotoneMap& psi);
// Throws NotGaloisStable.
GaloisStableMap validate_galois_stable(const GaloisRef& src, const GaloisRef& dst, MonotoneMap psi);

GaloisStableMap psi_of(const PolarityMorphism& h);
// Throws PartialInverseUndefined if psi escapes the images.
PolarityMorphism h_of(const GaloisStableMap& psi);

bool roundtrip(const PolarityMorphism& h);
bool roundtrip(const GaloisStableMap& psi);

// h2 after h1; throws DomainMismatch.
PolarityMorphism compose(const PolarityMorphism& h2, const PolarityMorphism& h1);
GaloisStableMap compose(const GaloisStableMap& psi2, const GaloisStableMap& psi1);

}  // namespace polab
