#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polab/morphism.hpp"

namespace polab {

// A Delta1-completion is an Extension d : P -> D with is_delta1(d).
// Throws NotDelta1 (or NotCompleteLattice) otherwise.
void require_delta1(const Extension& d);

// (f, g) with g . d1 = d2 . f and g a complete lattice homomorphism.
struct Delta1Morphism {
    Extension src, dst;
    MonotoneMap f, g;

    friend bool operator==(const Delta1Morphism& a, const Delta1Morphism& b) { return a.f == b.f && a.g == b.g; }
};
// Throws DomainMismatch, PreservationViolation.
Delta1Morphism make_delta1_morphism(Extension src, Extension dst, MonotoneMap f, MonotoneMap g);
Delta1Morphism identity_delta1(const Extension& d);
Delta1Morphism compose(const Delta1Morphism& m2, const Delta1Morphism& m1);

// macneille(X u Y) . gamma; throws NotGalois.
Extension gamma_on_objects(const GaloisRef& g);
Delta1Morphism gamma_on_morphisms(const PolarityMorphism& h);

struct GeneratedPolarity {
    GaloisRef g;
    std::vector<Index> x_in_d, y_in_d;  // element of D behind each X_D / Y_D element
};
// X_D, Y_D: meet- and join-closures of d[P], copied out of D.
GeneratedPolarity delta_on_objects(const Extension& d);
PolarityMorphism delta_on_morphisms(const Delta1Morphism& m);

struct UnitResult {
    PolarityMorphism eta;
    bool complete = false;
    std::optional<std::size_t> isos_over_p;  // counted when complete and small
};
// Throws NotGalois.
UnitResult unit(const GaloisRef& g);

// tau : Gamma Delta (d) -> d, identity on the base.
Delta1Morphism counit_iso(const Extension& d);

// tau . Gamma h for h : G -> Delta(d); the candidate count is filled in
// when both lattices have at most `gate` elements.
struct Mediator {
    Delta1Morphism m;
    std::optional<std::size_t> candidates;
};
Mediator adjunction_mediator(const PolarityMorphism& h, const Extension& d, Index gate = 8);

// eta_{G2} . g == Delta Gamma g . eta_{G1}
bool naturality(const PolarityMorphism& g);

// For G with R = R_l and f . e_X = g . e_Y. Throws ConditionOneFails,
// PreconditionViolation.
MonotoneMap universal_property(const GaloisRef& G, const MonotoneMap& f, const MonotoneMap& g);

// R-bar for the unit's embeddings against R_D.
struct UnitExtension {
    Relation rbar, rd;
    bool contained = false, equal = false;
};
UnitExtension unit_extension(const GaloisRef& g);

}  // namespace polab
