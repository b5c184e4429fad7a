#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polab/coherence.hpp"

namespace polab {

struct ExtensionContext {
    ExtensionPolarity inner;
    Extension ix, iy;  // X -> X', Y -> Y'

    // Throws DomainMismatch, NotEmbedding.
    ExtensionContext(ExtensionPolarity inner, Extension ix, Extension iy);
    Extension outer_ex() const { return compose(ix, inner.ex()); }
    Extension outer_ey() const { return compose(iy, inner.ey()); }
    ExtensionPolarity outer(Relation s) const { return ExtensionPolarity(outer_ex(), outer_ey(), std::move(s)); }
    const Poset& X2() const { return ix.target(); }
    const Poset& Y2() const { return iy.target(); }
};

Relation extend_relation(const Extension& ix, const Extension& iy, const Relation& r);
Relation restrict_relation(const Extension& ix, const Extension& iy, const Relation& s);
Relation extend_relation(const ExtensionContext& c);
Relation restrict_relation(const ExtensionContext& c, const Relation& s);

enum class Verdict { Holds, Vacuous, Violated, NotApplicable };
const char* to_string(Verdict v);

struct ClauseCheck {
    std::string clause;
    Verdict verdict;
    std::string detail;
};
struct PreservationReport {
    std::vector<ClauseCheck> clauses;
    bool ok() const;
    const ClauseCheck* find(const std::string& clause) const;
};

// Clauses (1)-(6) of the extension theorem on one context.
PreservationReport check_extension_preservation(const ExtensionContext& c, std::uint64_t seed = 0);
// Restriction corollary and its converses for one outer relation.
PreservationReport check_restriction_preservation(const ExtensionContext& c, const Relation& s);

// i_X preserves existing meets of subsets of e_X[P], i_Y joins of subsets of e_Y[P].
bool restriction_side_conditions(const ExtensionContext& c);

struct PhiResult {
    Relation inner;      // the pulled back preorder on X u Y
    Relation inner_rel;  // its X x Y block, the restricted relation
    Quotient inner_q, outer_q;
    MonotoneMap phi;
    int outer_grade = -1, inner_grade = -1;
};
// u is a preorder on X' u Y'; throws NotZeroPreorder.
PhiResult phi_map(const ExtensionContext& c, const Relation& u);

struct AdjunctionReport {
    std::size_t lower = 0, upper = 0;  // relations examined on each side
    std::size_t pairs = 0;
    bool exhaustive = false;
    bool ok = true;
    std::string failure;
};
AdjunctionReport relation_lattice_adjunction(const Extension& ix, const Extension& iy, std::uint64_t seed = 0);

}  // namespace polab
