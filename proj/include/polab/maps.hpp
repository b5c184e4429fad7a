#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polab/poset.hpp"

namespace polab {

class MonotoneMap {
public:
    MonotoneMap() = default;
    // Throws NotMonotone.
    MonotoneMap(PosetRef src, PosetRef dst, std::vector<Index> values);
    static MonotoneMap identity(PosetRef p);
    static MonotoneMap by_name(PosetRef src, PosetRef dst,
                               const std::vector<std::pair<std::string, std::string>>& assignment);
    // Inclusion of a subposet whose element names occur in dst.
    static MonotoneMap inclusion(PosetRef sub, PosetRef dst);

    const Poset& source() const { return *src_; }
    const Poset& target() const { return *dst_; }
    const PosetRef& source_ref() const { return src_; }
    const PosetRef& target_ref() const { return dst_; }
    Index operator()(Index p) const { return f_[p]; }
    const std::vector<Index>& values() const { return f_; }

    bool is_injective() const;
    bool is_surjective() const;
    bool is_embedding() const;
    bool is_isomorphism() const { return is_embedding() && is_surjective(); }
    BitSet image() const;
    BitSet image(const BitSet& s) const;
    BitSet preimage(const BitSet& q) const;

    friend bool operator==(const MonotoneMap& a, const MonotoneMap& b);

private:
    PosetRef src_, dst_;
    std::vector<Index> f_;
};

// g after f; throws DomainMismatch.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

// An extension is a MonotoneMap that is an order embedding.
using Extension = MonotoneMap;
void require_embedding(const MonotoneMap& e, const std::string& what);

bool is_meet_extension(const Extension& e);
bool is_join_extension(const Extension& e);
bool is_completion(const Extension& e);
bool is_dense(const Extension& e);
bool is_compact(const Extension& e);
// Throws NotCompleteLattice when the target is not complete.
bool is_delta1(const Extension& e);

// Elements of the target that are meets (joins) of images.
BitSet meet_closure(const Extension& e);
BitSet join_closure(const Extension& e);

// Dedekind-MacNeille completion by cuts; the target elements are cuts sorted
// by bitmask, principal cuts carry the element id.
Extension macneille(PosetRef p);
// Cut (as a down-set of P) represented by each element of macneille(p).target().
std::vector<BitSet> macneille_cuts(const Poset& p);

bool is_cut_stable(const MonotoneMap& f);
// N(f) between the given completions of the source and target of f.
MonotoneMap macneille_lift(const MonotoneMap& f, const Extension& e_src, const Extension& e_dst);
MonotoneMap macneille_lift(const MonotoneMap& f);
bool is_complete_homomorphism(const MonotoneMap& g);

// f(meet Z) = meet f[Z] whenever meet Z exists, for Z ranging over subsets of
// `domain` (all of the source when omitted). Includes Z empty.
bool preserves_meets(const MonotoneMap& f, const std::optional<BitSet>& domain = std::nullopt);
bool preserves_joins(const MonotoneMap& f, const std::optional<BitSet>& domain = std::nullopt);

// alpha(p) <= q iff p <= beta(q)
bool check_galois_connection(const MonotoneMap& alpha, const MonotoneMap& beta);

// Order isomorphisms a -> b extending `fixed` (nullopt = free), in
// lexicographic order; the visitor returns false to stop.
void for_each_order_iso(const Poset& a, const Poset& b, const std::vector<std::optional<Index>>& fixed,
                        const std::function<bool(const std::vector<Index>&)>& visit);
std::optional<std::vector<Index>> find_order_iso(const Poset& a, const Poset& b,
                                                 const std::vector<std::optional<Index>>& fixed = {});

// Monotone maps a -> b agreeing with `fixed`, backtracking in index order.
void for_each_monotone(const Poset& a, const Poset& b, const std::vector<std::optional<Index>>& fixed,
                       const std::function<bool(const std::vector<Index>&)>& visit);

struct ExtensionIso {
    std::vector<Index> base;    // P1 -> P2
    std::vector<Index> target;  // Q1 -> Q2
};
// g_Q . e1 = e2 . g_P with both isomorphisms; fix_base pins g_P to the identity
// (requires equal base posets).
std::optional<ExtensionIso> extensions_isomorphic(const Extension& e1, const Extension& e2, bool fix_base);

struct Quotient {
    Poset poset;
    std::vector<Index> cls;                   // element -> class
    std::vector<std::vector<Index>> members;  // class -> elements, ascending
};
// Throws PreconditionViolation unless `pre` is a preorder.
Quotient quotient(const std::vector<std::string>& names, const Relation& pre);

std::string set_name(const std::vector<std::string>& names, const BitSet& s);

}  // namespace polab
