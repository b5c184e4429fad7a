#pragma once

#include <string>
#include <vector>

#include "polab/maps.hpp"

namespace polab {

// (e_X, e_Y, R) over a shared base P. The union carrier X u Y is indexed with
// X first: x -> x, y -> |X| + y.
class ExtensionPolarity {
public:
    ExtensionPolarity() = default;
    // Throws DomainMismatch, NotEmbedding, CarrierMismatch.
    ExtensionPolarity(Extension ex, Extension ey, Relation r);
    // Order polarity: P empty.
    static ExtensionPolarity order_polarity(PosetRef x, PosetRef y, Relation r);

    const Poset& P() const { return ex_.source(); }
    const Poset& X() const { return ex_.target(); }
    const Poset& Y() const { return ey_.target(); }
    const PosetRef& base_ref() const { return ex_.source_ref(); }
    const Extension& ex() const { return ex_; }
    const Extension& ey() const { return ey_; }
    const Relation& r() const { return r_; }
    bool R(Index x, Index y) const { return r_.test(x, y); }

    Index nx() const { return X().size(); }
    Index ny() const { return Y().size(); }
    Index n() const { return nx() + ny(); }
    Index ux(Index x) const { return x; }
    Index uy(Index y) const { return nx() + y; }
    bool is_x(Index u) const { return u < nx(); }

    // "x:a" / "y:b"
    std::vector<std::string> union_names() const;
    std::string union_name(Index u) const;
    // <=_X u <=_Y on the union carrier
    Relation union_order() const;
    // Union matrix with R placed in the X x Y block.
    Relation embed(const Relation& xy) const;
    // X x Y block of a union matrix.
    Relation xy_block(const Relation& u) const;

    ExtensionPolarity with_relation(Relation r) const { return ExtensionPolarity(ex_, ey_, std::move(r)); }

    friend bool operator==(const ExtensionPolarity& a, const ExtensionPolarity& b) {
        return a.ex_ == b.ex_ && a.ey_ == b.ey_ && a.r_ == b.r_;
    }

private:
    Extension ex_, ey_;
    Relation r_;
};

PosetRef empty_poset();

// Relation builders. Union-carrier relations are |X u Y| square matrices.
Relation r_l(const Extension& ex, const Extension& ey);
Relation r_zero(const ExtensionPolarity& e);
Relation z_x(const ExtensionPolarity& e);   // X x X, includes <=_X
Relation z_y(const ExtensionPolarity& e);   // Y x Y, includes <=_Y
Relation z_yx(const ExtensionPolarity& e);  // Y x X
Relation r_hat_m(const ExtensionPolarity& e);
Relation z_s(const ExtensionPolarity& e);  // Y x X
Relation z_t(const ExtensionPolarity& e);  // Y x X
Relation r_hat_g(const ExtensionPolarity& e);
Relation z_prime_yx(const ExtensionPolarity& e);  // Y x X
// Union matrix with a Y x X block placed.
Relation embed_yx(const ExtensionPolarity& e, const Relation& yx);

// Meet of e_X[S] in X, for S a subset of P.
std::optional<Index> ex_meet(const ExtensionPolarity& e, const BitSet& s);
std::optional<Index> ey_join(const ExtensionPolarity& e, const BitSet& s);

}  // namespace polab

namespace polab {

// C1 and C2 for a plain relation between two posets.
bool is_zero_coherent(const Poset& x, const Poset& y, const Relation& r);
// {(x', y') : x' <= x, x R y, y <= y'}
Relation saturate(const Poset& x, const Poset& y, const Relation& r);

}  // namespace polab
