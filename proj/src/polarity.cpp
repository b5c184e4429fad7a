#include "polab/polarity.hpp"

namespace polab {

ExtensionPolarity::ExtensionPolarity(Extension ex, Extension ey, Relation r)
    : ex_(std::move(ex)), ey_(std::move(ey)), r_(std::move(r)) {
    if (!(ex_.source() == ey_.source())) throw Error(ErrorCode::DomainMismatch, "e_X and e_Y have different bases");
    require_embedding(ex_, "e_X");
    require_embedding(ey_, "e_Y");
    if (r_.rows() != X().size() || r_.cols() != Y().size())
        throw Error(ErrorCode::CarrierMismatch, "relation is not X x Y");
}

PosetRef empty_poset() {
    static PosetRef e = share(Poset::antichain({}));
    return e;
}

ExtensionPolarity ExtensionPolarity::order_polarity(PosetRef x, PosetRef y, Relation r) {
    return ExtensionPolarity(MonotoneMap(empty_poset(), std::move(x), {}),
                             MonotoneMap(empty_poset(), std::move(y), {}), std::move(r));
}

std::string ExtensionPolarity::union_name(Index u) const {
    return is_x(u) ? "x:" + X().name(u) : "y:" + Y().name(u - nx());
}

std::vector<std::string> ExtensionPolarity::union_names() const {
    std::vector<std::string> out;
    for (Index u = 0; u < n(); ++u) out.push_back(union_name(u));
    return out;
}

Relation ExtensionPolarity::union_order() const {
    Relation u(n(), n());
    for (Index a = 0; a < nx(); ++a)
        for (Index b : X().up(a).members()) u.set(ux(a), ux(b));
    for (Index a = 0; a < ny(); ++a)
        for (Index b : Y().up(a).members()) u.set(uy(a), uy(b));
    return u;
}

Relation ExtensionPolarity::embed(const Relation& xy) const {
    Relation u(n(), n());
    for (auto [x, y] : xy.pairs()) u.set(ux(x), uy(y));
    return u;
}

Relation ExtensionPolarity::xy_block(const Relation& u) const {
    Relation out(nx(), ny());
    for (Index x = 0; x < nx(); ++x)
        for (Index y = 0; y < ny(); ++y)
            if (u.test(ux(x), uy(y))) out.set(x, y);
    return out;
}

Relation embed_yx(const ExtensionPolarity& e, const Relation& yx) {
    Relation u(e.n(), e.n());
    for (auto [y, x] : yx.pairs()) u.set(e.uy(y), e.ux(x));
    return u;
}

Relation r_l(const Extension& ex, const Extension& ey) {
    if (!(ex.source() == ey.source())) throw Error(ErrorCode::DomainMismatch, "e_X and e_Y have different bases");
    const Poset& x = ex.target();
    const Poset& y = ey.target();
    Relation r(x.size(), y.size());
    for (Index a = 0; a < x.size(); ++a) {
        BitSet above = ex.preimage(x.up(a));
        for (Index b = 0; b < y.size(); ++b)
            if (above.intersects(ey.preimage(y.down(b)))) r.set(a, b);
    }
    return r;
}

Relation r_zero(const ExtensionPolarity& e) { return e.union_order() | e.embed(e.r()); }

Relation z_x(const ExtensionPolarity& e) {
    Relation z = e.X().order();
    for (Index p = 0; p < e.P().size(); ++p)
        for (Index x1 = 0; x1 < e.nx(); ++x1)
            if (e.R(x1, e.ey()(p))) z.row(x1) |= e.X().up(e.ex()(p));
    return z;
}

Relation z_y(const ExtensionPolarity& e) {
    Relation z = e.Y().order();
    for (Index p = 0; p < e.P().size(); ++p)
        for (Index y1 : e.Y().down(e.ey()(p)).members()) z.row(y1) |= e.r().row(e.ex()(p));
    return z;
}

Relation z_yx(const ExtensionPolarity& e) {
    Relation z(e.ny(), e.nx());
    for (Index p = 0; p < e.P().size(); ++p)
        for (Index q = 0; q < e.P().size(); ++q) {
            if (!e.R(e.ex()(p), e.ey()(q))) continue;
            for (Index y : e.Y().down(e.ey()(p)).members()) z.row(y) |= e.X().up(e.ex()(q));
        }
    return z;
}

Relation r_hat_m(const ExtensionPolarity& e) {
    Relation u = r_zero(e);
    Relation zx = z_x(e), zy = z_y(e);
    for (auto [a, b] : zx.pairs()) u.set(e.ux(a), e.ux(b));
    for (auto [a, b] : zy.pairs()) u.set(e.uy(a), e.uy(b));
    return u | embed_yx(e, z_yx(e));
}

std::optional<Index> ex_meet(const ExtensionPolarity& e, const BitSet& s) {
    return e.X().meet(e.ex().image(s));
}

std::optional<Index> ey_join(const ExtensionPolarity& e, const BitSet& s) {
    return e.Y().join(e.ey().image(s));
}

// (y,x) in Z_S iff some x0 <= x is the meet of e_X over A(x0) n U(y); any S
// realising x0 lies inside that set and the full set has the same meet.
Relation z_s(const ExtensionPolarity& e) {
    Relation z(e.ny(), e.nx());
    for (Index y = 0; y < e.ny(); ++y) {
        BitSet u = e.ey().preimage(e.Y().up(y));
        for (Index x0 = 0; x0 < e.nx(); ++x0) {
            auto m = ex_meet(e, e.ex().preimage(e.X().up(x0)) & u);
            if (m && *m == x0) z.row(y) |= e.X().up(x0);
        }
    }
    return z;
}

Relation z_t(const ExtensionPolarity& e) {
    Relation z(e.ny(), e.nx());
    for (Index x = 0; x < e.nx(); ++x) {
        BitSet l = e.ex().preimage(e.X().down(x));
        for (Index y0 = 0; y0 < e.ny(); ++y0) {
            auto j = ey_join(e, e.ey().preimage(e.Y().down(y0)) & l);
            if (j && *j == y0)
                for (Index y : e.Y().down(y0).members()) z.set(y, x);
        }
    }
    return z;
}

Relation r_hat_g(const ExtensionPolarity& e) {
    return r_zero(e) | embed_yx(e, z_s(e)) | embed_yx(e, z_t(e));
}

Relation z_prime_yx(const ExtensionPolarity& e) {
    Relation z(e.ny(), e.nx());
    const Poset& p = e.P();
    for (Index y = 0; y < e.ny(); ++y) {
        BitSet below = e.ey().preimage(e.Y().down(y));
        BitSet need = p.upper_bounds(below);
        for (Index x = 0; x < e.nx(); ++x)
            if (e.ex().preimage(e.X().up(x)).subset_of(need)) z.set(y, x);
    }
    return z;
}

}  // namespace polab

namespace polab {

bool is_zero_coherent(const Poset& x, const Poset& y, const Relation& r) {
    for (Index a = 0; a < x.size(); ++a)
        for (Index b : x.up(a).members())
            if (!r.row(b).subset_of(r.row(a))) return false;
    for (Index a = 0; a < x.size(); ++a)
        for (Index y1 : r.row(a).members())
            if (!y.up(y1).subset_of(r.row(a))) return false;
    return true;
}

Relation saturate(const Poset& x, const Poset& y, const Relation& r) {
    return x.order().compose(r).compose(y.order());
}

}  // namespace polab
