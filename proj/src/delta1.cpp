#include "polab/delta1.hpp"

#include <algorithm>
#include <functional>

#include "polab/error.hpp"
#include "polab/extend.hpp"

namespace polab {

namespace {

std::optional<Index> position(const std::vector<Index>& v, Index a) {
    auto it = std::find(v.begin(), v.end(), a);
    if (it == v.end()) return std::nullopt;
    return static_cast<Index>(it - v.begin());
}

}  // namespace

void require_delta1(const Extension& d) {
    if (!is_delta1(d)) throw Error(ErrorCode::NotDelta1, "extension is not a Delta1-completion");
}

Delta1Morphism make_delta1_morphism(Extension src, Extension dst, MonotoneMap f, MonotoneMap g) {
    if (!(f.source() == src.source()) || !(f.target() == dst.source()))
        throw Error(ErrorCode::DomainMismatch, "base map does not match the completions");
    if (!(g.source() == src.target()) || !(g.target() == dst.target()))
        throw Error(ErrorCode::DomainMismatch, "lattice map does not match the completions");
    for (Index p = 0; p < f.source().size(); ++p)
        if (g(src(p)) != dst(f(p)))
            throw Error(ErrorCode::PreservationViolation, "square fails at " + f.source().name(p));
    if (!is_complete_homomorphism(g))
        throw Error(ErrorCode::PreservationViolation, "lattice map is not a complete homomorphism");
    return {std::move(src), std::move(dst), std::move(f), std::move(g)};
}

Delta1Morphism identity_delta1(const Extension& d) {
    return make_delta1_morphism(d, d, MonotoneMap::identity(d.source_ref()), MonotoneMap::identity(d.target_ref()));
}

Delta1Morphism compose(const Delta1Morphism& m2, const Delta1Morphism& m1) {
    return make_delta1_morphism(m1.src, m2.dst, compose(m2.f, m1.f), compose(m2.g, m1.g));
}

Extension gamma_on_objects(const GaloisRef& g) {
    Extension d = compose(macneille(g->XY_ref()), g->im.gamma);
    ensure(is_delta1(d), "generated completion is not Delta1");
    return d;
}

Delta1Morphism gamma_on_morphisms(const PolarityMorphism& h) {
    auto psi = psi_of(h);
    Extension e1 = macneille(h.src->XY_ref());
    Extension e2 = macneille(h.dst->XY_ref());
    MonotoneMap lift = macneille_lift(psi.psi, e1, e2);
    return make_delta1_morphism(compose(e1, h.src->im.gamma), compose(e2, h.dst->im.gamma), h.hp, lift);
}

GeneratedPolarity delta_on_objects(const Extension& d) {
    require_delta1(d);
    const Poset& D = d.target();
    BitSet mx = meet_closure(d), my = join_closure(d);
    GeneratedPolarity out;
    out.x_in_d = mx.members();
    out.y_in_d = my.members();
    auto X = share(D.subposet(mx));
    auto Y = share(D.subposet(my));
    std::vector<Index> ex, ey;
    for (Index p = 0; p < d.source().size(); ++p) {
        ex.push_back(*position(out.x_in_d, d(p)));
        ey.push_back(*position(out.y_in_d, d(p)));
    }
    Relation r(X->size(), Y->size());
    for (Index i = 0; i < X->size(); ++i)
        for (Index j = 0; j < Y->size(); ++j)
            if (D.leq(out.x_in_d[i], out.y_in_d[j])) r.set(i, j);
    ExtensionPolarity pol(MonotoneMap(d.source_ref(), X, ex), MonotoneMap(d.source_ref(), Y, ey), r);
    ensure(is_completion(pol.ex()) && is_completion(pol.ey()), "generated polarity is not complete");
    out.g = make_galois(std::move(pol));
    return out;
}

PolarityMorphism delta_on_morphisms(const Delta1Morphism& m) {
    auto a = delta_on_objects(m.src);
    auto b = delta_on_objects(m.dst);
    auto restrict = [&](const std::vector<Index>& from, const std::vector<Index>& to, const PosetRef& s,
                        const PosetRef& t) {
        std::vector<Index> vals;
        for (Index v : from) {
            auto k = position(to, m.g(v));
            ensure(k.has_value(), "lattice map leaves the generated subset");
            vals.push_back(*k);
        }
        return MonotoneMap(s, t, vals);
    };
    const auto& A = a.g->pol;
    const auto& B = b.g->pol;
    return validate_morphism(a.g, b.g, restrict(a.x_in_d, b.x_in_d, A.ex().target_ref(), B.ex().target_ref()), m.f,
                             restrict(a.y_in_d, b.y_in_d, A.ey().target_ref(), B.ey().target_ref()));
}

UnitResult unit(const GaloisRef& g) {
    const auto& G = g->pol;
    Extension e = macneille(g->XY_ref());
    auto D = delta_on_objects(compose(e, g->im.gamma));
    std::vector<Index> hx, hy;
    for (Index x = 0; x < G.nx(); ++x) hx.push_back(*position(D.x_in_d, e(g->im.iota_x(x))));
    for (Index y = 0; y < G.ny(); ++y) hy.push_back(*position(D.y_in_d, e(g->im.iota_y(y))));
    const auto& H = D.g->pol;
    UnitResult res{validate_morphism(g, D.g, MonotoneMap(G.ex().target_ref(), H.ex().target_ref(), hx),
                                     MonotoneMap::identity(G.base_ref()),
                                     MonotoneMap(G.ey().target_ref(), H.ey().target_ref(), hy)), false, std::nullopt};
    ensure(res.eta.embedding, "unit is not a polarity embedding");
    res.complete = is_completion(G.ex()) && is_completion(G.ey());
    ensure(res.eta.isomorphism == res.complete, "unit is an isomorphism exactly for complete polarities");
    if (res.complete && G.nx() <= 8 && G.ny() <= 8) {
        auto fixed_for = [](const Extension& from, const Extension& to) {
            std::vector<std::optional<Index>> f(from.target().size());
            for (Index p = 0; p < from.source().size(); ++p) f[from(p)] = to(p);
            return f;
        };
        std::vector<std::vector<Index>> gxs, gys;
        for_each_order_iso(G.X(), H.X(), fixed_for(G.ex(), H.ex()), [&](const std::vector<Index>& v) {
            gxs.push_back(v);
            return true;
        });
        for_each_order_iso(G.Y(), H.Y(), fixed_for(G.ey(), H.ey()), [&](const std::vector<Index>& v) {
            gys.push_back(v);
            return true;
        });
        std::size_t n = 0;
        for (const auto& gx : gxs)
            for (const auto& gy : gys) {
                MonotoneMap mx(G.ex().target_ref(), H.ex().target_ref(), gx);
                MonotoneMap my(G.ey().target_ref(), H.ey().target_ref(), gy);
                if (!check_morphism(g, D.g, mx, res.eta.hp, my).ok) continue;
                if (validate_morphism(g, D.g, mx, res.eta.hp, my).isomorphism) ++n;
            }
        res.isos_over_p = n;
        ensure(n == 1, "unit is not the only polarity isomorphism over P");
    }
    return res;
}

Delta1Morphism counit_iso(const Extension& d) {
    auto gd = delta_on_objects(d);
    const auto& G = gd.g->pol;
    Extension dd = gamma_on_objects(gd.g);
    const auto& q = gd.g->im.q;
    std::vector<Index> in_d(q.members.size());
    for (Index k = 0; k < q.members.size(); ++k) {
        std::optional<Index> v;
        for (Index u : q.members[k]) {
            Index w = G.is_x(u) ? gd.x_in_d[u] : gd.y_in_d[u - G.nx()];
            ensure(!v || *v == w, "a class of X_D u Y_D spans two lattice points");
            v = w;
        }
        in_d[k] = *v;
    }
    const Poset& D = d.target();
    std::vector<Index> t;
    for (const auto& cut : macneille_cuts(*gd.g->im.poset)) {
        BitSet img(D.size());
        for (Index k : cut.members()) img.set(in_d[k]);
        auto j = D.join(img);
        ensure(j.has_value(), "join missing in a complete lattice");
        t.push_back(*j);
    }
    MonotoneMap tm(dd.target_ref(), d.target_ref(), t);
    ensure(tm.is_isomorphism(), "counit is not an isomorphism");
    return make_delta1_morphism(dd, d, MonotoneMap::identity(d.source_ref()), tm);
}

Mediator adjunction_mediator(const PolarityMorphism& h, const Extension& d, Index gate) {
    auto dd = delta_on_objects(d);
    if (!(h.dst->pol == dd.g->pol)) throw Error(ErrorCode::DomainMismatch, "morphism does not land in Delta(d)");
    Mediator med{compose(counit_iso(d), gamma_on_morphisms(h)), std::nullopt};
    auto eta = unit(h.src).eta;
    ensure(compose(delta_on_morphisms(med.m), eta) == h, "mediator does not factor h through the unit");

    const Poset& N = med.m.src.target();
    const Poset& D = d.target();
    if (N.size() <= gate && D.size() <= gate) {
        Extension e = macneille(h.src->XY_ref());
        const auto& im = h.src->im;
        std::size_t count = 0;
        for_each_monotone(N, D, {}, [&](const std::vector<Index>& v) {
            for (Index p = 0; p < h.hp.source().size(); ++p)
                if (v[med.m.src(p)] != d(h.hp(p))) return true;
            for (Index x = 0; x < h.hx.source().size(); ++x)
                if (v[e(im.iota_x(x))] != dd.x_in_d[h.hx(x)]) return true;
            for (Index y = 0; y < h.hy.source().size(); ++y)
                if (v[e(im.iota_y(y))] != dd.y_in_d[h.hy(y)]) return true;
            if (is_complete_homomorphism(MonotoneMap(med.m.src.target_ref(), d.target_ref(), v))) ++count;
            return true;
        });
        med.candidates = count;
        ensure(count == 1, "mediator is not unique");
    }
    return med;
}

bool naturality(const PolarityMorphism& g) {
    auto lhs = compose(unit(g.dst).eta, g);
    auto rhs = compose(delta_on_morphisms(gamma_on_morphisms(g)), unit(g.src).eta);
    return lhs == rhs;
}

MonotoneMap universal_property(const GaloisRef& G, const MonotoneMap& f, const MonotoneMap& g) {
    const auto& e = G->pol;
    if (!(e.r() == r_l(e.ex(), e.ey())))
        throw Error(ErrorCode::PreconditionViolation, "relation is not the minimal one");
    if (!(f.source() == e.X()) || !(g.source() == e.Y()) || !(f.target() == g.target()))
        throw Error(ErrorCode::DomainMismatch, "f and g must run X -> Q and Y -> Q");
    if (!(compose(f, e.ex()) == compose(g, e.ey())))
        throw Error(ErrorCode::PreconditionViolation, "f . e_X differs from g . e_Y");
    for (Index x = 0; x < e.nx(); ++x)
        for (Index y = 0; y < e.ny(); ++y)
            if (G->pre.test(e.uy(y), e.ux(x)) && !f.target().leq(g(y), f(x))) {
                Witness w;
                w.add("x", e.X().name(x));
                w.add("y", e.Y().name(y));
                throw Error(ErrorCode::ConditionOneFails, w.str());
            }
    const auto& im = G->im;
    std::vector<std::optional<Index>> v(G->XY().size());
    auto put = [&](Index z, Index q) {
        ensure(!v[z] || *v[z] == q, "mediating map is not well defined");
        v[z] = q;
    };
    for (Index x = 0; x < e.nx(); ++x) put(im.iota_x(x), f(x));
    for (Index y = 0; y < e.ny(); ++y) put(im.iota_y(y), g(y));
    std::vector<Index> vals;
    for (auto& a : v) vals.push_back(*a);
    MonotoneMap u;
    try {
        u = MonotoneMap(G->XY_ref(), f.target_ref(), vals);
    } catch (const Error&) {
        ensure(false, "mediating map is not order preserving");
    }
    return u;
}

UnitExtension unit_extension(const GaloisRef& g) {
    auto eta = unit(g).eta;
    ExtensionContext ctx(g->pol, eta.hx, eta.hy);
    UnitExtension out;
    out.rbar = extend_relation(ctx);
    out.rd = eta.dst->pol.r();
    out.contained = out.rbar.subset_of(out.rd);
    out.equal = out.rbar == out.rd;
    ensure(out.contained, "R-bar is not contained in R_D");
    return out;
}

}  // namespace polab
