#include "polab/morphism.hpp"

#include "polab/error.hpp"

namespace polab {

namespace {

bool same_poset(const Poset& a, const Poset& b) { return &a == &b || a == b; }

void require_domains(const GaloisRef& s, const GaloisRef& d, const MonotoneMap& hx, const MonotoneMap& hp,
                     const MonotoneMap& hy) {
    const auto& a = s->pol;
    const auto& b = d->pol;
    if (!same_poset(hx.source(), a.X()) || !same_poset(hx.target(), b.X()))
        throw Error(ErrorCode::DomainMismatch, "h_X must run X -> X'");
    if (!same_poset(hp.source(), a.P()) || !same_poset(hp.target(), b.P()))
        throw Error(ErrorCode::DomainMismatch, "h_P must run P -> P'");
    if (!same_poset(hy.source(), a.Y()) || !same_poset(hy.target(), b.Y()))
        throw Error(ErrorCode::DomainMismatch, "h_Y must run Y -> Y'");
}

MorphismCheck failed(std::string clause, Witness w = {}) { return {false, std::move(clause), std::move(w)}; }

}  // namespace

GaloisRef make_galois(ExtensionPolarity pol) {
    auto g = std::make_shared<GaloisPolarity>();
    g->pre = unique_3preorder(pol);
    g->im = intermediate_structure(pol, g->pre);
    g->pol = std::move(pol);
    return g;
}

MorphismCheck check_morphism(const GaloisRef& src, const GaloisRef& dst, const MonotoneMap& hx, const MonotoneMap& hp,
                             const MonotoneMap& hy) {
    require_domains(src, dst, hx, hp, hy);
    const auto& G = src->pol;
    const auto& H = dst->pol;
    const auto& im = src->im;
    const auto& im2 = dst->im;

    for (Index p = 0; p < G.P().size(); ++p) {
        if (hx(G.ex()(p)) != H.ex()(hp(p)) || hy(G.ey()(p)) != H.ey()(hp(p))) {
            Witness w;
            w.add("p", G.P().name(p));
            return failed("M1", w);
        }
    }
    for (Index x = 0; x < G.nx(); ++x)
        for (Index y = 0; y < G.ny(); ++y)
            if (src->XY().leq(im.iota_y(y), im.iota_x(x)) && !dst->XY().leq(im2.iota_y(hy(y)), im2.iota_x(hx(x)))) {
                Witness w;
                w.add("x", G.X().name(x));
                w.add("y", G.Y().name(y));
                return failed("M2", w);
            }

    for (Index x2 = 0; x2 < H.nx(); ++x2)
        for (Index y2 = 0; y2 < H.ny(); ++y2) {
            if (H.R(x2, y2)) continue;
            BitSet pre_up = hx.preimage(H.X().up(x2));
            BitSet pre_down = hy.preimage(H.Y().down(y2));
            BitSet a_set(G.nx()), b_set(G.ny());
            for (Index a = 0; a < G.nx(); ++a) a_set.set(a, H.R(hx(a), y2));
            for (Index b = 0; b < G.ny(); ++b) b_set.set(b, H.R(x2, hy(b)));
            bool found = false;
            for (Index x = 0; x < G.nx() && !found; ++x) {
                if (!pre_up.subset_of(G.X().up(x)) || !b_set.subset_of(G.r().row(x))) continue;
                for (Index y = 0; y < G.ny() && !found; ++y)
                    found = !G.R(x, y) && pre_down.subset_of(G.Y().down(y)) && a_set.subset_of(G.r().column(y));
            }
            if (!found) {
                Witness w;
                w.add("x'", H.X().name(x2));
                w.add("y'", H.Y().name(y2));
                return failed("M3", w);
            }
        }
    return {};
}

PolarityMorphism validate_morphism(const GaloisRef& src, const GaloisRef& dst, MonotoneMap hx, MonotoneMap hp,
                                   MonotoneMap hy) {
    auto chk = check_morphism(src, dst, hx, hp, hy);
    if (!chk.ok) throw Error(ErrorCode::NotMorphism, chk.clause + " fails at " + chk.witness.str());
    const auto& G = src->pol;
    const auto& H = dst->pol;
    bool reflects = true;
    for (Index x = 0; x < G.nx(); ++x)
        for (Index y = 0; y < G.ny(); ++y) {
            bool img = H.R(hx(x), hy(y));
            if (G.R(x, y)) ensure(img, "x R y not carried to h_X(x) R' h_Y(y)");
            if (img && !G.R(x, y)) reflects = false;
        }
    PolarityMorphism h{src, dst, std::move(hx), std::move(hp), std::move(hy)};
    h.embedding = reflects && h.hx.is_embedding() && h.hp.is_embedding() && h.hy.is_embedding();
    h.isomorphism = h.embedding && h.hx.is_surjective() && h.hp.is_surjective() && h.hy.is_surjective();
    return h;
}

PolarityMorphism identity_morphism(const GaloisRef& g) {
    const auto& e = g->pol;
    return validate_morphism(g, g, MonotoneMap::identity(e.ex().target_ref()), MonotoneMap::identity(e.base_ref()),
                             MonotoneMap::identity(e.ey().target_ref()));
}

MorphismCheck check_galois_stable(const GaloisRef& src, const GaloisRef& dst, const MonotoneMap& psi) {
    if (!same_poset(psi.source(), src->XY()) || !same_poset(psi.target(), dst->XY()))
        throw Error(ErrorCode::DomainMismatch, "psi must run X u Y -> X' u Y'");
    if (!is_cut_stable(psi)) return failed("cut-stable");
    auto inside = [&](const MonotoneMap& f, const BitSet& img, const char* clause) -> MorphismCheck {
        for (Index a = 0; a < f.source().size(); ++a)
            if (!img.test(psi(f(a)))) {
                Witness w;
                w.add("z", f.source().name(a));
                return failed(clause, w);
            }
        return {};
    };
    if (auto c = inside(src->im.gamma, dst->im.gamma.image(), "G1"); !c.ok) return c;
    if (auto c = inside(src->im.iota_x, dst->im.iota_x.image(), "G2"); !c.ok) return c;
    if (auto c = inside(src->im.iota_y, dst->im.iota_y.image(), "G3"); !c.ok) return c;
    return {};
}

GaloisStableMap validate_galois_stable(const GaloisRef& src, const GaloisRef& dst, MonotoneMap psi) {
    auto chk = check_galois_stable(src, dst, psi);
    if (!chk.ok) throw Error(ErrorCode::NotGaloisStable, chk.clause + " fails " + chk.witness.str());
    return {src, dst, std::move(psi)};
}

GaloisStableMap psi_of(const PolarityMorphism& h) {
    const auto& im = h.src->im;
    const auto& im2 = h.dst->im;
    const Index n = h.src->XY().size();
    std::vector<std::optional<Index>> v(n);
    auto put = [&](Index z, Index val) {
        ensure(!v[z] || *v[z] == val, "psi_h is not well defined");
        v[z] = val;
    };
    for (Index x = 0; x < h.src->pol.nx(); ++x) put(im.iota_x(x), im2.iota_x(h.hx(x)));
    for (Index y = 0; y < h.src->pol.ny(); ++y) put(im.iota_y(y), im2.iota_y(h.hy(y)));
    std::vector<Index> vals(n);
    for (Index z = 0; z < n; ++z) {
        ensure(v[z].has_value(), "X u Y has a point outside both images");
        vals[z] = *v[z];
    }
    MonotoneMap psi;
    try {
        psi = MonotoneMap(h.src->XY_ref(), h.dst->XY_ref(), vals);
    } catch (const Error&) {
        ensure(false, "psi_h is not order preserving");
    }
    auto chk = check_galois_stable(h.src, h.dst, psi);
    ensure(chk.ok, "psi_h is not Galois-stable: " + chk.clause);
    ensure(psi.is_embedding() == h.embedding, "psi_h embedding disagrees with polarity embedding");
    if (h.hx.is_surjective() && h.hy.is_surjective()) ensure(psi.is_surjective(), "psi_h not onto for onto h");
    return {h.src, h.dst, std::move(psi)};
}

PolarityMorphism h_of(const GaloisStableMap& s) {
    auto pull = [&](const MonotoneMap& from, const MonotoneMap& into, const char* what) {
        std::vector<std::optional<Index>> inv(into.target().size());
        for (Index a = 0; a < into.source().size(); ++a) inv[into(a)] = a;
        std::vector<Index> vals(from.source().size());
        for (Index a = 0; a < vals.size(); ++a) {
            auto hit = inv[s.psi(from(a))];
            if (!hit)
                throw Error(ErrorCode::PartialInverseUndefined,
                            std::string(what) + " undefined at " + from.source().name(a));
            vals[a] = *hit;
        }
        return MonotoneMap(from.source_ref(), into.source_ref(), vals);
    };
    const auto& im = s.src->im;
    const auto& im2 = s.dst->im;
    return validate_morphism(s.src, s.dst, pull(im.iota_x, im2.iota_x, "h_X"), pull(im.gamma, im2.gamma, "h_P"),
                             pull(im.iota_y, im2.iota_y, "h_Y"));
}

bool roundtrip(const PolarityMorphism& h) { return h_of(psi_of(h)) == h; }
bool roundtrip(const GaloisStableMap& psi) { return psi_of(h_of(psi)) == psi; }

PolarityMorphism compose(const PolarityMorphism& h2, const PolarityMorphism& h1) {
    if (!(h1.dst->pol == h2.src->pol)) throw Error(ErrorCode::DomainMismatch, "morphisms do not compose");
    auto h = validate_morphism(h1.src, h2.dst, compose(h2.hx, h1.hx), compose(h2.hp, h1.hp), compose(h2.hy, h1.hy));
    ensure(psi_of(h).psi == compose(psi_of(h2).psi, psi_of(h1).psi), "psi of a composite is not the composite of psi");
    return h;
}

GaloisStableMap compose(const GaloisStableMap& psi2, const GaloisStableMap& psi1) {
    if (!(psi1.dst->pol == psi2.src->pol)) throw Error(ErrorCode::DomainMismatch, "maps do not compose");
    auto c = compose(psi2.psi, psi1.psi);
    auto chk = check_galois_stable(psi1.src, psi2.dst, c);
    ensure(chk.ok, "composite of Galois-stable maps fails " + chk.clause);
    return {psi1.src, psi2.dst, std::move(c)};
}

}  // namespace polab
