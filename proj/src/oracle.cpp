#include "polab/oracle.hpp"

#include <algorithm>

#include "polab/error.hpp"

namespace polab {

namespace {

void gate(Index n, Index limit, const char* what) {
    if (n > limit)
        throw Error(ErrorCode::CarrierTooLarge,
                    std::string(what) + ": " + std::to_string(n) + " exceeds " + std::to_string(limit));
}

BitSet subset(Index n, std::uint64_t mask) {
    BitSet s(n);
    for (Index i = 0; i < n; ++i)
        if ((mask >> i) & 1u) s.set(i);
    return s;
}

template <class F>
void for_subsets(Index n, F&& f) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) f(subset(n, m));
}

bool all_of(const BitSet& s, const std::function<bool(Index)>& pred) {
    for (Index i : s.members())
        if (!pred(i)) return false;
    return true;
}

}  // namespace

bool naive_condition(const ExtensionPolarity& e, Cond c) {
    gate(e.P().size(), 10, "naive condition check");
    const auto& X = e.X();
    const auto& Y = e.Y();
    const auto& P = e.P();
    auto ex = [&](Index p) { return e.ex()(p); };
    auto ey = [&](Index p) { return e.ey()(p); };
    const Index nx = e.nx(), ny = e.ny(), np = P.size();
    switch (c) {
        case Cond::C1:
            for (Index x1 = 0; x1 < nx; ++x1)
                for (Index x2 = 0; x2 < nx; ++x2)
                    for (Index y = 0; y < ny; ++y)
                        if (X.leq(x1, x2) && e.R(x2, y) && !e.R(x1, y)) return false;
            return true;
        case Cond::C2:
            for (Index y1 = 0; y1 < ny; ++y1)
                for (Index y2 = 0; y2 < ny; ++y2)
                    for (Index x = 0; x < nx; ++x)
                        if (Y.leq(y1, y2) && e.R(x, y1) && !e.R(x, y2)) return false;
            return true;
        case Cond::C3:
            for (Index p = 0; p < np; ++p)
                if (!e.R(ex(p), ey(p))) return false;
            return true;
        case Cond::C4:
            for (Index p = 0; p < np; ++p)
                for (Index x = 0; x < nx; ++x)
                    for (Index y = 0; y < ny; ++y)
                        if (e.R(x, ey(p)) && e.R(ex(p), y) && !e.R(x, y)) return false;
            return true;
        case Cond::C5:
            for (Index x1 = 0; x1 < nx; ++x1)
                for (Index x2 = 0; x2 < nx; ++x2)
                    for (Index p = 0; p < np; ++p)
                        if (e.R(x1, ey(p)) && X.leq(ex(p), x2) && !X.leq(x1, x2)) return false;
            return true;
        case Cond::C6:
            for (Index y1 = 0; y1 < ny; ++y1)
                for (Index y2 = 0; y2 < ny; ++y2)
                    for (Index p = 0; p < np; ++p)
                        if (Y.leq(y1, ey(p)) && e.R(ex(p), y2) && !Y.leq(y1, y2)) return false;
            return true;
        case Cond::C7: {
            bool ok = true;
            for_subsets(np, [&](const BitSet& s) {
                if (!ok) return;
                auto m = X.meet(e.ex().image(s));
                if (!m) return;
                for (Index y1 = 0; y1 < ny; ++y1) {
                    if (!all_of(s, [&](Index p) { return Y.leq(y1, ey(p)); })) continue;
                    for (Index y2 = 0; y2 < ny; ++y2)
                        if (e.R(*m, y2) && !Y.leq(y1, y2)) ok = false;
                }
            });
            return ok;
        }
        case Cond::C8: {
            bool ok = true;
            for_subsets(np, [&](const BitSet& t) {
                if (!ok) return;
                auto j = Y.join(e.ey().image(t));
                if (!j) return;
                for (Index x2 = 0; x2 < nx; ++x2) {
                    if (!all_of(t, [&](Index q) { return X.leq(ex(q), x2); })) continue;
                    for (Index x1 = 0; x1 < nx; ++x1)
                        if (e.R(x1, *j) && !X.leq(x1, x2)) ok = false;
                }
            });
            return ok;
        }
        case Cond::E1:
            for (Index x1 = 0; x1 < nx; ++x1)
                for (Index x2 = 0; x2 < nx; ++x2) {
                    if (X.leq(x1, x2)) continue;
                    bool found = false;
                    for (Index y = 0; y < ny && !found; ++y) found = e.R(x2, y) && !e.R(x1, y);
                    if (!found) return false;
                }
            return true;
        case Cond::E2:
            for (Index y1 = 0; y1 < ny; ++y1)
                for (Index y2 = 0; y2 < ny; ++y2) {
                    if (Y.leq(y1, y2)) continue;
                    bool found = false;
                    for (Index x = 0; x < nx && !found; ++x) found = e.R(x, y1) && !e.R(x, y2);
                    if (!found) return false;
                }
            return true;
        case Cond::S1:
            for (Index p = 0; p < np; ++p)
                for (Index x = 0; x < nx; ++x)
                    if (X.leq(x, ex(p)) != e.R(x, ey(p))) return false;
            return true;
        case Cond::S2:
            for (Index p = 0; p < np; ++p)
                for (Index y = 0; y < ny; ++y)
                    if (Y.leq(ey(p), y) != e.R(ex(p), y)) return false;
            return true;
    }
    return false;
}

Relation naive_z_s(const ExtensionPolarity& e) {
    gate(e.P().size(), 10, "naive Z_S");
    Relation z(e.ny(), e.nx());
    for_subsets(e.P().size(), [&](const BitSet& s) {
        auto m = e.X().meet(e.ex().image(s));
        if (!m) return;
        for (Index y = 0; y < e.ny(); ++y) {
            if (!all_of(s, [&](Index p) { return e.Y().leq(y, e.ey()(p)); })) continue;
            for (Index x = 0; x < e.nx(); ++x)
                if (e.X().leq(*m, x)) z.set(y, x);
        }
    });
    return z;
}

Relation naive_z_t(const ExtensionPolarity& e) {
    gate(e.P().size(), 10, "naive Z_T");
    Relation z(e.ny(), e.nx());
    for_subsets(e.P().size(), [&](const BitSet& t) {
        auto j = e.Y().join(e.ey().image(t));
        if (!j) return;
        for (Index x = 0; x < e.nx(); ++x) {
            if (!all_of(t, [&](Index q) { return e.X().leq(e.ex()(q), x); })) continue;
            for (Index y = 0; y < e.ny(); ++y)
                if (e.Y().leq(y, *j)) z.set(y, x);
        }
    });
    return z;
}

bool naive_p4(const ExtensionPolarity& e, const Relation& u) {
    gate(e.P().size(), 10, "naive P4");
    bool ok = true;
    for_subsets(e.P().size(), [&](const BitSet& s) {
        if (!ok) return;
        auto m = e.X().meet(e.ex().image(s));
        if (!m) return;
        const Index top = e.ux(*m);
        for (Index p : s.members())
            if (!u.test(top, e.ux(e.ex()(p)))) ok = false;
        for (Index z = 0; z < e.n(); ++z)
            if (all_of(s, [&](Index p) { return u.test(z, e.ux(e.ex()(p))); }) && !u.test(z, top)) ok = false;
    });
    return ok;
}

bool naive_p5(const ExtensionPolarity& e, const Relation& u) {
    gate(e.P().size(), 10, "naive P5");
    bool ok = true;
    for_subsets(e.P().size(), [&](const BitSet& t) {
        if (!ok) return;
        auto j = e.Y().join(e.ey().image(t));
        if (!j) return;
        const Index bot = e.uy(*j);
        for (Index q : t.members())
            if (!u.test(e.uy(e.ey()(q)), bot)) ok = false;
        for (Index z = 0; z < e.n(); ++z)
            if (all_of(t, [&](Index q) { return u.test(e.uy(e.ey()(q)), z); }) && !u.test(bot, z)) ok = false;
    });
    return ok;
}

std::vector<Relation> oracle_preorders_naive(Index n, const Relation& forced, const Relation& forbidden) {
    gate(n, 5, "naive preorder enumeration");
    std::vector<std::pair<Index, Index>> cells;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (i != j) cells.emplace_back(i, j);
    std::vector<Relation> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells.size()); ++m) {
        Relation r = Relation::identity(n);
        for (Index k = 0; k < cells.size(); ++k)
            if ((m >> k) & 1u) r.set(cells[k].first, cells[k].second);
        if (!r.transitive() || !forced.subset_of(r) || (r & forbidden).count() != 0) continue;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Relation> oracle_preorders_pruned(Index n, const Relation& forced, const Relation& forbidden) {
    gate(n, 6, "pruned preorder enumeration");
    return search_preorders(n, forced, forbidden, [](const Relation&) { return true; },
                            std::numeric_limits<std::size_t>::max())
        .preorders;
}

std::vector<BitSet> naive_closed_sets(const ExtensionPolarity& e) {
    gate(e.nx(), 12, "naive closed sets");
    std::vector<BitSet> out;
    for_subsets(e.nx(), [&](const BitSet& s) {
        if (polar_left(e, polar_right(e, s)) == s) out.push_back(s);
    });
    std::sort(out.begin(), out.end());
    return out;
}

PosetRef random_poset(Rng& rng, Index n, const std::string& prefix, double theta) {
    std::bernoulli_distribution coin(theta);
    std::vector<std::string> names;
    for (Index i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    Relation r(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (coin(rng)) r.set(i, j);
    return share(Poset::from_relation(names, r));
}

std::optional<Extension> random_extension(Rng& rng, const PosetRef& base, const std::string& prefix, Index max_new) {
    const Index k = rng() % (max_new + 1);
    const Index b = base->size(), n = b + k;
    std::vector<std::string> names = base->names();
    for (Index i = 0; i < k; ++i) names.push_back(prefix + std::to_string(i));
    Relation r(n, n);
    for (Index i = 0; i < b; ++i)
        for (Index j = 0; j < b; ++j)
            if (base->leq(i, j)) r.set(i, j);
    std::bernoulli_distribution coin(0.35), up(0.5);
    for (Index i = b; i < n; ++i)
        for (Index j = 0; j < i; ++j)
            if (coin(rng)) {
                if (up(rng))
                    r.set(i, j);
                else
                    r.set(j, i);
            }
    try {
        auto target = share(Poset::from_relation(names, r));
        auto m = MonotoneMap::inclusion(base, target);
        if (!m.is_embedding()) return std::nullopt;
        return m;
    } catch (const Error&) {
        return std::nullopt;
    }
}

ExtensionPolarity random_polarity(Rng& rng, Index max_union) {
    for (;;) {
        auto p = random_poset(rng, rng() % (max_union / 2 + 1), "p");
        auto ex = random_extension(rng, p, "a");
        auto ey = random_extension(rng, p, "b");
        if (!ex || !ey) continue;
        if (ex->target().size() + ey->target().size() > max_union) continue;
        Relation r = r_l(*ex, *ey);
        switch (rng() % 4) {
            case 0: break;
            case 1:
            case 2: {
                std::bernoulli_distribution coin(0.1 + 0.1 * static_cast<double>(rng() % 4));
                for (Index i = 0; i < r.rows(); ++i)
                    for (Index j = 0; j < r.cols(); ++j)
                        if (coin(rng)) r.set(i, j);
                if (rng() % 2) r = saturate(ex->target(), ey->target(), r);
                break;
            }
            default: r = saturate(ex->target(), ey->target(), r | r_l(*ex, *ey));
        }
        return ExtensionPolarity(*ex, *ey, r);
    }
}

std::optional<ExtensionPolarity> random_galois(Rng& rng, Index max_base) {
    auto p = random_poset(rng, 1 + rng() % max_base, "p");
    Extension n = macneille(p);
    const Poset& N = n.target();
    auto pick = [&]() {
        BitSet keep = n.image();
        std::bernoulli_distribution coin(0.5);
        for (Index i = 0; i < N.size(); ++i)
            if (coin(rng)) keep.set(i);
        auto sub = share(N.subposet(keep));
        std::vector<Index> vals;
        auto members = keep.members();
        for (Index q = 0; q < p->size(); ++q)
            vals.push_back(static_cast<Index>(std::find(members.begin(), members.end(), n(q)) - members.begin()));
        return std::make_pair(MonotoneMap(p, sub, vals), members);
    };
    for (int tries = 0; tries < 50; ++tries) {
        auto [ex, xs] = pick();
        auto [ey, ys] = pick();
        Relation rn(xs.size(), ys.size());
        for (Index i = 0; i < xs.size(); ++i)
            for (Index j = 0; j < ys.size(); ++j)
                if (N.leq(xs[i], ys[j])) rn.set(i, j);
        Relation rl = r_l(ex, ey);
        Relation r = rl;
        switch (rng() % 3) {
            case 0: break;
            case 1: r = rn; break;
            default: {
                std::bernoulli_distribution coin(0.5);
                for (auto [i, j] : rn.pairs())
                    if (coin(rng)) r.set(i, j);
                r = saturate(ex.target(), ey.target(), r);
            }
        }
        ExtensionPolarity e(ex, ey, r);
        if (is_galois(e)) return e;
    }
    return std::nullopt;
}

ExtensionContext random_context(Rng& rng, Index max_union) {
    for (;;) {
        auto inner = random_polarity(rng, max_union);
        auto ix = random_extension(rng, inner.ex().target_ref(), "u");
        auto iy = random_extension(rng, inner.ey().target_ref(), "v");
        if (ix && iy) return ExtensionContext(inner, *ix, *iy);
    }
}

ExtensionPolarity principal_polarity(const PosetRef& p) {
    auto copy = [&](const std::string& tag) {
        std::vector<std::string> names;
        for (const auto& n : p->names()) names.push_back(tag + n);
        return share(p->renamed(names));
    };
    std::vector<Index> id(p->size());
    for (Index i = 0; i < id.size(); ++i) id[i] = i;
    MonotoneMap ex(p, copy("^"), id), ey(p, copy("!"), id);
    return ExtensionPolarity(ex, ey, r_l(ex, ey));
}

std::vector<PolarityMorphism> enumerate_morphisms(const GaloisRef& a, const GaloisRef& b, std::size_t cap) {
    const auto& G = a->pol;
    const auto& H = b->pol;
    std::vector<PolarityMorphism> out;
    std::size_t visits = 0;
    for_each_monotone(G.P(), H.P(), {}, [&](const std::vector<Index>& hp) {
        std::vector<std::optional<Index>> fx(G.nx()), fy(G.ny());
        for (Index p = 0; p < hp.size(); ++p) {
            fx[G.ex()(p)] = H.ex()(hp[p]);
            fy[G.ey()(p)] = H.ey()(hp[p]);
        }
        MonotoneMap mp(G.base_ref(), H.base_ref(), hp);
        for_each_monotone(G.X(), H.X(), fx, [&](const std::vector<Index>& hx) {
            MonotoneMap mx(G.ex().target_ref(), H.ex().target_ref(), hx);
            for_each_monotone(G.Y(), H.Y(), fy, [&](const std::vector<Index>& hy) {
                MonotoneMap my(G.ey().target_ref(), H.ey().target_ref(), hy);
                if (check_morphism(a, b, mx, mp, my).ok) out.push_back(validate_morphism(a, b, mx, mp, my));
                return ++visits < cap;
            });
            return visits < cap;
        });
        return visits < cap;
    });
    return out;
}

std::vector<GaloisStableMap> enumerate_galois_stable(const GaloisRef& a, const GaloisRef& b, std::size_t cap) {
    std::vector<GaloisStableMap> out;
    std::size_t visits = 0;
    for_each_monotone(a->XY(), b->XY(), {}, [&](const std::vector<Index>& v) {
        MonotoneMap psi(a->XY_ref(), b->XY_ref(), v);
        if (check_galois_stable(a, b, psi).ok) out.push_back({a, b, psi});
        return ++visits < cap;
    });
    return out;
}

}  // namespace polab
