#include "polab/concept.hpp"

#include <algorithm>

namespace polab {

BitSet polar_right(const ExtensionPolarity& pol, const BitSet& s) {
    BitSet out(pol.ny(), true);
    for (Index x : s.members()) out &= pol.r().row(x);
    return out;
}

BitSet polar_left(const ExtensionPolarity& pol, const BitSet& t) {
    BitSet out(pol.nx(), true);
    for (Index x = 0; x < pol.nx(); ++x)
        if (!t.subset_of(pol.r().row(x))) out.reset(x);
    return out;
}

Index ConceptLattice::index_of(const BitSet& s) const {
    auto it = std::lower_bound(closed.begin(), closed.end(), s);
    ensure(it != closed.end() && *it == s, "set is not closed");
    return it - closed.begin();
}

BitSet xi(const ExtensionPolarity& pol, Index x) {
    return polar_left(pol, polar_right(pol, BitSet::of(pol.nx(), {x})));
}

BitSet upsilon(const ExtensionPolarity& pol, Index y) { return polar_left(pol, BitSet::of(pol.ny(), {y})); }

// Closed sets are the intersections of attribute extents, X being the empty one.
ConceptLattice concept_lattice(const ExtensionPolarity& pol, Index max_x) {
    if (pol.nx() > max_x)
        throw Error(ErrorCode::CarrierTooLarge, "|X| = " + std::to_string(pol.nx()) + " exceeds " + std::to_string(max_x));
    std::vector<BitSet> fam{BitSet(pol.nx(), true)};
    for (Index y = 0; y < pol.ny(); ++y) fam.push_back(upsilon(pol, y));
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    for (bool grew = true; grew;) {
        grew = false;
        Index n = fam.size();
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j) {
                BitSet c = fam[i] & fam[j];
                if (!std::binary_search(fam.begin(), fam.end(), c)) {
                    fam.insert(std::lower_bound(fam.begin(), fam.end(), c), c);
                    grew = true;
                }
            }
    }
    ConceptLattice cl;
    cl.closed = fam;
    std::vector<std::string> names;
    for (auto& c : fam) {
        ensure(polar_left(pol, polar_right(pol, c)) == c, "generated set is not closed");
        names.push_back(set_name(pol.X().names(), c));
    }
    Relation le(fam.size(), fam.size());
    for (Index i = 0; i < fam.size(); ++i)
        for (Index j = 0; j < fam.size(); ++j)
            if (fam[i].subset_of(fam[j])) le.set(i, j);
    cl.lattice = share(Poset::from_relation(std::move(names), std::move(le)));
    ensure(cl.lattice->is_complete_lattice(), "closed sets do not form a complete lattice");
    for (Index c = 0; c < fam.size(); ++c) {
        BitSet below(fam.size()), above(fam.size());
        for (Index x = 0; x < pol.nx(); ++x)
            if (xi(pol, x).subset_of(fam[c])) below.set(cl.index_of(xi(pol, x)));
        for (Index y = 0; y < pol.ny(); ++y)
            if (fam[c].subset_of(upsilon(pol, y))) above.set(cl.index_of(upsilon(pol, y)));
        auto j = cl.lattice->join(below);
        auto m = cl.lattice->meet(above);
        ensure(j && *j == c, "Xi[X] does not join-generate");
        ensure(m && *m == c, "Upsilon[Y] does not meet-generate");
    }
    return cl;
}

namespace {

bool clause4(const ExtensionPolarity& pol, Index y, Index x) {
    for (Index x2 = 0; x2 < pol.nx(); ++x2) {
        if (!pol.R(x2, y)) continue;
        for (Index y2 = 0; y2 < pol.ny(); ++y2)
            if (pol.R(x, y2) && !pol.R(x2, y2)) return false;
    }
    return true;
}

}  // namespace

PropOrder prop_order_preorder(const ExtensionPolarity& pol, const EnumOptions& opt) {
    PropOrder po;
    Index nx = pol.nx(), n = pol.n();
    po.order = Relation(n, n);
    for (Index a = 0; a < nx; ++a)
        for (Index b = 0; b < nx; ++b)
            if (pol.r().row(b).subset_of(pol.r().row(a))) po.order.set(pol.ux(a), pol.ux(b));
    for (Index a = 0; a < pol.ny(); ++a)
        for (Index b = 0; b < pol.ny(); ++b)
            if (pol.r().column(a).subset_of(pol.r().column(b))) po.order.set(pol.uy(a), pol.uy(b));
    for (Index x = 0; x < nx; ++x)
        for (Index y = 0; y < pol.ny(); ++y) {
            if (pol.R(x, y)) po.order.set(pol.ux(x), pol.uy(y));
            if (clause4(pol, y, x)) po.order.set(pol.uy(y), pol.ux(x));
        }
    // the clauses must reproduce inclusion of the closed sets
    std::vector<BitSet> sets;
    for (Index x = 0; x < nx; ++x) sets.push_back(xi(pol, x));
    for (Index y = 0; y < pol.ny(); ++y) sets.push_back(upsilon(pol, y));
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            ensure(po.order.test(a, b) == sets[a].subset_of(sets[b]), "clause order differs from inclusion");

    // distinct sets, then every preorder meeting 1(a) and 1(b) must sit inside
    std::vector<BitSet> distinct = sets;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Index d = distinct.size();
    if (d > opt.max_carrier) return po;
    auto id = [&](Index u) { return Index(std::lower_bound(distinct.begin(), distinct.end(), sets[u]) - distinct.begin()); };
    Relation forced(d, d), forbidden(d, d), target(d, d);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            bool xx = a < nx && b < nx, yy = a >= nx && b >= nx, xy = a < nx && b >= nx;
            if (po.order.test(a, b)) target.set(id(a), id(b));
            if (!(xx || yy || xy)) continue;
            if (po.order.test(a, b)) forced.set(id(a), id(b));
            else forbidden.set(id(a), id(b));
        }
    auto all = search_preorders(d, forced, forbidden, [](const Relation&) { return true; }, opt.cap);
    po.greatest_checked = true;
    po.alternatives = all.preorders.size();
    bool member = false;
    for (auto& u : all.preorders) {
        ensure(u.subset_of(target), "a preorder meeting 1(a),1(b) is not contained in the clause order");
        if (u == target) member = true;
    }
    ensure(member || all.truncated, "clause order does not satisfy 1(a),1(b)");
    return po;
}

bool xi_embedding(const ExtensionPolarity& pol) {
    bool cond = true, actual = true;
    for (Index a = 0; a < pol.nx(); ++a)
        for (Index b = 0; b < pol.nx(); ++b) {
            bool rhs = pol.r().row(b).subset_of(pol.r().row(a));
            if (pol.X().leq(a, b) != rhs) cond = false;
            if (pol.X().leq(a, b) != xi(pol, a).subset_of(xi(pol, b))) actual = false;
        }
    ensure(cond == actual, "embedding criterion for Xi disagrees with the map");
    return cond;
}

bool upsilon_embedding(const ExtensionPolarity& pol) {
    bool cond = true, actual = true;
    for (Index a = 0; a < pol.ny(); ++a)
        for (Index b = 0; b < pol.ny(); ++b) {
            bool rhs = pol.r().column(a).subset_of(pol.r().column(b));
            if (pol.Y().leq(a, b) != rhs) cond = false;
            if (pol.Y().leq(a, b) != upsilon(pol, a).subset_of(upsilon(pol, b))) actual = false;
        }
    ensure(cond == actual, "embedding criterion for Upsilon disagrees with the map");
    return cond;
}

bool inj_1b(const ExtensionPolarity& pol) {
    for (Index a = 0; a < pol.nx(); ++a)
        for (Index b = a + 1; b < pol.nx(); ++b)
            if (pol.r().row(a) == pol.r().row(b)) return false;
    return true;
}

bool inj_1c(const ExtensionPolarity& pol) {
    for (Index a = 0; a < pol.nx(); ++a)
        for (Index b = a + 1; b < pol.nx(); ++b)
            if (xi(pol, b).test(a) && xi(pol, a).test(b)) return false;
    return true;
}

bool inj_2b(const ExtensionPolarity& pol) {
    for (Index a = 0; a < pol.ny(); ++a)
        for (Index b = a + 1; b < pol.ny(); ++b)
            if (pol.r().column(a) == pol.r().column(b)) return false;
    return true;
}

namespace {

void require_completions(const Extension& ex, const Extension& ey) {
    if (!(ex.source() == ey.source())) throw Error(ErrorCode::DomainMismatch, "completions of different bases");
    if (!is_completion(ex) || !is_meet_extension(ex)) throw Error(ErrorCode::NotCompletion, "first map is not a meet-completion");
    if (!is_completion(ey) || !is_join_extension(ey)) throw Error(ErrorCode::NotCompletion, "second map is not a join-completion");
}

void verify_fg(const MonotoneMap& f, const MonotoneMap& g, const Extension& ex, const Extension& ey) {
    ensure(check_galois_connection(f, g), "F -| G fails");
    ensure(compose(f, ey) == ex, "F . e_Y differs from e_X");
    ensure(compose(g, ex) == ey, "G . e_X differs from e_Y");
}

MonotoneMap raw_f(const Extension& ex, const Extension& ey) {
    std::vector<Index> v;
    for (Index y = 0; y < ey.target().size(); ++y)
        v.push_back(*ex.target().join(ex.image(ey.preimage(ey.target().down(y)))));
    return MonotoneMap(ey.target_ref(), ex.target_ref(), std::move(v));
}

MonotoneMap raw_g(const Extension& ex, const Extension& ey) {
    std::vector<Index> v;
    for (Index x = 0; x < ex.target().size(); ++x)
        v.push_back(*ey.target().meet(ey.image(ex.preimage(ex.target().up(x)))));
    return MonotoneMap(ex.target_ref(), ey.target_ref(), std::move(v));
}

}  // namespace

MonotoneMap f_map(const Extension& ex, const Extension& ey) {
    require_completions(ex, ey);
    auto f = raw_f(ex, ey);
    verify_fg(f, raw_g(ex, ey), ex, ey);
    return f;
}

MonotoneMap g_map(const Extension& ex, const Extension& ey) {
    require_completions(ex, ey);
    auto g = raw_g(ex, ey);
    verify_fg(raw_f(ex, ey), g, ex, ey);
    return g;
}

std::size_t count_extending_galois_connections(const Extension& ex, const Extension& ey) {
    require_completions(ex, ey);
    const Poset& X = ex.target();
    const Poset& Y = ey.target();
    if (X.size() > 6 || Y.size() > 6) throw Error(ErrorCode::CarrierTooLarge, "exhaustive search needs |X|,|Y| <= 6");
    std::vector<Index> f(Y.size());
    std::vector<std::optional<Index>> pinned(Y.size());
    for (Index p = 0; p < ex.source().size(); ++p) pinned[ey(p)] = ex(p);
    std::size_t count = 0;
    // a left adjoint fixes its right adjoint: G'(x) = max{y : F'(y) <= x}
    auto finish = [&] {
        for (Index a = 0; a < Y.size(); ++a)
            for (Index b : Y.up(a).members())
                if (!X.leq(f[a], f[b])) return;
        std::vector<Index> g;
        for (Index x = 0; x < X.size(); ++x) {
            BitSet s(Y.size());
            for (Index y = 0; y < Y.size(); ++y)
                if (X.leq(f[y], x)) s.set(y);
            auto m = Y.greatest(s);
            if (!m) return;
            g.push_back(*m);
        }
        for (Index p = 0; p < ex.source().size(); ++p)
            if (g[ex(p)] != ey(p)) return;
        MonotoneMap fm(ey.target_ref(), ex.target_ref(), f);
        MonotoneMap gm(ex.target_ref(), ey.target_ref(), g);
        if (check_galois_connection(fm, gm)) ++count;
    };
    std::function<void(Index)> rec = [&](Index y) {
        if (y == Y.size()) return finish();
        if (pinned[y]) {
            f[y] = *pinned[y];
            rec(y + 1);
            return;
        }
        for (Index x = 0; x < X.size(); ++x) {
            f[y] = x;
            rec(y + 1);
        }
    };
    rec(0);
    return count;
}

Relation z_doubleprime(const ExtensionPolarity& e, const Extension& ix, const Extension& iy) {
    if (!(ix.source() == e.X()) || !(iy.source() == e.Y())) throw Error(ErrorCode::DomainMismatch, "completions must start at X and Y");
    require_embedding(ix, "i_X");
    require_embedding(iy, "i_Y");
    if (!is_completion(ix) || !is_meet_extension(ix) || !preserves_meets(ix))
        throw Error(ErrorCode::PreservationViolation, "i_X is not a completely meet-preserving meet-completion");
    if (!is_completion(iy) || !is_join_extension(iy) || !preserves_joins(iy))
        throw Error(ErrorCode::PreservationViolation, "i_Y is not a completely join-preserving join-completion");
    auto ox = compose(ix, e.ex());
    auto oy = compose(iy, e.ey());
    auto f = f_map(ox, oy);
    auto g = g_map(ox, oy);
    Relation z(e.ny(), e.nx());
    for (Index y = 0; y < e.ny(); ++y)
        for (Index x = 0; x < e.nx(); ++x) {
            bool viaf = ix.target().leq(f(iy(y)), ix(x));
            ensure(viaf == iy.target().leq(iy(y), g(ix(x))), "the two descriptions of Z'' differ");
            if (viaf) z.set(y, x);
        }
    ensure(z == z_prime_yx(e), "Z'' differs from Z'");
    return z;
}

}  // namespace polab
