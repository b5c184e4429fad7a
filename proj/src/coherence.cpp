#include "polab/coherence.hpp"

#include <cstdlib>

namespace polab {

const char* to_string(Cond c) {
    static const char* names[] = {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "E1", "E2", "S1", "S2"};
    return names[static_cast<int>(c)];
}

std::optional<Cond> cond_from_string(const std::string& s) {
    for (Cond c : all_conditions)
        if (s == to_string(c)) return c;
    return std::nullopt;
}

std::string Witness::str() const {
    std::string out;
    for (auto& [k, v] : items) out += (out.empty() ? "" : " ") + k + "=" + v;
    return out;
}

namespace {

struct Ctx {
    const ExtensionPolarity& e;
    const Poset& X() const { return e.X(); }
    const Poset& Y() const { return e.Y(); }
    std::string xn(Index x) const { return e.X().name(x); }
    std::string yn(Index y) const { return e.Y().name(y); }
    std::string pn(Index p) const { return e.P().name(p); }
    std::string ps(const BitSet& s) const { return set_name(e.P().names(), s); }
};

CondResult fail(Witness w) { return CondResult{false, std::move(w)}; }

CondResult c1(const Ctx& c) {
    for (Index x1 = 0; x1 < c.X().size(); ++x1)
        for (Index x2 : c.X().up(x1).members())
            for (Index y = 0; y < c.Y().size(); ++y)
                if (c.e.R(x2, y) && !c.e.R(x1, y)) return fail({{{"x1", c.xn(x1)}, {"x2", c.xn(x2)}, {"y", c.yn(y)}}});
    return {};
}

CondResult c2(const Ctx& c) {
    for (Index x = 0; x < c.X().size(); ++x)
        for (Index y1 = 0; y1 < c.Y().size(); ++y1)
            for (Index y2 : c.Y().up(y1).members())
                if (c.e.R(x, y1) && !c.e.R(x, y2)) return fail({{{"x", c.xn(x)}, {"y1", c.yn(y1)}, {"y2", c.yn(y2)}}});
    return {};
}

CondResult c3(const Ctx& c) {
    for (Index p = 0; p < c.e.P().size(); ++p)
        if (!c.e.R(c.e.ex()(p), c.e.ey()(p))) return fail({{{"p", c.pn(p)}}});
    return {};
}

CondResult c4(const Ctx& c) {
    const auto& e = c.e;
    for (Index x = 0; x < e.nx(); ++x)
        for (Index p = 0; p < e.P().size(); ++p) {
            if (!e.R(x, e.ey()(p))) continue;
            for (Index y = 0; y < e.ny(); ++y)
                if (e.R(e.ex()(p), y) && !e.R(x, y)) return fail({{{"x", c.xn(x)}, {"p", c.pn(p)}, {"y", c.yn(y)}}});
        }
    return {};
}

CondResult c5(const Ctx& c) {
    const auto& e = c.e;
    for (Index x1 = 0; x1 < e.nx(); ++x1)
        for (Index p = 0; p < e.P().size(); ++p) {
            if (!e.R(x1, e.ey()(p))) continue;
            for (Index x2 : e.X().up(e.ex()(p)).members())
                if (!e.X().leq(x1, x2)) return fail({{{"x1", c.xn(x1)}, {"p", c.pn(p)}, {"x2", c.xn(x2)}}});
        }
    return {};
}

CondResult c6(const Ctx& c) {
    const auto& e = c.e;
    for (Index y1 = 0; y1 < e.ny(); ++y1)
        for (Index p = 0; p < e.P().size(); ++p) {
            if (!e.Y().leq(y1, e.ey()(p))) continue;
            for (Index y2 = 0; y2 < e.ny(); ++y2)
                if (e.R(e.ex()(p), y2) && !e.Y().leq(y1, y2))
                    return fail({{{"y1", c.yn(y1)}, {"p", c.pn(p)}, {"y2", c.yn(y2)}}});
        }
    return {};
}

// Any S with meet x and y1 below all e_Y[S] sits inside A(x) n U(y1), whose
// meet is then x as well.
CondResult c7(const Ctx& c) {
    const auto& e = c.e;
    for (Index x = 0; x < e.nx(); ++x) {
        BitSet a = e.ex().preimage(e.X().up(x));
        for (Index y1 = 0; y1 < e.ny(); ++y1) {
            BitSet s = a & e.ey().preimage(e.Y().up(y1));
            auto m = ex_meet(e, s);
            if (!m || *m != x) continue;
            for (Index y2 = 0; y2 < e.ny(); ++y2)
                if (e.R(x, y2) && !e.Y().leq(y1, y2))
                    return fail({{{"x", c.xn(x)}, {"y1", c.yn(y1)}, {"y2", c.yn(y2)}, {"S", c.ps(s)}}});
        }
    }
    return {};
}

CondResult c8(const Ctx& c) {
    const auto& e = c.e;
    for (Index y = 0; y < e.ny(); ++y) {
        BitSet d = e.ey().preimage(e.Y().down(y));
        for (Index x2 = 0; x2 < e.nx(); ++x2) {
            BitSet t = d & e.ex().preimage(e.X().down(x2));
            auto j = ey_join(e, t);
            if (!j || *j != y) continue;
            for (Index x1 = 0; x1 < e.nx(); ++x1)
                if (e.R(x1, y) && !e.X().leq(x1, x2))
                    return fail({{{"x1", c.xn(x1)}, {"x2", c.xn(x2)}, {"y", c.yn(y)}, {"T", c.ps(t)}}});
        }
    }
    return {};
}

CondResult e1(const Ctx& c) {
    const auto& e = c.e;
    for (Index x1 = 0; x1 < e.nx(); ++x1)
        for (Index x2 = 0; x2 < e.nx(); ++x2) {
            if (e.X().leq(x1, x2)) continue;
            BitSet sep = e.r().row(x2);
            sep.subtract(e.r().row(x1));
            if (sep.none()) return fail({{{"x1", c.xn(x1)}, {"x2", c.xn(x2)}}});
        }
    return {};
}

CondResult e2(const Ctx& c) {
    const auto& e = c.e;
    for (Index y1 = 0; y1 < e.ny(); ++y1)
        for (Index y2 = 0; y2 < e.ny(); ++y2) {
            if (e.Y().leq(y1, y2)) continue;
            BitSet sep = e.r().column(y1);
            sep.subtract(e.r().column(y2));
            if (sep.none()) return fail({{{"y1", c.yn(y1)}, {"y2", c.yn(y2)}}});
        }
    return {};
}

CondResult s1(const Ctx& c) {
    const auto& e = c.e;
    for (Index x = 0; x < e.nx(); ++x)
        for (Index p = 0; p < e.P().size(); ++p)
            if (e.X().leq(x, e.ex()(p)) != e.R(x, e.ey()(p))) return fail({{{"x", c.xn(x)}, {"p", c.pn(p)}}});
    return {};
}

CondResult s2(const Ctx& c) {
    const auto& e = c.e;
    for (Index p = 0; p < e.P().size(); ++p)
        for (Index y = 0; y < e.ny(); ++y)
            if (e.Y().leq(e.ey()(p), y) != e.R(e.ex()(p), y)) return fail({{{"p", c.pn(p)}, {"y", c.yn(y)}}});
    return {};
}

}  // namespace

CondResult check_condition(const ExtensionPolarity& e, Cond cond) {
    Ctx c{e};
    switch (cond) {
        case Cond::C1: return c1(c);
        case Cond::C2: return c2(c);
        case Cond::C3: return c3(c);
        case Cond::C4: return c4(c);
        case Cond::C5: return c5(c);
        case Cond::C6: return c6(c);
        case Cond::C7: return c7(c);
        case Cond::C8: return c8(c);
        case Cond::E1: return e1(c);
        case Cond::E2: return e2(c);
        case Cond::S1: return s1(c);
        case Cond::S2: return s2(c);
    }
    return {};
}

CoherenceReport check_coherence(const ExtensionPolarity& e) {
    CoherenceReport rep;
    for (Cond c : all_conditions) rep.conds[static_cast<int>(c)] = check_condition(e, c);
    auto ok = [&](Cond c) { return rep[c].holds; };
    rep.level = -1;
    if (ok(Cond::C1) && ok(Cond::C2)) {
        rep.level = 0;
        if (ok(Cond::C3) && ok(Cond::C4)) {
            rep.level = 1;
            if (ok(Cond::C5) && ok(Cond::C6)) {
                rep.level = 2;
                if (ok(Cond::C7) && ok(Cond::C8)) rep.level = 3;
            }
        }
    }
    rep.meet_ext = is_meet_extension(e.ex());
    rep.join_ext = is_join_extension(e.ey());
    rep.galois = rep.level == 3 && rep.meet_ext && rep.join_ext;
    rep.entangled = ok(Cond::E1) && ok(Cond::E2);
    return rep;
}

int coherence_level(const ExtensionPolarity& e) {
    static constexpr Cond blocks[4][2] = {{Cond::C1, Cond::C2}, {Cond::C3, Cond::C4},
                                          {Cond::C5, Cond::C6}, {Cond::C7, Cond::C8}};
    int level = -1;
    for (auto& b : blocks) {
        if (!check_condition(e, b[0]).holds || !check_condition(e, b[1]).holds) break;
        ++level;
    }
    return level;
}

std::string level_name(int level) { return level < 0 ? "none" : std::to_string(level); }

PreorderCheck is_n_preorder(const ExtensionPolarity& e, const Relation& u, int n) {
    if (u.rows() != e.n() || u.cols() != e.n())
        throw Error(ErrorCode::CarrierMismatch, "preorder carrier does not match X u Y");
    auto nm = [&](Index i) { return e.union_name(i); };
    auto bad = [](std::string clause, Witness w) { return PreorderCheck{false, std::move(clause), std::move(w)}; };
    for (Index a = 0; a < e.n(); ++a)
        if (!u.test(a, a)) return bad("reflexive", {{{"z", nm(a)}}});
    for (Index a = 0; a < e.n(); ++a)
        for (Index b : u.row(a).members())
            for (Index c : u.row(b).members())
                if (!u.test(a, c)) return bad("transitive", {{{"a", nm(a)}, {"b", nm(b)}, {"c", nm(c)}}});
    for (Index x = 0; x < e.nx(); ++x)
        for (Index y = 0; y < e.ny(); ++y)
            if (u.test(e.ux(x), e.uy(y)) != e.R(x, y)) return bad("P1", {{{"x", nm(e.ux(x))}, {"y", nm(e.uy(y))}}});
    for (auto [a, b] : e.union_order().pairs())
        if (!u.test(a, b)) return bad(e.is_x(a) ? "P2" : "P3", {{{"a", nm(a)}, {"b", nm(b)}}});
    if (n < 1) return {};
    for (Index p = 0; p < e.P().size(); ++p) {
        Index a = e.ux(e.ex()(p)), b = e.uy(e.ey()(p));
        if (!u.test(a, b) || !u.test(b, a)) return bad("commute", {{{"p", e.P().name(p)}}});
    }
    if (n < 2) return {};
    for (Index a = 0; a < e.nx(); ++a)
        for (Index b = 0; b < e.nx(); ++b)
            if (u.test(e.ux(a), e.ux(b)) && !e.X().leq(a, b)) return bad("embed-X", {{{"x1", nm(a)}, {"x2", nm(b)}}});
    for (Index a = 0; a < e.ny(); ++a)
        for (Index b = 0; b < e.ny(); ++b)
            if (u.test(e.uy(a), e.uy(b)) && !e.Y().leq(a, b)) return bad("embed-Y", {{{"y1", nm(e.uy(a))}, {"y2", nm(e.uy(b))}}});
    if (n < 3) return {};
    // P4: a lower bound z of iota_X e_X[S] that is not below the meet
    for (Index x = 0; x < e.nx(); ++x) {
        BitSet a = e.ex().preimage(e.X().up(x));
        for (Index z = 0; z < e.n(); ++z) {
            if (u.test(z, e.ux(x))) continue;
            BitSet s(e.P().size());
            for (Index p : a.members())
                if (u.test(z, e.ux(e.ex()(p)))) s.set(p);
            auto m = ex_meet(e, s);
            if (m && *m == x) return bad("P4", {{{"x", nm(e.ux(x))}, {"z", nm(z)}, {"S", set_name(e.P().names(), s)}}});
        }
    }
    for (Index y = 0; y < e.ny(); ++y) {
        BitSet d = e.ey().preimage(e.Y().down(y));
        for (Index z = 0; z < e.n(); ++z) {
            if (u.test(e.uy(y), z)) continue;
            BitSet t(e.P().size());
            for (Index p : d.members())
                if (u.test(e.uy(e.ey()(p)), z)) t.set(p);
            auto j = ey_join(e, t);
            if (j && *j == y) return bad("P5", {{{"y", nm(e.uy(y))}, {"z", nm(z)}, {"T", set_name(e.P().names(), t)}}});
        }
    }
    return {};
}

int preorder_grade(const ExtensionPolarity& e, const Relation& u) {
    int g = -1;
    while (g < 3 && is_n_preorder(e, u, g + 1).ok) ++g;
    return g;
}

Index max_carrier_default() {
    if (const char* v = std::getenv("POLAB_MAX_CARRIER")) {
        char* end = nullptr;
        long n = std::strtol(v, &end, 10);
        if (end != v && n > 0) return static_cast<Index>(n);
    }
    return 7;
}

namespace {

struct Search {
    Index n;
    std::vector<std::pair<Index, Index>> free;
    Relation out;
    const std::function<bool(const Relation&)>& accept;
    std::size_t cap;
    EnumResult res;

    void run(Index k, const Relation& in) {
        if (res.truncated) return;
        while (k < free.size() && in.test(free[k].first, free[k].second)) ++k;
        if (k == free.size()) {
            if (!accept(in)) return;
            if (res.preorders.size() >= cap) {
                res.truncated = true;
                return;
            }
            res.preorders.push_back(in);
            return;
        }
        auto [i, j] = free[k];
        out.set(i, j);
        run(k + 1, in);
        out.set(i, j, false);
        Relation next = in;
        BitSet from = in.column(i);
        const BitSet& to = in.row(j);
        for (Index a : from.members()) {
            next.row(a) |= to;
            if (next.row(a).intersects(out.row(a))) return;
        }
        run(k + 1, next);
    }
};

}  // namespace

EnumResult search_preorders(Index n, const Relation& forced, const Relation& forbidden,
                            const std::function<bool(const Relation&)>& accept, std::size_t cap) {
    Relation in = forced;
    in.close_reflexive();
    in.close_transitive();
    for (Index a = 0; a < n; ++a)
        if (in.row(a).intersects(forbidden.row(a))) return {};
    Search s{n, {}, forbidden, accept, cap, {}};
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (!in.test(a, b) && !forbidden.test(a, b)) s.free.emplace_back(a, b);
    s.run(0, in);
    return std::move(s.res);
}

EnumResult enumerate_n_preorders(const ExtensionPolarity& e, int n, const EnumOptions& opt) {
    if (e.n() > opt.max_carrier)
        throw Error(ErrorCode::CarrierTooLarge, "carrier of " + std::to_string(e.n()) + " exceeds enumeration bound " +
                                                    std::to_string(opt.max_carrier));
    Relation forced = r_zero(e);
    Relation forbidden(e.n(), e.n());
    for (Index x = 0; x < e.nx(); ++x)
        for (Index y = 0; y < e.ny(); ++y)
            if (!e.R(x, y)) forbidden.set(e.ux(x), e.uy(y));
    if (n >= 1)
        for (Index p = 0; p < e.P().size(); ++p) {
            forced.set(e.uy(e.ey()(p)), e.ux(e.ex()(p)));
            forced.set(e.ux(e.ex()(p)), e.uy(e.ey()(p)));
        }
    if (n >= 2) {
        for (Index a = 0; a < e.nx(); ++a)
            for (Index b = 0; b < e.nx(); ++b)
                if (!e.X().leq(a, b)) forbidden.set(e.ux(a), e.ux(b));
        for (Index a = 0; a < e.ny(); ++a)
            for (Index b = 0; b < e.ny(); ++b)
                if (!e.Y().leq(a, b)) forbidden.set(e.uy(a), e.uy(b));
    }
    std::function<bool(const Relation&)> accept = [&](const Relation& u) {
        if (n < 3) return true;
        return is_n_preorder(e, u, 3).ok;
    };
    auto res = search_preorders(e.n(), forced, forbidden, accept, opt.cap);
    for (auto& u : res.preorders) ensure(is_n_preorder(e, u, n).ok, "enumerated relation is not an n-preorder");
    return res;
}

bool exists_n_preorder(const ExtensionPolarity& e, int n, const EnumOptions& opt) {
    EnumOptions o = opt;
    o.cap = 1;
    auto r = enumerate_n_preorders(e, n, o);
    return !r.preorders.empty();
}

Relation canonical_relation(const ExtensionPolarity& e, int n) {
    if (n == 0) return r_zero(e);
    if (n == 3) return r_hat_g(e);
    return r_hat_m(e);
}

std::vector<EquivalenceRow> coherence_equivalences(const ExtensionPolarity& e, const EnumOptions& opt) {
    std::vector<EquivalenceRow> rows;
    int level = coherence_level(e);
    for (int n = 0; n <= 3; ++n) {
        EquivalenceRow row;
        row.n = n;
        row.coherent = level >= n;
        Relation canon = canonical_relation(e, n);
        row.canonical_is_preorder = is_n_preorder(e, canon, n).ok;
        auto all = enumerate_n_preorders(e, n, opt);
        row.truncated = all.truncated;
        row.exists = !all.preorders.empty();
        if (row.exists) {
            bool member = false;
            for (auto& u : all.preorders) {
                if (!canon.subset_of(u)) row.minimal = false;
                if (u == canon) member = true;
            }
            if (!all.truncated && !member) row.minimal = false;
            const auto& ps = all.preorders;
            std::size_t lim = std::min<std::size_t>(ps.size(), 24);
            for (std::size_t i = 0; i < lim && row.intersections; ++i)
                for (std::size_t j = i + 1; j < lim; ++j)
                    if (!is_n_preorder(e, ps[i] & ps[j], n).ok) {
                        row.intersections = false;
                        break;
                    }
        }
        rows.push_back(row);
    }
    return rows;
}

bool is_entangled(const ExtensionPolarity& e) {
    return check_condition(e, Cond::E1).holds && check_condition(e, Cond::E2).holds;
}

EntanglementReport entangled_consequences(const ExtensionPolarity& e, const EnumOptions& opt) {
    EntanglementReport rep;
    rep.entangled = is_entangled(e);
    if (!rep.entangled) return rep;
    auto all = enumerate_n_preorders(e, 1, opt);
    rep.one_preorders = all.preorders.size();
    for (auto& u : all.preorders) {
        bool restricts = true;
        for (Index a = 0; a < e.nx(); ++a)
            for (Index b = 0; b < e.nx(); ++b)
                if (u.test(e.ux(a), e.ux(b)) != e.X().leq(a, b)) restricts = false;
        for (Index a = 0; a < e.ny(); ++a)
            for (Index b = 0; b < e.ny(); ++b)
                if (u.test(e.uy(a), e.uy(b)) != e.Y().leq(a, b)) restricts = false;
        if (!restricts || !is_n_preorder(e, u, 2).ok) rep.consequences_hold = false;
    }
    return rep;
}

bool is_galois(const ExtensionPolarity& e) {
    return coherence_level(e) == 3 && is_meet_extension(e.ex()) && is_join_extension(e.ey());
}

bool galois_via_s1s2(const ExtensionPolarity& e) {
    if (coherence_level(e) < 0 || !is_meet_extension(e.ex()) || !is_join_extension(e.ey()))
        throw Error(ErrorCode::PreconditionViolation, "S1/S2 test needs a 0-coherent polarity over a meet/join-extension pair");
    bool fast = check_condition(e, Cond::S1).holds && check_condition(e, Cond::S2).holds;
    ensure(fast == is_galois(e), "S1/S2 characterisation disagrees with the definition");
    return fast;
}

Intermediate intermediate_structure(const ExtensionPolarity& e, const Relation& u) {
    auto chk = is_n_preorder(e, u, 1);
    if (!chk.ok) throw Error(ErrorCode::NotOnePreorder, chk.clause + " fails at " + chk.witness.str());
    Intermediate im;
    im.q = quotient(e.union_names(), u);
    im.poset = share(im.q.poset);
    std::vector<Index> ix, iy;
    for (Index x = 0; x < e.nx(); ++x) ix.push_back(im.q.cls[e.ux(x)]);
    for (Index y = 0; y < e.ny(); ++y) iy.push_back(im.q.cls[e.uy(y)]);
    im.iota_x = MonotoneMap(e.ex().target_ref(), im.poset, ix);
    im.iota_y = MonotoneMap(e.ey().target_ref(), im.poset, iy);
    im.gamma = compose(im.iota_x, e.ex());
    ensure(im.gamma == compose(im.iota_y, e.ey()), "gamma is not well defined");
    if (is_galois(e)) {
        ensure(im.gamma.is_embedding(), "gamma is not an embedding for a Galois polarity");
        // only for the minimal relation: extra pairs can glue x and y outside gamma[P]
        if (e.r() == r_l(e.ex(), e.ey()))
            ensure(im.gamma.image() == (im.iota_x.image() & im.iota_y.image()), "gamma[P] differs from the image intersection");
    }
    return im;
}

Relation unique_3preorder(const ExtensionPolarity& g) {
    if (!is_galois(g)) throw Error(ErrorCode::NotGalois, "polarity is not Galois");
    Relation rg = r_hat_g(g);
    ensure(rg == (r_zero(g) | embed_yx(g, z_prime_yx(g))), "R-hat-g differs from R0 u Z'");
    ensure(is_n_preorder(g, rg, 3).ok, "R-hat-g is not a 3-preorder");
    for (Index a = 0; a < g.n(); ++a)
        for (Index b = 0; b < g.n(); ++b) {
            if (rg.test(a, b)) continue;
            Relation bigger = rg;
            bigger.set(a, b);
            bigger.close_transitive();
            ensure(!is_n_preorder(g, bigger, 3).ok, "a single-pair enlargement is still a 3-preorder");
        }
    auto im = intermediate_structure(g, rg);
    ensure(preserves_meets(im.iota_x), "iota_X is not completely meet-preserving");
    ensure(preserves_joins(im.iota_y), "iota_Y is not completely join-preserving");
    const Poset& q = *im.poset;
    BitSet xs = im.iota_x.image(), ys = im.iota_y.image();
    for (Index z = 0; z < q.size(); ++z) {
        auto j = q.join(xs & q.down(z));
        auto m = q.meet(ys & q.up(z));
        ensure(j && *j == z, "iota_X[X] does not join-generate");
        ensure(m && *m == z, "iota_Y[Y] does not meet-generate");
    }
    return rg;
}

}  // namespace polab
