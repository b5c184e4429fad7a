#include "polab/extend.hpp"

#include <random>
#include <sstream>

#include "polab/error.hpp"
#include "polab/io.hpp"

namespace polab {

namespace {

Relation from_mask(Index rows, Index cols, std::uint64_t mask) {
    Relation r(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            if ((mask >> (i * cols + j)) & 1u) r.set(i, j);
    return r;
}

Relation random_relation(Index rows, Index cols, std::mt19937_64& rng, double p) {
    std::bernoulli_distribution coin(p);
    Relation r(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            if (coin(rng)) r.set(i, j);
    return r;
}

// i[R] as pairs of X' x Y'
Relation image_pairs(const Extension& ix, const Extension& iy, const Relation& r) {
    Relation out(ix.target().size(), iy.target().size());
    for (auto [x, y] : r.pairs()) out.set(ix(x), iy(y));
    return out;
}


ClauseCheck implication(std::string clause, bool hyp, bool concl, std::string detail = {}) {
    if (!hyp) return {std::move(clause), Verdict::Vacuous, std::move(detail)};
    return {std::move(clause), concl ? Verdict::Holds : Verdict::Violated, std::move(detail)};
}

}  // namespace

ExtensionContext::ExtensionContext(ExtensionPolarity in, Extension x, Extension y)
    : inner(std::move(in)), ix(std::move(x)), iy(std::move(y)) {
    if (!(ix.source() == inner.X())) throw Error(ErrorCode::DomainMismatch, "i_X does not start at X");
    if (!(iy.source() == inner.Y())) throw Error(ErrorCode::DomainMismatch, "i_Y does not start at Y");
    require_embedding(ix, "i_X");
    require_embedding(iy, "i_Y");
}

Relation extend_relation(const Extension& ix, const Extension& iy, const Relation& r) {
    return saturate(ix.target(), iy.target(), image_pairs(ix, iy, r));
}

Relation restrict_relation(const Extension& ix, const Extension& iy, const Relation& s) {
    Relation out(ix.source().size(), iy.source().size());
    for (Index x = 0; x < out.rows(); ++x)
        for (Index y = 0; y < out.cols(); ++y)
            if (s.test(ix(x), iy(y))) out.set(x, y);
    return out;
}

Relation extend_relation(const ExtensionContext& c) { return extend_relation(c.ix, c.iy, c.inner.r()); }
Relation restrict_relation(const ExtensionContext& c, const Relation& s) { return restrict_relation(c.ix, c.iy, s); }

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Vacuous: return "vacuous";
        case Verdict::Violated: return "VIOLATED";
        case Verdict::NotApplicable: return "n/a";
    }
    return "?";
}

bool PreservationReport::ok() const {
    for (const auto& c : clauses)
        if (c.verdict == Verdict::Violated) return false;
    return true;
}

const ClauseCheck* PreservationReport::find(const std::string& clause) const {
    for (const auto& c : clauses)
        if (c.clause == clause) return &c;
    return nullptr;
}

bool restriction_side_conditions(const ExtensionContext& c) {
    return preserves_meets(c.ix, c.inner.ex().image()) && preserves_joins(c.iy, c.inner.ey().image());
}

PreservationReport check_extension_preservation(const ExtensionContext& c, std::uint64_t seed) {
    PreservationReport rep;
    const auto& X2 = c.X2();
    const auto& Y2 = c.Y2();
    Relation rbar = extend_relation(c);
    ExtensionPolarity outer = c.outer(rbar);
    const int lin = coherence_level(c.inner);
    const int lout = coherence_level(outer);

    rep.clauses.push_back({"(1)", lout >= 0 ? Verdict::Holds : Verdict::Violated, "outer level " + level_name(lout)});

    // (2) forward always, backward iff (X,Y,R) is 0-coherent
    Relation back = restrict_relation(c, rbar);
    bool fwd = c.inner.r().subset_of(back);
    bool conv = back.subset_of(c.inner.r());
    bool zc = is_zero_coherent(c.inner.X(), c.inner.Y(), c.inner.r());
    rep.clauses.push_back({"(2) forward", fwd ? Verdict::Holds : Verdict::Violated, ""});
    rep.clauses.push_back({"(2) converse", conv == zc ? Verdict::Holds : Verdict::Violated,
                           std::string("converse ") + (conv ? "holds" : "fails") + ", 0-coherent " +
                               (zc ? "yes" : "no")});

    for (int n : {1, 2})
        rep.clauses.push_back(implication("(3) n=" + std::to_string(n), lin >= n, lout >= n));

    bool ext_ok = is_meet_extension(c.ix) && is_join_extension(c.iy);
    const bool hyp4 = is_galois(c.inner) && ext_ok;
    // C7/C8 carry over as stated; the composites need not be meet/join-extensions
    // unless i_X, i_Y keep the meets (joins) of base images
    rep.clauses.push_back(implication("(4) coherence", hyp4, lout >= 3));
    const bool side = restriction_side_conditions(c);
    std::string note;
    if (hyp4 && !side)
        note = (is_meet_extension(c.outer_ex()) && is_join_extension(c.outer_ey()))
                   ? "side conditions fail, composites still extensions"
                   : "side conditions fail, composite not a meet/join-extension";
    rep.clauses.push_back(implication("(4)", hyp4 && side, is_galois(outer), note));

    // (5) and (6) quantify over relations on X' x Y'
    Relation base = image_pairs(c.ix, c.iy, c.inner.r());
    const Index cells = X2.size() * Y2.size();
    const bool exhaustive = cells <= 12;
    std::vector<Relation> supers;
    if (exhaustive) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells); ++m) {
            Relation s = from_mask(X2.size(), Y2.size(), m);
            if (base.subset_of(s)) supers.push_back(std::move(s));
        }
    } else {
        std::mt19937_64 rng(seed);
        supers.push_back(rbar);
        supers.push_back(Relation::full(X2.size(), Y2.size()));
        supers.push_back(saturate(X2, Y2, rbar | r_l(c.outer_ex(), c.outer_ey())));
        for (int k = 0; k < 256; ++k) {
            Relation s = base | random_relation(X2.size(), Y2.size(), rng, 0.25 * (k % 4));
            supers.push_back(k % 2 ? saturate(X2, Y2, s) : s);
        }
    }
    const std::string how = exhaustive ? "exhaustive" : "sampled";

    {
        std::size_t seen = 0;
        std::string bad;
        for (const auto& s : supers) {
            if (!is_zero_coherent(X2, Y2, s)) continue;
            ++seen;
            if (!rbar.subset_of(s) && bad.empty()) bad = relation_text(s, X2.names(), Y2.names());
        }
        rep.clauses.push_back({"(5)", bad.empty() ? Verdict::Holds : Verdict::Violated,
                               how + ", " + std::to_string(seen) + " relations" + (bad.empty() ? "" : ", " + bad)});
    }

    rep.clauses.push_back({"(6) n=1", Verdict::NotApplicable, ""});
    for (int n : {2, 3}) {
        std::string clause = "(6) n=" + std::to_string(n);
        if (lout >= n) {
            rep.clauses.push_back({clause, Verdict::Vacuous, ""});
            continue;
        }
        std::string bad;
        for (const auto& s : supers) {
            if (!is_zero_coherent(X2, Y2, s)) continue;
            if (coherence_level(c.outer(s)) >= n) {
                bad = relation_text(s, X2.names(), Y2.names());
                break;
            }
        }
        rep.clauses.push_back({clause, bad.empty() ? Verdict::Holds : Verdict::Violated,
                               how + (bad.empty() ? "" : ", " + bad)});
    }

    bool minimal = extend_relation(c.ix, c.iy, r_l(c.inner.ex(), c.inner.ey())) == r_l(c.outer_ex(), c.outer_ey());
    rep.clauses.push_back({"minimal extension", minimal ? Verdict::Holds : Verdict::Violated, ""});
    return rep;
}

PreservationReport check_restriction_preservation(const ExtensionContext& c, const Relation& s) {
    PreservationReport rep;
    ExtensionPolarity outer = c.outer(s);
    ExtensionPolarity under = c.inner.with_relation(restrict_relation(c, s));
    const int lo = coherence_level(outer);
    const int lu = coherence_level(under);
    const bool side = restriction_side_conditions(c);

    rep.clauses.push_back(implication("rest (1)", is_zero_coherent(c.X2(), c.Y2(), s),
                                      is_zero_coherent(c.inner.X(), c.inner.Y(), under.r())));
    for (int n : {1, 2})
        rep.clauses.push_back(implication("rest (2) n=" + std::to_string(n), lo >= n, lu >= n));
    rep.clauses.push_back(implication("rest (3) n=3", side && lo >= 3, lu >= 3, side ? "" : "side conditions fail"));
    rep.clauses.push_back(
        implication("rest (3) galois", side && is_galois(outer), is_galois(under), side ? "" : "side conditions fail"));

    // converses run from the inner polarity to its extension
    const int li = coherence_level(c.inner);
    ExtensionPolarity ext = c.outer(extend_relation(c));
    const int le = coherence_level(ext);
    for (int n : {1, 2})
        rep.clauses.push_back(
            implication("converse (1) n=" + std::to_string(n), li >= 0 && le >= n, li >= n));
    rep.clauses.push_back(implication("converse (2) n=3", li >= 0 && side && le >= 3, li >= 3));
    rep.clauses.push_back(implication("converse (2) galois", li >= 0 && side && is_galois(ext), is_galois(c.inner)));
    return rep;
}

PhiResult phi_map(const ExtensionContext& c, const Relation& u) {
    Relation s = Relation(c.X2().size(), c.Y2().size());
    const Index nx2 = c.X2().size();
    if (u.rows() != nx2 + c.Y2().size() || u.cols() != u.rows())
        throw Error(ErrorCode::CarrierMismatch, "preorder is not on X' u Y'");
    for (Index x = 0; x < nx2; ++x)
        for (Index y = 0; y < c.Y2().size(); ++y)
            if (u.test(x, nx2 + y)) s.set(x, y);
    ExtensionPolarity outer = c.outer(s);
    if (auto chk = is_n_preorder(outer, u, 0); !chk.ok)
        throw Error(ErrorCode::NotZeroPreorder, "fails " + chk.clause + " " + chk.witness.str());

    const auto& in = c.inner;
    auto prime = [&](Index a) { return in.is_x(a) ? c.ix(a) : nx2 + c.iy(a - in.nx()); };
    PhiResult res;
    res.inner = Relation(in.n(), in.n());
    for (Index a = 0; a < in.n(); ++a)
        for (Index b = 0; b < in.n(); ++b)
            if (u.test(prime(a), prime(b))) res.inner.set(a, b);
    res.inner_rel = in.xy_block(res.inner);
    ensure(res.inner_rel == restrict_relation(c, s), "pullback block differs from restriction");

    ExtensionPolarity under = in.with_relation(res.inner_rel);
    res.inner_q = quotient(under.union_names(), res.inner);
    res.outer_q = quotient(outer.union_names(), u);
    std::vector<Index> vals(res.inner_q.members.size());
    for (Index k = 0; k < vals.size(); ++k) vals[k] = res.outer_q.cls[prime(res.inner_q.members[k].front())];
    res.phi = MonotoneMap(share(res.inner_q.poset), share(res.outer_q.poset), vals);
    ensure(res.phi.is_embedding(), "phi is not an order embedding");

    res.outer_grade = preorder_grade(outer, u);
    res.inner_grade = preorder_grade(under, res.inner);
    ensure(res.inner_grade >= std::min(res.outer_grade, 2), "grade lost under pullback");
    if (res.outer_grade >= 3 && restriction_side_conditions(c))
        ensure(res.inner_grade >= 3, "3-preorder lost under pullback despite side conditions");
    return res;
}

AdjunctionReport relation_lattice_adjunction(const Extension& ix, const Extension& iy, std::uint64_t seed) {
    AdjunctionReport rep;
    const Poset& X = ix.source();
    const Poset& Y = iy.source();
    const Poset& X2 = ix.target();
    const Poset& Y2 = iy.target();
    const Index lo_cells = X.size() * Y.size();
    const Index hi_cells = X2.size() * Y2.size();
    rep.exhaustive = lo_cells <= 12 && hi_cells <= 16;

    std::vector<Relation> L, M;
    std::mt19937_64 rng(seed);
    if (rep.exhaustive) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << lo_cells); ++m) L.push_back(from_mask(X.size(), Y.size(), m));
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << hi_cells); ++m) {
            Relation s = from_mask(X2.size(), Y2.size(), m);
            if (is_zero_coherent(X2, Y2, s)) M.push_back(std::move(s));
        }
    } else {
        for (int k = 0; k < 2000; ++k) L.push_back(random_relation(X.size(), Y.size(), rng, 0.1 + 0.2 * (k % 5)));
        for (int k = 0; k < 2000; ++k)
            M.push_back(saturate(X2, Y2, random_relation(X2.size(), Y2.size(), rng, 0.05 + 0.1 * (k % 5))));
    }
    rep.lower = L.size();
    rep.upper = M.size();

    auto fail = [&](const std::string& what) {
        if (rep.ok) rep.failure = what;
        rep.ok = false;
    };
    std::vector<Relation> over(L.size()), under(M.size());
    for (Index i = 0; i < L.size(); ++i) {
        over[i] = extend_relation(ix, iy, L[i]);
        if (!is_zero_coherent(X2, Y2, over[i])) fail("extension not 0-coherent");
        Relation unit = restrict_relation(ix, iy, over[i]);
        if (!L[i].subset_of(unit)) fail("unit: R not below its round trip");
        if ((unit == L[i]) != is_zero_coherent(X, Y, L[i])) fail("unit equality differs from 0-coherence");
    }
    for (Index j = 0; j < M.size(); ++j) {
        under[j] = restrict_relation(ix, iy, M[j]);
        if (!extend_relation(ix, iy, under[j]).subset_of(M[j])) fail("counit: round trip not below S");
    }
    auto check_pair = [&](Index i, Index j) {
        ++rep.pairs;
        if (over[i].subset_of(M[j]) != L[i].subset_of(under[j])) fail("adjunction fails on a pair");
    };
    if (static_cast<double>(L.size()) * static_cast<double>(M.size()) <= double(1 << 22)) {
        for (Index i = 0; i < L.size(); ++i)
            for (Index j = 0; j < M.size(); ++j) check_pair(i, j);
    } else {
        rep.exhaustive = false;
        std::uniform_int_distribution<Index> di(0, L.size() - 1), dj(0, M.size() - 1);
        for (int k = 0; k < (1 << 16); ++k) check_pair(di(rng), dj(rng));
    }
    return rep;
}

}  // namespace polab
