#include "polab/laws.hpp"

#include <random>
#include <sstream>

#include "polab/concept.hpp"
#include "polab/delta1.hpp"
#include "polab/oracle.hpp"

namespace polab {

const std::vector<std::string>& law_names() {
    static const std::vector<std::string> names{"conditions", "hierarchy", "galois", "concept",
                                                "completion", "morphism",  "extension"};
    return names;
}

namespace {

struct Fail {
    std::string detail;
};

void need(bool c, const std::string& what) {
    if (!c) throw Fail{what};
}

void law_conditions(const ExtensionPolarity& e) {
    if (e.P().size() > 10) return;
    for (Cond c : all_conditions)
        need(naive_condition(e, c) == check_condition(e, c).holds, std::string("reduced ") + to_string(c) + " disagrees with naive");
    // C1..C6 plus a join-extension already give C7 (dually C8)
    auto rep = check_coherence(e);
    if (rep.level >= 2) {
        if (rep.join_ext) need(rep[Cond::C7].holds, "2-coherent with a join-extension but C7 fails");
        if (rep.meet_ext) need(rep[Cond::C8].holds, "2-coherent with a meet-extension but C8 fails");
    }
    need(naive_z_s(e) == z_s(e), "Z_S disagrees with naive");
    need(naive_z_t(e) == z_t(e), "Z_T disagrees with naive");
    for (const Relation& u : {r_zero(e), r_hat_m(e), r_hat_g(e)}) {
        if (!u.transitive() || !is_n_preorder(e, u, 2).ok) continue;
        need((naive_p4(e, u) && naive_p5(e, u)) == is_n_preorder(e, u, 3).ok, "P4/P5 disagree with naive");
    }
}

void law_hierarchy(const ExtensionPolarity& e) {
    if (e.n() > max_carrier_default()) return;
    for (auto& row : coherence_equivalences(e))
        need(row.consistent(), "equivalence row n=" + std::to_string(row.n) + " inconsistent");
}

void law_galois(const ExtensionPolarity& e) {
    if (!is_galois(e)) return;
    Relation g = unique_3preorder(e);
    need(g == (r_zero(e) | embed_yx(e, z_prime_yx(e))), "R-hat-g differs from R0 u Z'_YX");
    for (Index a = 0; a < e.n(); ++a)
        for (Index b = 0; b < e.n(); ++b) {
            if (g.test(a, b)) continue;
            Relation bigger = g;
            bigger.set(a, b);
            bigger.close_transitive();
            need(!is_n_preorder(e, bigger, 3).ok, "enlargement by " + e.union_name(a) + "<" + e.union_name(b) + " is still a 3-preorder");
        }
    auto mx = macneille(e.ex().target_ref());
    auto my = macneille(e.ey().target_ref());
    need(z_doubleprime(e, mx, my) == z_prime_yx(e), "Z'' differs from Z'");
}

void law_concept(const ExtensionPolarity& e) {
    if (e.nx() > 12) return;
    need(concept_lattice(e).closed == naive_closed_sets(e), "closed sets differ from naive");
    prop_order_preorder(e);
}

void law_completion(const ExtensionPolarity& e) {
    if (!is_galois(e)) return;
    auto G = make_galois(e);
    auto u = unit(G);
    need(u.eta.embedding, "unit is not an embedding");
    need(unit_extension(G).contained, "R-bar not inside R_D");
    auto d = gamma_on_objects(G);
    need(is_delta1(d), "Gamma(G) is not a Delta1-completion");
    counit_iso(d);
    auto id = identity_morphism(G);
    need(gamma_on_morphisms(id) == identity_delta1(d), "Gamma does not preserve identities");
    need(naturality(id), "naturality fails for the identity");
    need(naturality(u.eta), "naturality fails for the unit");
}

void law_morphism(const ExtensionPolarity& e) {
    if (!is_galois(e)) return;
    auto G = make_galois(e);
    auto hs = enumerate_morphisms(G, G, 400);
    for (auto& h : hs) {
        need(roundtrip(h), "h != h_psi");
        auto p = psi_of(h);
        need(roundtrip(p), "psi != psi_h");
        need(p.psi.is_embedding() == h.embedding, "embedding equivalence fails");
    }
    for (std::size_t i = 0; i < hs.size() && i < 12; ++i)
        for (std::size_t j = 0; j < hs.size() && j < 12; ++j) {
            auto hh = compose(hs[i], hs[j]);
            need(psi_of(hh) == compose(psi_of(hs[i]), psi_of(hs[j])), "psi does not respect composition");
        }
    auto ps = enumerate_galois_stable(G, G, 400);
    if (hs.size() < 400 && ps.size() < 400) need(hs.size() == ps.size(), "morphisms and Galois-stable maps differ in number");
}

using LawFn = void (*)(const ExtensionPolarity&);
LawFn law_fn(const std::string& law) {
    if (law == "conditions") return law_conditions;
    if (law == "hierarchy") return law_hierarchy;
    if (law == "galois") return law_galois;
    if (law == "concept") return law_concept;
    if (law == "completion") return law_completion;
    if (law == "morphism") return law_morphism;
    return nullptr;
}

std::optional<std::string> run_law(const ExtensionPolarity& e, const std::string& law) {
    try {
        law_fn(law)(e);
    } catch (const Fail& f) {
        return f.detail;
    } catch (const std::exception& x) {
        return std::string("unexpected error: ") + x.what();
    }
    return std::nullopt;
}

void add_poset(Document& d, const std::string& name, const PosetRef& p) {
    d.posets[name] = p;
    d.order.emplace_back("poset", name);
}
void add_map(Document& d, const std::string& name, const MonotoneMap& m, const std::string& from, const std::string& to) {
    d.maps[name] = m;
    d.map_decls[name] = MapDecl{from, to};
    d.order.emplace_back("map", name);
}
void add_polarity(Document& d, const ExtensionPolarity& e, const std::string& name) {
    add_poset(d, "P", e.base_ref());
    add_poset(d, "X", e.ex().target_ref());
    add_poset(d, "Y", e.ey().target_ref());
    add_map(d, "eX", e.ex(), "P", "X");
    add_map(d, "eY", e.ey(), "P", "Y");
    d.polarities[name] = e;
    PolarityDecl pd;
    pd.ex = "eX";
    pd.ey = "eY";
    d.polarity_decls[name] = pd;
    d.order.emplace_back("polarity", name);
}

}  // namespace

Document document_of(const ExtensionPolarity& e, const std::string& name) {
    Document d;
    add_polarity(d, e, name);
    return d;
}

Document document_of(const ExtensionContext& c, const std::string& name) {
    Document d;
    add_polarity(d, c.inner, "E");
    add_poset(d, "X2", c.ix.target_ref());
    add_poset(d, "Y2", c.iy.target_ref());
    add_map(d, "iX", c.ix, "X", "X2");
    add_map(d, "iY", c.iy, "Y", "Y2");
    d.contexts[name] = ContextDecl{"E", "iX", "iY"};
    d.order.emplace_back("context", name);
    return d;
}

std::optional<LawViolation> check_polarity_laws(const ExtensionPolarity& e, const std::set<std::string>& laws) {
    for (auto& law : law_names()) {
        if (law == "extension" || (!laws.empty() && !laws.count(law))) continue;
        if (auto f = run_law(e, law)) return LawViolation{law, *f, write_document(document_of(e))};
    }
    return std::nullopt;
}

std::optional<LawViolation> check_context_laws(const ExtensionContext& c) {
    std::string detail;
    try {
        auto rep = check_extension_preservation(c);
        for (auto& cl : rep.clauses)
            if (cl.verdict == Verdict::Violated) detail = "clause " + cl.clause + ": " + cl.detail;
        if (detail.empty()) {
            Relation s = extend_relation(c);
            auto rr = check_restriction_preservation(c, s);
            for (auto& cl : rr.clauses)
                if (cl.verdict == Verdict::Violated) detail = "clause " + cl.clause + ": " + cl.detail;
        }
        if (detail.empty() && c.inner.nx() * c.inner.ny() <= 12) {
            auto adj = relation_lattice_adjunction(c.ix, c.iy);
            if (!adj.ok) detail = "relation-lattice adjunction: " + adj.failure;
        }
    } catch (const std::exception& x) {
        detail = std::string("unexpected error: ") + x.what();
    }
    if (detail.empty()) return std::nullopt;
    return LawViolation{"extension", detail, write_document(document_of(c))};
}

ExtensionPolarity shrink_counterexample(const ExtensionPolarity& e, const std::string& law) {
    if (!law_fn(law)) return e;
    ExtensionPolarity cur = e;
    Relation floor = r_l(e.ex(), e.ey());
    for (bool progress = true; progress;) {
        progress = false;
        for (auto [x, y] : cur.r().pairs()) {
            if (floor.test(x, y)) continue;
            Relation r = cur.r();
            r.set(x, y, false);
            auto cand = cur.with_relation(r);
            if (run_law(cand, law)) {
                cur = cand;
                progress = true;
                break;
            }
        }
    }
    return cur;
}

FuzzResult run_fuzz(const FuzzOptions& opt) {
    FuzzResult res;
    auto wants = [&](const std::string& l) { return opt.laws.empty() || opt.laws.count(l); };
    for (std::size_t i = 0; i < opt.iters; ++i) {
        Rng rng(opt.seed * 1000003ULL + i);
        res.iterations = i + 1;
        auto fail = [&](LawViolation v) {
            res.violation = std::move(v);
            res.failed_iter = i;
            return res;
        };
        auto e = random_polarity(rng, opt.size);
        if (auto v = check_polarity_laws(e, opt.laws)) {
            auto small = shrink_counterexample(e, v->law);
            if (auto w = check_polarity_laws(small, {v->law})) return fail(*w);
            return fail(*v);
        }
        Index base = std::max<Index>(1, (opt.size + 1) / 3);
        if (auto g = random_galois(rng, base); g && g->n() <= 2 * opt.size) {
            ++res.galois;
            if (auto v = check_polarity_laws(*g, opt.laws)) return fail(*v);
        }
        if (wants("extension")) {
            auto c = random_context(rng, std::max<Index>(2, opt.size - 2));
            ++res.contexts;
            if (auto v = check_context_laws(c)) return fail(*v);
        }
    }
    return res;
}

}  // namespace polab
