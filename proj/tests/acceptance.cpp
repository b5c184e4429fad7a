// One PASS/FAIL line per acceptance criterion. `acceptance --only N` runs one.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "polab/concept.hpp"
#include "polab/delta1.hpp"
#include "polab/evaluate.hpp"
#include "polab/laws.hpp"
#include "polab/oracle.hpp"

#ifndef POLAB_FIXTURE_DIR
#define POLAB_FIXTURE_DIR "fixtures"
#endif
#ifndef POLAB_CLI
#define POLAB_CLI "polab"
#endif

using namespace polab;
namespace fs = std::filesystem;

namespace {

struct Tally {
    std::size_t checks = 0, failures = 0;
    std::string first;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (!failures) first = what;
        ++failures;
    }
};

std::vector<fs::path> fixture_files() {
    std::vector<fs::path> v;
    for (auto& e : fs::directory_iterator(POLAB_FIXTURE_DIR))
        if (e.path().extension() == ".pol") v.push_back(e.path());
    std::sort(v.begin(), v.end());
    return v;
}

Document load(const std::string& stem) { return load_document(std::string(POLAB_FIXTURE_DIR) + "/" + stem + ".pol"); }

// every polarity declared in a fixture, tagged file:name
std::vector<std::pair<std::string, ExtensionPolarity>> fixture_polarities() {
    std::vector<std::pair<std::string, ExtensionPolarity>> out;
    for (auto& f : fixture_files()) {
        auto d = load_document(f.string());
        for (auto& [k, n] : d.order)
            if (k == "polarity") out.emplace_back(f.stem().string() + ":" + n, d.polarity(n));
    }
    return out;
}

ExtensionContext context_of(const Document& d, const std::string& name) {
    const auto& c = d.contexts.at(name);
    return ExtensionContext(d.polarity(c.inner), d.map(c.ix), d.map(c.iy));
}

// ---------------------------------------------------------------- 1
void c1_fixtures(Tally& t, std::string& info) {
    std::size_t rows = 0;
    for (auto& f : fixture_files()) {
        auto d = load_document(f.string());
        for (auto& r : run_expectations(d, f.filename().string())) {
            ++rows;
            t.expect(r.pass, r.file + ":" + std::to_string(r.line) + " " + r.label + " expected " + r.expected + " got " + r.actual);
            t.expect(!r.cite.empty(), r.file + ":" + std::to_string(r.line) + " has no citation");
        }
    }
    t.expect(rows >= 25, "only " + std::to_string(rows) + " expectations");
    info = std::to_string(rows) + " expectations over " + std::to_string(fixture_files().size()) + " fixtures";
}

// ---------------------------------------------------------------- 2
void c2_hierarchy(Tally& t, std::string& info) {
    EnumOptions o;
    o.max_carrier = 16;
    struct Case {
        const char* file;
        const char* pol;
        int level;
    };
    for (auto c : {Case{"fix_c", "C", 1}, Case{"fix_b", "B", 2}, Case{"fix_d", "D", 2}}) {
        auto e = load(c.file).polarity(c.pol);
        std::string tag = std::string(c.file) + " ";
        t.expect(coherence_level(e) == c.level, tag + "level by conditions");
        t.expect(exists_n_preorder(e, c.level, o), tag + "no preorder at its level");
        t.expect(!exists_n_preorder(e, c.level + 1, o), tag + "a preorder one level up exists");
        t.expect(is_n_preorder(e, canonical_relation(e, c.level), c.level).ok, tag + "canonical relation fails its level");
    }
    info = "C: 1 not 2; B, D: 2 not 3 (conditions and pruned enumeration)";
}

// ---------------------------------------------------------------- 3
void c3_equivalences(Tally& t, std::string& info) {
    Rng rng(3003);
    std::size_t rows = 0;
    for (int i = 0; i < 500; ++i) {
        auto e = random_polarity(rng, 6);
        for (auto& r : coherence_equivalences(e)) {
            ++rows;
            t.expect(r.consistent(), "instance " + std::to_string(i) + " row n=" + std::to_string(r.n));
        }
    }
    info = "500 polarities, " + std::to_string(rows) + " rows (coherent / canonical / exists / minimal / intersections)";
}

// ---------------------------------------------------------------- 4
void galois_checks(Tally& t, const ExtensionPolarity& e, const std::string& tag) {
    Relation g;
    try {
        g = unique_3preorder(e);
    } catch (const std::exception& x) {
        t.expect(false, tag + ": " + x.what());
        return;
    }
    t.expect(is_n_preorder(e, g, 3).ok, tag + " R-hat-g not a 3-preorder");
    t.expect(g == (r_zero(e) | embed_yx(e, z_prime_yx(e))), tag + " R-hat-g != R0 u Z'");
    for (Index a = 0; a < e.n(); ++a)
        for (Index b = 0; b < e.n(); ++b) {
            if (g.test(a, b)) continue;
            Relation big = g;
            big.set(a, b);
            big.close_transitive();
            t.expect(!is_n_preorder(e, big, 3).ok, tag + " enlargement " + e.union_name(a) + "<" + e.union_name(b) + " survives");
        }
    auto im = intermediate_structure(e, g);
    t.expect(preserves_meets(im.iota_x), tag + " iota_X loses a meet");
    t.expect(preserves_joins(im.iota_y), tag + " iota_Y loses a join");
    t.expect(im.iota_x.is_embedding() && im.iota_y.is_embedding(), tag + " iota not an embedding");
    // iota_X[X] is meet-generated and iota_Y[Y] join-generated by gamma[P]
    const Poset& xy = *im.poset;
    BitSet gp = im.gamma.image();
    for (Index x = 0; x < e.nx(); ++x) {
        Index z = im.iota_x(x);
        t.expect(xy.meet(xy.up(z) & gp) == z, tag + " iota_X(x) is not a meet of base images");
    }
    for (Index y = 0; y < e.ny(); ++y) {
        Index z = im.iota_y(y);
        t.expect(xy.join(xy.down(z) & gp) == z, tag + " iota_Y(y) is not a join of base images");
    }
}

void c4_galois(Tally& t, std::string& info) {
    std::size_t fx = 0;
    for (auto& [tag, e] : fixture_polarities())
        if (is_galois(e)) {
            ++fx;
            galois_checks(t, e, tag);
        }
    Rng rng(4004);
    std::size_t rnd = 0;
    for (int tries = 0; rnd < 200 && tries < 2000; ++tries) {
        auto g = random_galois(rng, 1 + tries % 4);
        if (!g) continue;
        galois_checks(t, *g, "random " + std::to_string(rnd));
        ++rnd;
    }
    t.expect(rnd == 200, "only " + std::to_string(rnd) + " random Galois instances");
    info = std::to_string(fx) + " fixture + " + std::to_string(rnd) + " random Galois instances";
}

// ---------------------------------------------------------------- 5
void concept_checks(Tally& t, const ExtensionPolarity& e, const std::string& tag) {
    auto cl = concept_lattice(e);
    t.expect(cl.closed == naive_closed_sets(e), tag + " closed sets differ from brute force");
    PropOrder po;
    try {
        po = prop_order_preorder(e);
    } catch (const std::exception& x) {
        t.expect(false, tag + ": " + x.what());
        return;
    }
    auto set_of = [&](Index u) { return e.is_x(u) ? xi(e, u) : upsilon(e, u - e.nx()); };
    for (Index a = 0; a < e.n(); ++a)
        for (Index b = 0; b < e.n(); ++b)
            t.expect(po.order.test(a, b) == set_of(a).subset_of(set_of(b)),
                     tag + " order and inclusion disagree at " + e.union_name(a) + "," + e.union_name(b));
}

void c5_concept(Tally& t, std::string& info) {
    std::size_t fx = 0, gal = 0;
    for (auto& [tag, e] : fixture_polarities()) {
        ++fx;
        concept_checks(t, e, tag);
        if (is_galois(e)) {
            ++gal;
            auto zz = z_doubleprime(e, macneille(e.ex().target_ref()), macneille(e.ey().target_ref()));
            t.expect(zz == z_prime_yx(e), tag + " Z'' != Z'");
        }
    }
    Rng rng(5005);
    std::size_t rnd = 0;
    while (rnd < 200) {
        auto e = random_polarity(rng, 12);
        if (e.nx() > 8) continue;
        concept_checks(t, e, "random " + std::to_string(rnd));
        ++rnd;
    }
    std::size_t rg = 0;
    for (int k = 0; k < 100; ++k) {
        auto g = random_galois(rng, 1 + k % 4);
        if (!g) continue;
        ++rg;
        auto zz = z_doubleprime(*g, macneille(g->ex().target_ref()), macneille(g->ey().target_ref()));
        t.expect(zz == z_prime_yx(*g), "random Galois " + std::to_string(k) + " Z'' != Z'");
    }
    info = std::to_string(fx) + " fixture + " + std::to_string(rnd) + " random polarities; Z'=Z'' on " +
           std::to_string(gal + rg) + " Galois instances";
}

// ---------------------------------------------------------------- 6
void context_checks(Tally& t, const ExtensionContext& c, const std::string& tag) {
    auto rep = check_extension_preservation(c);
    for (auto& cl : rep.clauses) t.expect(cl.verdict != Verdict::Violated, tag + " clause " + cl.clause + " " + cl.detail);
    auto rr = check_restriction_preservation(c, extend_relation(c));
    for (auto& cl : rr.clauses) t.expect(cl.verdict != Verdict::Violated, tag + " clause " + cl.clause + " " + cl.detail);
    if (c.inner.nx() * c.inner.ny() <= 12) {
        auto adj = relation_lattice_adjunction(c.ix, c.iy);
        t.expect(adj.ok, tag + " adjunction: " + adj.failure);
    }
}

void c6_extension(Tally& t, std::string& info) {
    std::size_t fx = 0;
    for (auto stem : {"fix_g", "fix_h", "fix_i"}) {
        auto d = load(stem);
        auto c = context_of(d, "K");
        context_checks(t, c, stem);
        ++fx;
        for (auto& [k, n] : d.order)
            if (k == "relation") {
                auto rr = check_restriction_preservation(c, d.relations.at(n).rel);
                for (auto& cl : rr.clauses)
                    t.expect(cl.verdict != Verdict::Violated, std::string(stem) + " " + n + " clause " + cl.clause);
            }
    }
    for (auto& [tag, e] : fixture_polarities()) {
        if (e.n() > 10) continue;
        ExtensionContext mc(e, macneille(e.ex().target_ref()), macneille(e.ey().target_ref()));
        context_checks(t, mc, tag + " (MacNeille)");
        ExtensionContext ic(e, MonotoneMap::identity(e.ex().target_ref()), MonotoneMap::identity(e.ey().target_ref()));
        context_checks(t, ic, tag + " (identity)");
        fx += 2;
    }
    Rng rng(6006);
    for (int i = 0; i < 200; ++i) context_checks(t, random_context(rng, 5), "random " + std::to_string(i));
    info = std::to_string(fx) + " fixture contexts + 200 random contexts";
}

// ---------------------------------------------------------------- 7
void c7_morphisms(Tally& t, std::string& info) {
    Rng rng(7007);
    std::vector<GaloisRef> objs;
    {
        auto j = load("fix_j");
        objs.push_back(make_galois(j.polarity("G")));
        objs.push_back(make_galois(j.polarity("G2")));
    }
    while (objs.size() < 12) {
        auto g = random_galois(rng, 1 + objs.size() % 3);
        if (g && g->n() <= 8) objs.push_back(make_galois(*g));
    }
    std::vector<PolarityMorphism> corpus;
    std::size_t bij = 0;
    for (std::size_t a = 0; a < objs.size(); ++a)
        for (std::size_t b = 0; b < objs.size(); ++b) {
            auto hs = enumerate_morphisms(objs[a], objs[b], 3000);
            auto ps = enumerate_galois_stable(objs[a], objs[b], 3000);
            if (hs.size() < 3000 && ps.size() < 3000) {
                ++bij;
                t.expect(hs.size() == ps.size(), "morphisms and Galois-stable maps differ in number");
                for (auto& p : ps) {
                    auto h = h_of(p);
                    t.expect(std::find(hs.begin(), hs.end(), h) != hs.end(), "h_psi is not among the morphisms");
                }
            }
            for (std::size_t k = 0; k < hs.size() && k < 10; ++k) corpus.push_back(hs[k]);
        }
    {
        auto j = load("fix_j");
        const auto& m = j.morphisms.at("h");
        corpus.push_back(validate_morphism(objs[0], objs[1], j.map(m.hx), j.map(m.hp), j.map(m.hy)));
    }
    for (auto& h : corpus) {
        auto p = psi_of(h);
        t.expect(roundtrip(h), "h != h_{psi_h}");
        t.expect(roundtrip(p), "psi != psi_{h_psi}");
        t.expect(p.psi.is_embedding() == h.embedding, "embedding equivalence fails");
        t.expect(compose(identity_morphism(h.dst), h) == h && compose(h, identity_morphism(h.src)) == h, "identity law fails");
    }
    std::size_t comps = 0;
    for (auto& h1 : corpus)
        for (auto& h2 : corpus) {
            if (h1.dst != h2.src) continue;
            auto c = compose(h2, h1);
            ++comps;
            t.expect(psi_of(c) == compose(psi_of(h2), psi_of(h1)), "psi of a composite");
            t.expect(roundtrip(c), "round trip of a composite");
            for (auto& h3 : corpus) {
                if (h2.dst != h3.src || comps > 4000) continue;
                t.expect(compose(h3, compose(h2, h1)) == compose(compose(h3, h2), h1), "associativity");
            }
        }
    t.expect(corpus.size() >= 50, "corpus has only " + std::to_string(corpus.size()) + " morphisms");
    info = std::to_string(corpus.size()) + " morphisms, " + std::to_string(comps) + " composites, " + std::to_string(bij) +
           " hom-sets matched against Galois-stable maps";
}

// ---------------------------------------------------------------- 8
void c8_delta1(Tally& t, std::string& info) {
    Rng rng(8008);
    std::size_t complete = 0;
    for (int i = 0; i < 100; ++i) {
        auto p = random_poset(rng, 1 + i % 7, "p");
        auto K = make_galois(principal_polarity(p));
        auto g = gamma_on_objects(K);
        auto n = macneille(p);
        std::string tag = "P#" + std::to_string(i);
        t.expect(extensions_isomorphic(g, n, true).has_value(), tag + " Gamma(K) is not N(P) over P");
        t.expect(counit_iso(g).g.is_isomorphism(), tag + " counit at Gamma(K)");
        t.expect(counit_iso(n).g.is_isomorphism(), tag + " counit at N(P)");
        auto dn = delta_on_objects(n);
        auto u = unit(dn.g);
        t.expect(u.complete && u.eta.isomorphism, tag + " unit at a complete polarity is not an iso");
        if (u.isos_over_p) {
            ++complete;
            t.expect(*u.isos_over_p == 1, tag + " isomorphism over P is not unique");
        }
        auto uk = unit(K);
        t.expect(uk.eta.embedding, tag + " unit is not an embedding");
        t.expect(gamma_on_morphisms(identity_morphism(K)) == identity_delta1(g), tag + " Gamma(id)");
        t.expect(delta_on_morphisms(identity_delta1(n)).hx.is_isomorphism(), tag + " Delta(id)");
    }
    // morphism triples between small Galois polarities
    std::vector<GaloisRef> objs;
    while (objs.size() < 6) {
        auto g = random_galois(rng, 1 + objs.size() % 2);
        if (g && g->n() <= 6) objs.push_back(make_galois(*g));
    }
    std::size_t triples = 0, squares = 0;
    for (auto& a : objs)
        for (auto& b : objs) {
            auto ab = enumerate_morphisms(a, b, 40);
            for (auto& h : ab) {
                ++squares;
                t.expect(naturality(h), "naturality square");
                auto d = gamma_on_objects(b);
                auto med = adjunction_mediator(compose(unit(b).eta, h), d);
                t.expect(!med.candidates || *med.candidates == 1, "mediator not unique");
            }
            for (auto& c : objs) {
                if (triples > 300) break;
                auto bc = enumerate_morphisms(b, c, 10);
                for (std::size_t i = 0; i < ab.size() && i < 5; ++i)
                    for (std::size_t j = 0; j < bc.size() && j < 5; ++j) {
                        ++triples;
                        auto lhs = gamma_on_morphisms(compose(bc[j], ab[i]));
                        auto rhs = compose(gamma_on_morphisms(bc[j]), gamma_on_morphisms(ab[i]));
                        t.expect(lhs == rhs, "Gamma does not preserve composition");
                    }
            }
        }
    info = "100 random P (Gamma(K) = N(P)); " + std::to_string(complete) + " unit-uniqueness counts; " +
           std::to_string(squares) + " naturality squares; " + std::to_string(triples) + " composable pairs";
}

// ---------------------------------------------------------------- 9
void c9_oracles(Tally& t, std::string& info) {
    Rng rng(9009);
    std::size_t n = 0, p4 = 0, maxp = 0;
    while (n < 1000) {
        auto e = random_polarity(rng, 18);
        if (e.P().size() > 8) continue;
        ++n;
        maxp = std::max<std::size_t>(maxp, e.P().size());
        for (Cond c : all_conditions)
            t.expect(naive_condition(e, c) == check_condition(e, c).holds, std::string("reduced ") + to_string(c));
        t.expect(naive_z_s(e) == z_s(e), "Z_S");
        t.expect(naive_z_t(e) == z_t(e), "Z_T");
        for (const Relation& u : {r_zero(e), r_hat_m(e), r_hat_g(e)}) {
            if (!u.transitive() || !is_n_preorder(e, u, 2).ok) continue;
            ++p4;
            t.expect(naive_p4(e, u) == is_n_preorder(e, u, 3).ok || !naive_p5(e, u), "P4");
            t.expect((naive_p4(e, u) && naive_p5(e, u)) == is_n_preorder(e, u, 3).ok, "P4/P5");
        }
    }
    info = "1000 instances, |P| up to " + std::to_string(maxp) + ", " + std::to_string(p4) + " P4/P5 comparisons";
}

// ---------------------------------------------------------------- 10
int run(const std::string& cmd, std::string& out) {
    auto tmp = fs::temp_directory_path() / ("polab_accept_" + std::to_string(::getpid()) + ".txt");
    int rc = std::system((cmd + " > " + tmp.string() + " 2>&1").c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    fs::remove(tmp);
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

void c10_cli(Tally& t, std::string& info) {
    std::string cli = POLAB_CLI, out;
    int rc = run(cli + " fixtures", out);
    t.expect(rc == 0, "fixtures exit " + std::to_string(rc));
    t.expect(out.find("FAIL") == std::string::npos, "fixtures table shows a failure");

    rc = run(cli + " fuzz --seed 0 --size 5 --iters 1000", out);
    t.expect(rc == 0, "fuzz exit " + std::to_string(rc) + ": " + out.substr(0, 200));

    auto dir = fs::temp_directory_path() / ("polab_corrupt_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (auto& f : fixture_files()) fs::copy_file(f, dir / f.filename());
    {
        std::ifstream in(dir / "fix_c.pol");
        std::stringstream ss;
        ss << in.rdbuf();
        std::string s = ss.str();
        auto at = s.find("level C = 1");
        t.expect(at != std::string::npos, "corruption target missing");
        if (at != std::string::npos) s.replace(at, 11, "level C = 2");
        std::ofstream(dir / "fix_c.pol") << s;
    }
    rc = run(cli + " fixtures --dir " + dir.string(), out);
    fs::remove_all(dir);
    t.expect(rc == 1, "corrupted fixtures exit " + std::to_string(rc));
    t.expect(out.find("FAILED fix_c.pol:") != std::string::npos && out.find("level C expected 2 got 1") != std::string::npos,
             "failure line does not name the assertion");

    rc = run(cli + " check", out);
    t.expect(rc == 2, "usage error exit " + std::to_string(rc));
    info = "fixtures 0, fuzz 0, corrupted fixture 1 naming 'level C', usage 2";
}

struct Criterion {
    int id;
    const char* name;
    double budget;
    void (*fn)(Tally&, std::string&);
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--only") only = std::atoi(argv[i + 1]);
    const Criterion all[] = {
        {1, "fixture regression", 5, c1_fixtures},     {2, "hierarchy strictness", 60, c2_hierarchy},
        {3, "coherence equivalences", 120, c3_equivalences}, {4, "Galois uniqueness", 60, c4_galois},
        {5, "concept-lattice agreement", 60, c5_concept}, {6, "extension/restriction laws", 120, c6_extension},
        {7, "morphism round trips", 30, c7_morphisms},  {8, "Delta1 correspondence", 120, c8_delta1},
        {9, "differential oracles", 120, c9_oracles},   {10, "CLI contract", 120, c10_cli},
    };
    bool ok = true;
    for (auto& c : all) {
        if (only && c.id != only) continue;
        Tally t;
        std::string info;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.fn(t, info);
        } catch (const std::exception& x) {
            t.expect(false, std::string("exception: ") + x.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = t.failures == 0 && secs < c.budget;
        ok = ok && pass;
        std::printf("%s criterion %d (%s): %s; %zu checks, %.2fs of %.0fs\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    info.c_str(), t.checks, secs, c.budget);
        if (t.failures) std::printf("     %zu failed, first: %s\n", t.failures, t.first.c_str());
        if (secs >= c.budget) std::printf("     over budget\n");
        std::fflush(stdout);
    }
    return ok ? 0 : 1;
}
