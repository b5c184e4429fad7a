#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "polab/concept.hpp"
#include "polab/delta1.hpp"
#include "polab/evaluate.hpp"
#include "polab/laws.hpp"

#ifndef POLAB_FIXTURE_DIR
#define POLAB_FIXTURE_DIR "fixtures"
#endif

using namespace polab;
namespace fs = std::filesystem;

namespace {

// thrown for bad input; main maps it to exit 2
struct Usage {
    std::string msg;
};

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string pick(const Document& d, const std::string& kind, const std::string& want) {
    if (!want.empty()) {
        for (auto& [k, n] : d.order)
            if (k == kind && n == want) return n;
        throw Usage{"no " + kind + " named '" + want + "'"};
    }
    for (auto& [k, n] : d.order)
        if (k == kind) return n;
    throw Usage{"document declares no " + kind};
}

// names the parser accepts
Poset plain_names(const Poset& p, const std::string& prefix) {
    std::vector<std::string> names;
    for (Index i = 0; i < p.size(); ++i) names.push_back(prefix + std::to_string(i));
    return p.renamed(names);
}

int cmd_check(const Document& d, const std::string& name, const std::string& format) {
    std::vector<std::string> names;
    if (!name.empty()) names.push_back(pick(d, "polarity", name));
    else
        for (auto& [k, n] : d.order)
            if (k == "polarity") names.push_back(n);
    if (names.empty()) throw Usage{"document declares no polarity"};
    bool tsv = format == "tsv";
    if (tsv) std::cout << "polarity\titem\tverdict\twitness\n";
    for (auto& n : names) {
        const auto& e = d.polarity(n);
        auto rep = check_coherence(e);
        if (tsv) {
            std::cout << n << "\tlevel\t" << level_name(rep.level) << "\t\n";
            for (Cond c : all_conditions) {
                auto& r = rep[c];
                std::cout << n << "\t" << to_string(c) << "\t" << (r.holds ? "PASS" : "FAIL") << "\t" << r.witness.str() << "\n";
            }
            std::cout << n << "\tmeet_ext\t" << yn(rep.meet_ext) << "\t\n" << n << "\tjoin_ext\t" << yn(rep.join_ext) << "\t\n"
                      << n << "\tgalois\t" << yn(rep.galois) << "\t\n" << n << "\tentangled\t" << yn(rep.entangled) << "\t\n";
            continue;
        }
        std::cout << n << ": level=" << level_name(rep.level);
        for (Cond c : all_conditions)
            if (!rep[c].holds && static_cast<int>(c) < 8) {
                std::cout << ", " << to_string(c) << " FAIL witness=(" << rep[c].witness.str() << ")";
                break;
            }
        std::cout << "\n  galois=" << yn(rep.galois) << " entangled=" << yn(rep.entangled)
                  << " meet_ext=" << yn(rep.meet_ext) << " join_ext=" << yn(rep.join_ext) << "\n";
        for (Cond c : all_conditions) {
            auto& r = rep[c];
            std::cout << "  " << to_string(c) << " " << (r.holds ? "PASS" : "FAIL");
            if (!r.holds) std::cout << "  " << r.witness.str();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_preorder(const Document& d, const std::string& name, const std::string& kind, bool quot, bool dot) {
    auto pn = pick(d, "polarity", name);
    const auto& e = d.polarity(pn);
    Relation u;
    if (kind == "r0") u = r_zero(e);
    else if (kind == "rm") u = r_hat_m(e);
    else if (kind == "rg") u = r_hat_g(e);
    else u = r_zero(e.with_relation(r_l(e.ex(), e.ey())));
    const auto& ctx = kind == "rl" ? e.with_relation(r_l(e.ex(), e.ey())) : e;
    bool pre = u.reflexive() && u.transitive();
    if (!quot && !dot) {
        Relation strict = u;
        for (Index i = 0; i < strict.rows(); ++i) strict.set(i, i, false);
        std::cout << "# " << kind << " on " << pn << ": preorder=" << yn(pre);
        if (pre) std::cout << " grade=" << level_name(preorder_grade(ctx, u));
        std::cout << "\npreorder " << kind << " {\n  on " << pn << ";\n";
        if (strict.count()) std::cout << "  le " << relation_text(strict, e.union_names(), e.union_names(), "<") << ";\n";
        std::cout << "}\n";
        return 0;
    }
    if (!pre) {
        std::cerr << kind << " on " << pn << " is not transitive, no quotient\n";
        return 1;
    }
    auto q = quotient(e.union_names(), u);
    if (dot) {
        BitSet base(q.poset.size());
        for (Index p = 0; p < e.P().size(); ++p) {
            base.set(q.cls[e.ux(e.ex()(p))]);
            base.set(q.cls[e.uy(e.ey()(p))]);
        }
        std::cout << to_dot(q.poset, pn + "/" + kind, base);
        return 0;
    }
    for (Index k = 0; k < q.poset.size(); ++k) std::cout << "class " << k << ": " << q.poset.name(k) << "\n";
    auto c = q.poset.covers();
    std::cout << "covers:";
    for (auto [a, b] : c.pairs()) std::cout << " " << a << "<" << b;
    std::cout << "\n";
    return 0;
}

int cmd_complete(const Document& d, const std::string& name, bool dot) {
    auto pn = pick(d, "polarity", name);
    GaloisRef G;
    try {
        G = make_galois(d.polarity(pn));
    } catch (const Error& x) {
        std::cerr << pn << ": " << x.what() << "\n";
        return 1;
    }
    auto g = gamma_on_objects(G);
    if (dot) {
        std::cout << to_dot(g.target(), pn + "/gamma", g.image());
        return 0;
    }
    auto D = share(plain_names(g.target(), "d"));
    std::cout << "# Delta1-completion generated by " << pn << ", " << D->size() << " elements\n";
    for (Index i = 0; i < D->size(); ++i) std::cout << "# " << D->name(i) << " = " << g.target().name(i) << "\n";
    Document out;
    out.posets["P"] = g.source_ref();
    out.posets["D"] = D;
    out.maps["d"] = MonotoneMap(g.source_ref(), D, g.values());
    out.map_decls["d"] = MapDecl{"P", "D"};
    out.order = {{"poset", "P"}, {"poset", "D"}, {"map", "d"}};
    std::cout << write_document(out);
    return 0;
}

int cmd_decompose(const Document& d, const std::string& name) {
    std::string mn = name;
    if (mn.empty()) {
        for (auto& [k, n] : d.order) {
            if (k != "map") continue;
            try {
                require_delta1(d.map(n));
                mn = n;
                break;
            } catch (const Error&) {
            }
        }
        if (mn.empty()) throw Usage{"no map in the document is a Delta1-completion"};
    } else {
        mn = pick(d, "map", name);
    }
    const auto& m = d.map(mn);
    try {
        require_delta1(m);
    } catch (const Error& x) {
        std::cerr << mn << ": " << x.what() << "\n";
        return 1;
    }
    auto gp = delta_on_objects(m);
    const auto& pol = gp.g->pol;
    std::cout << "# X_D: meet-closure of the base image, " << pol.nx() << " elements\n"
              << "# Y_D: join-closure of the base image, " << pol.ny() << " elements\n";
    std::cout << "# counit: " << (counit_iso(m).g.is_isomorphism() ? "isomorphism" : "NOT an isomorphism") << "\n";
    std::cout << write_document(document_of(pol, "D_" + mn));
    return 0;
}

int cmd_concept(const Document& d, const std::string& name, bool dot) {
    auto pn = pick(d, "polarity", name);
    const auto& e = d.polarity(pn);
    auto cl = concept_lattice(e);
    if (dot) {
        BitSet xs(cl.closed.size());
        for (Index x = 0; x < e.nx(); ++x) xs.set(cl.index_of(xi(e, x)));
        std::cout << to_dot(*cl.lattice, pn + "/concepts", xs);
        return 0;
    }
    std::cout << "# concept lattice of " << pn << ", " << cl.closed.size() << " closed sets of X\n";
    for (Index i = 0; i < cl.closed.size(); ++i)
        std::cout << i << " " << set_name(e.X().names(), cl.closed[i]) << "\n";
    std::cout << "covers:";
    for (auto [a, b] : cl.lattice->covers().pairs()) std::cout << " " << a << "<" << b;
    std::cout << "\n";
    return 0;
}

int cmd_morphism(const Document& d, const std::string& from, const std::string& to, const std::string& name) {
    std::vector<std::string> hits;
    for (auto& [k, n] : d.order) {
        if (k != "morphism") continue;
        const auto& m = d.morphisms.at(n);
        if (!name.empty() && n != name) continue;
        if (!from.empty() && m.from != from) continue;
        if (!to.empty() && m.to != to) continue;
        hits.push_back(n);
    }
    if (hits.empty()) throw Usage{"no matching morphism declaration"};
    int rc = 0;
    for (auto& n : hits) {
        const auto& m = d.morphisms.at(n);
        GaloisRef a, b;
        try {
            a = make_galois(d.polarity(m.from));
            b = make_galois(d.polarity(m.to));
        } catch (const Error& x) {
            std::cout << n << ": " << x.what() << "\n";
            rc = 1;
            continue;
        }
        auto chk = check_morphism(a, b, d.map(m.hx), d.map(m.hp), d.map(m.hy));
        if (!chk.ok) {
            std::cout << n << ": " << chk.clause << " FAIL " << chk.witness.str() << "\n";
            rc = 1;
            continue;
        }
        auto h = validate_morphism(a, b, d.map(m.hx), d.map(m.hp), d.map(m.hy));
        auto psi = psi_of(h);
        std::cout << n << ": morphism " << m.from << " -> " << m.to << " embedding=" << yn(h.embedding)
                  << " iso=" << yn(h.isomorphism) << " psi_surjective=" << yn(psi.psi.is_surjective())
                  << " roundtrip=" << yn(roundtrip(h) && roundtrip(psi)) << "\n";
    }
    return rc;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

int cmd_fixtures(const std::string& dir, const std::string& only) {
    if (!fs::is_directory(dir)) throw Usage{"fixture directory not found: " + dir};
    std::vector<fs::path> files;
    for (auto& ent : fs::directory_iterator(dir))
        if (ent.path().extension() == ".pol") files.push_back(ent.path());
    std::sort(files.begin(), files.end());
    if (!only.empty()) {
        std::erase_if(files, [&](const fs::path& p) {
            auto stem = p.stem().string();
            return stem != only && stem != "fix_" + only;
        });
        if (files.empty()) throw Usage{"no fixture named '" + only + "'"};
    }
    std::vector<FixtureRow> rows;
    for (auto& f : files) {
        try {
            auto d = load_document(f.string());
            auto r = run_expectations(d, f.filename().string());
            rows.insert(rows.end(), r.begin(), r.end());
        } catch (const std::exception& x) {
            rows.push_back({f.filename().string(), "load", "ok", std::string("error: ") + x.what(), "", 0, false});
        }
    }
    std::size_t wl = 5, we = 8, wa = 6;
    for (auto& r : rows) {
        wl = std::max(wl, r.label.size());
        we = std::max(we, r.expected.size());
        wa = std::max(wa, r.actual.size());
    }
    std::cout << pad("fixture", 18) << pad("check", wl + 2) << pad("expected", we + 2) << pad("actual", wa + 2) << "result\n";
    std::size_t pass = 0;
    for (auto& r : rows) {
        std::cout << pad(r.file + ":" + std::to_string(r.line), 18) << pad(r.label, wl + 2) << pad(r.expected, we + 2)
                  << pad(r.actual, wa + 2) << (r.pass ? "PASS" : "FAIL") << "\n";
        pass += r.pass;
    }
    std::cout << pass << "/" << rows.size() << " expectations hold\n";
    for (auto& r : rows)
        if (!r.pass)
            std::cout << "FAILED " << r.file << ":" << r.line << " " << r.label << " expected " << r.expected << " got "
                      << r.actual << (r.cite.empty() ? "" : " (" + r.cite + ")") << "\n";
    return pass == rows.size() ? 0 : 1;
}

int cmd_fuzz(std::uint64_t seed, Index size, std::size_t iters, const std::string& check) {
    FuzzOptions o;
    o.seed = seed;
    o.size = size;
    o.iters = iters;
    std::stringstream ss(check);
    for (std::string l; std::getline(ss, l, ',');) {
        if (l.empty() || l == "all") continue;
        if (std::find(law_names().begin(), law_names().end(), l) == law_names().end()) throw Usage{"unknown law '" + l + "'"};
        o.laws.insert(l);
    }
    auto r = run_fuzz(o);
    if (r.violation) {
        std::cout << "law " << r.violation->law << " violated at iteration " << r.failed_iter << " (seed " << seed
                  << "): " << r.violation->detail << "\n# counterexample\n"
                  << r.violation->document;
        return 1;
    }
    std::cout << "fuzz seed=" << seed << " size=" << size << ": " << r.iterations << " iterations, " << r.galois
              << " Galois instances, " << r.contexts << " contexts, no violations\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polab: extension polarities, coherence and completions"};
    app.require_subcommand(1);
    std::string file, pol, format = "text", kind, from, to, name, only, check;
    std::string dir = std::getenv("POLAB_FIXTURES") ? std::getenv("POLAB_FIXTURES") : POLAB_FIXTURE_DIR;
    bool quot = false, dot = false;
    std::uint64_t seed = 0;
    Index size = 5;
    std::size_t iters = 100;

    auto* c_check = app.add_subcommand("check", "coherence report");
    c_check->add_option("file", file)->required()->check(CLI::ExistingFile);
    c_check->add_option("--polarity", pol);
    c_check->add_option("--format", format)->check(CLI::IsMember({"text", "tsv"}));

    auto* c_pre = app.add_subcommand("preorder", "canonical preorders on X u Y");
    c_pre->add_option("file", file)->required()->check(CLI::ExistingFile);
    c_pre->add_option("--polarity", pol);
    c_pre->add_option("--kind", kind)->required()->check(CLI::IsMember({"r0", "rm", "rg", "rl"}));
    c_pre->add_flag("--quotient", quot);
    c_pre->add_flag("--dot", dot);

    auto* c_comp = app.add_subcommand("complete", "Delta1-completion of a Galois polarity");
    c_comp->add_option("file", file)->required()->check(CLI::ExistingFile);
    c_comp->add_option("--polarity", pol);
    c_comp->add_flag("--dot", dot);

    auto* c_dec = app.add_subcommand("decompose", "Galois polarity generated by a Delta1-completion");
    c_dec->add_option("file", file)->required()->check(CLI::ExistingFile);
    c_dec->add_option("--map", name);

    auto* c_con = app.add_subcommand("concept", "concept lattice of the relation");
    c_con->add_option("file", file)->required()->check(CLI::ExistingFile);
    c_con->add_option("--polarity", pol);
    c_con->add_flag("--dot", dot);

    auto* c_mor = app.add_subcommand("morphism", "validate declared polarity morphisms");
    c_mor->add_option("file", file)->required()->check(CLI::ExistingFile);
    c_mor->add_option("--from", from);
    c_mor->add_option("--to", to);
    c_mor->add_option("--name", name);

    auto* c_fix = app.add_subcommand("fixtures", "run the fixture expectations");
    c_fix->add_option("--only", only);
    c_fix->add_option("--dir", dir);

    auto* c_fuzz = app.add_subcommand("fuzz", "random instances against the law suite");
    c_fuzz->add_option("--seed", seed);
    c_fuzz->add_option("--size", size)->check(CLI::Range(1, 12));
    c_fuzz->add_option("--iters", iters);
    c_fuzz->add_option("--check", check, "comma separated: conditions,hierarchy,galois,concept,completion,morphism,extension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_fix) return cmd_fixtures(dir, only);
        if (*c_fuzz) return cmd_fuzz(seed, size, iters, check);
        Document d;
        try {
            d = load_document(file);
        } catch (const Error& x) {
            throw Usage{x.what()};
        }
        if (*c_check) return cmd_check(d, pol, format);
        if (*c_pre) return cmd_preorder(d, pol, kind, quot, dot);
        if (*c_comp) return cmd_complete(d, pol, dot);
        if (*c_dec) return cmd_decompose(d, name);
        if (*c_con) return cmd_concept(d, pol, dot);
        if (*c_mor) return cmd_morphism(d, from, to, name);
    } catch (const Usage& u) {
        std::cerr << "polab: " << u.msg << "\n";
        return 2;
    } catch (const Error& x) {
        std::cerr << "polab: " << x.what() << "\n";
        return x.code() == ErrorCode::ParseError ? 2 : 1;
    }
    return 2;
}
