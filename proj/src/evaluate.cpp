#include "polab/evaluate.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "polab/concept.hpp"
#include "polab/delta1.hpp"
#include "polab/error.hpp"
#include "polab/extend.hpp"

namespace polab {

namespace {

std::string yes(bool b) { return b ? "true" : "false"; }

[[noreturn]] void bad(const Expectation& x, const std::string& why) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(x.line) + ": " + x.label() + ": " + why);
}

const std::string& arg(const Expectation& x, std::size_t i) {
    if (i >= x.args.size()) bad(x, "missing argument " + std::to_string(i + 1));
    return x.args[i];
}

Relation kind_relation(const Expectation& x, const ExtensionPolarity& e, const std::string& kind) {
    if (kind == "r0") return r_zero(e);
    if (kind == "rm") return r_hat_m(e);
    if (kind == "rg") return r_hat_g(e);
    bad(x, "relation kind must be r0, rm or rg");
}

std::string edges(const Poset& p) {
    std::vector<std::string> out;
    for (auto [a, b] : p.covers().pairs()) out.push_back(p.name(a) + "<" + p.name(b));
    std::sort(out.begin(), out.end());
    std::string s;
    for (auto& e : out) s += (s.empty() ? "" : " ") + e;
    return s.empty() ? "-" : s;
}

int parse_int(const Expectation& x, const std::string& s) {
    try {
        return std::stoi(s);
    } catch (...) {
        bad(x, "expected a number, got " + s);
    }
}

ExtensionContext context_of(const Document& d, const std::string& name) {
    auto it = d.contexts.find(name);
    if (it == d.contexts.end()) throw Error(ErrorCode::UnknownId, "no context " + name);
    return ExtensionContext(d.polarity(it->second.inner), d.map(it->second.ix), d.map(it->second.iy));
}

std::pair<ExtensionContext, Relation> relation_of(const Document& d, const std::string& name) {
    auto it = d.relations.find(name);
    if (it == d.relations.end()) throw Error(ErrorCode::UnknownId, "no relation " + name);
    return {context_of(d, it->second.on), it->second.rel};
}

PolarityMorphism morphism_of(const Document& d, const std::string& name) {
    auto it = d.morphisms.find(name);
    if (it == d.morphisms.end()) throw Error(ErrorCode::UnknownId, "no morphism " + name);
    const auto& m = it->second;
    return validate_morphism(make_galois(d.polarity(m.from)), make_galois(d.polarity(m.to)), d.map(m.hx),
                             d.map(m.hp), d.map(m.hy));
}

using Handler = std::function<std::string(const Document&, const Expectation&)>;

const std::map<std::string, std::pair<std::string, Handler>>& table() {
    static const std::map<std::string, std::pair<std::string, Handler>> t = {
        {"level", {"POL", [](auto& d, auto& x) { return level_name(coherence_level(d.polarity(arg(x, 0)))); }}},
        {"cond",
         {"POL COND",
          [](auto& d, auto& x) {
              auto c = cond_from_string(arg(x, 1));
              if (!c) bad(x, "unknown condition " + arg(x, 1));
              return std::string(check_condition(d.polarity(arg(x, 0)), *c).holds ? "holds" : "fails");
          }}},
        {"witness",
         {"POL COND",
          [](auto& d, auto& x) {
              auto c = cond_from_string(arg(x, 1));
              if (!c) bad(x, "unknown condition " + arg(x, 1));
              auto r = check_condition(d.polarity(arg(x, 0)), *c);
              return r.holds ? std::string("-") : r.witness.str();
          }}},
        {"galois", {"POL", [](auto& d, auto& x) { return yes(is_galois(d.polarity(arg(x, 0)))); }}},
        {"entangled", {"POL", [](auto& d, auto& x) { return yes(is_entangled(d.polarity(arg(x, 0)))); }}},
        {"meet_ext", {"POL", [](auto& d, auto& x) { return yes(is_meet_extension(d.polarity(arg(x, 0)).ex())); }}},
        {"join_ext", {"POL", [](auto& d, auto& x) { return yes(is_join_extension(d.polarity(arg(x, 0)).ey())); }}},
        {"exists",
         {"POL N",
          [](auto& d, auto& x) { EnumOptions o;
              o.max_carrier = std::max<Index>(o.max_carrier, 16);  // fixtures are fixed-size; pruning keeps this cheap
              return yes(exists_n_preorder(d.polarity(arg(x, 0)), parse_int(x, arg(x, 1)), o)); }}},
        {"canonical_grade",
         {"POL r0|rm|rg",
          [](auto& d, auto& x) {
              auto& e = d.polarity(arg(x, 0));
              Relation u = kind_relation(x, e, arg(x, 1));
              return level_name(preorder_grade(e, u));
          }}},
        {"quotient_size",
         {"POL r0|rm|rg",
          [](auto& d, auto& x) {
              auto& e = d.polarity(arg(x, 0));
              Relation u = kind_relation(x, e, arg(x, 1));
              if (!u.transitive()) return std::string("not-preorder");
              return std::to_string(quotient(e.union_names(), u).poset.size());
          }}},
        {"quotient_edges",
         {"POL r0|rm|rg",
          [](auto& d, auto& x) {
              auto& e = d.polarity(arg(x, 0));
              Relation u = kind_relation(x, e, arg(x, 1));
              if (!u.transitive()) return std::string("not-preorder");
              return edges(quotient(e.union_names(), u).poset);
          }}},
        {"strict_zx",
         {"POL",
          [](auto& d, auto& x) {
              auto& e = d.polarity(arg(x, 0));
              Relation z = z_x(e);
              return yes(e.X().order().subset_of(z) && !(z == e.X().order()));
          }}},
        {"grade",
         {"PREORDER",
          [](auto& d, auto& x) {
              auto it = d.preorders.find(arg(x, 0));
              if (it == d.preorders.end()) bad(x, "no preorder " + arg(x, 0));
              return level_name(preorder_grade(d.polarity(it->second.on), it->second.rel));
          }}},
        {"fails",
         {"PREORDER N",
          [](auto& d, auto& x) {
              auto it = d.preorders.find(arg(x, 0));
              if (it == d.preorders.end()) bad(x, "no preorder " + arg(x, 0));
              auto r = is_n_preorder(d.polarity(it->second.on), it->second.rel, parse_int(x, arg(x, 1)));
              return r.ok ? std::string("none") : r.clause;
          }}},
        {"outer_level",
         {"CONTEXT",
          [](auto& d, auto& x) {
              auto c = context_of(d, arg(x, 0));
              return level_name(coherence_level(c.outer(extend_relation(c))));
          }}},
        {"outer_galois",
         {"CONTEXT",
          [](auto& d, auto& x) {
              auto c = context_of(d, arg(x, 0));
              return yes(is_galois(c.outer(extend_relation(c))));
          }}},
        {"extension_report",
         {"CONTEXT",
          [](auto& d, auto& x) {
              return yes(check_extension_preservation(context_of(d, arg(x, 0))).ok());
          }}},
        {"relation_level",
         {"RELATION",
          [](auto& d, auto& x) {
              auto [c, s] = relation_of(d, arg(x, 0));
              return level_name(coherence_level(c.outer(s)));
          }}},
        {"relation_galois",
         {"RELATION",
          [](auto& d, auto& x) {
              auto [c, s] = relation_of(d, arg(x, 0));
              return yes(is_galois(c.outer(s)));
          }}},
        {"restricted_galois",
         {"RELATION",
          [](auto& d, auto& x) {
              auto [c, s] = relation_of(d, arg(x, 0));
              return yes(is_galois(c.inner.with_relation(restrict_relation(c, s))));
          }}},
        {"restricted_eq_rl",
         {"RELATION",
          [](auto& d, auto& x) {
              auto [c, s] = relation_of(d, arg(x, 0));
              return yes(restrict_relation(c, s) == r_l(c.inner.ex(), c.inner.ey()));
          }}},
        {"roundtrip_strict",
         {"RELATION",
          [](auto& d, auto& x) {
              auto [c, s] = relation_of(d, arg(x, 0));
              Relation back = extend_relation(c.ix, c.iy, restrict_relation(c, s));
              return yes(back.subset_of(s) && !(back == s));
          }}},
        {"restriction_report",
         {"RELATION",
          [](auto& d, auto& x) {
              auto [c, s] = relation_of(d, arg(x, 0));
              return yes(check_restriction_preservation(c, s).ok());
          }}},
        {"morphism_valid",
         {"MORPHISM",
          [](auto& d, auto& x) {
              auto it = d.morphisms.find(arg(x, 0));
              if (it == d.morphisms.end()) bad(x, "no morphism " + arg(x, 0));
              const auto& m = it->second;
              auto r = check_morphism(make_galois(d.polarity(m.from)), make_galois(d.polarity(m.to)), d.map(m.hx),
                                      d.map(m.hp), d.map(m.hy));
              return r.ok ? std::string("true") : r.clause;
          }}},
        {"morphism_embedding", {"MORPHISM", [](auto& d, auto& x) { return yes(morphism_of(d, arg(x, 0)).embedding); }}},
        {"morphism_iso", {"MORPHISM", [](auto& d, auto& x) { return yes(morphism_of(d, arg(x, 0)).isomorphism); }}},
        {"hx_surjective",
         {"MORPHISM", [](auto& d, auto& x) { return yes(morphism_of(d, arg(x, 0)).hx.is_surjective()); }}},
        {"psi_surjective",
         {"MORPHISM", [](auto& d, auto& x) { return yes(psi_of(morphism_of(d, arg(x, 0))).psi.is_surjective()); }}},
        {"psi_iso",
         {"MORPHISM", [](auto& d, auto& x) { return yes(psi_of(morphism_of(d, arg(x, 0))).psi.is_isomorphism()); }}},
        {"roundtrip", {"MORPHISM", [](auto& d, auto& x) { return yes(roundtrip(morphism_of(d, arg(x, 0)))); }}},
        {"gamma_size",
         {"POL",
          [](auto& d, auto& x) {
              return std::to_string(gamma_on_objects(make_galois(d.polarity(arg(x, 0)))).target().size());
          }}},
        {"gamma_is_macneille",
         {"POL",
          [](auto& d, auto& x) {
              auto& e = d.polarity(arg(x, 0));
              auto g = gamma_on_objects(make_galois(e));
              return yes(extensions_isomorphic(g, macneille(e.base_ref()), true).has_value());
          }}},
        {"unit_iso", {"POL", [](auto& d, auto& x) { return yes(unit(make_galois(d.polarity(arg(x, 0)))).eta.isomorphism); }}},
        {"rbar_equals_rd",
         {"POL", [](auto& d, auto& x) { return yes(unit_extension(make_galois(d.polarity(arg(x, 0)))).equal); }}},
        {"concept_size",
         {"POL", [](auto& d, auto& x) { return std::to_string(concept_lattice(d.polarity(arg(x, 0))).closed.size()); }}},
    };
    return t;
}

}  // namespace

std::string evaluate(const Document& d, const Expectation& x) {
    auto it = table().find(x.property);
    if (it == table().end()) bad(x, "unknown property");
    return it->second.second(d, x);
}

const std::vector<std::pair<std::string, std::string>>& property_vocabulary() {
    static const std::vector<std::pair<std::string, std::string>> v = [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto& [k, h] : table()) out.emplace_back(k, h.first);
        return out;
    }();
    return v;
}

std::vector<FixtureRow> run_expectations(const Document& d, const std::string& file) {
    std::vector<FixtureRow> rows;
    for (const auto& x : d.expectations) {
        FixtureRow r{file, x.label(), x.expected, "", x.cite, x.line, false};
        try {
            r.actual = evaluate(d, x);
        } catch (const Error& err) {
            r.actual = std::string("error: ") + err.what();
        }
        r.pass = r.actual == r.expected;
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace polab
