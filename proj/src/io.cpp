#include "polab/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace polab {

std::string Expectation::label() const {
    std::string s = property;
    for (auto& a : args) s += " " + a;
    return s;
}

const Poset& Document::poset(const std::string& n) const { return *poset_ref(n); }

PosetRef Document::poset_ref(const std::string& n) const {
    auto it = posets.find(n);
    if (it == posets.end()) throw Error(ErrorCode::UnknownId, "poset '" + n + "'");
    return it->second;
}

const MonotoneMap& Document::map(const std::string& n) const {
    auto it = maps.find(n);
    if (it == maps.end()) throw Error(ErrorCode::UnknownId, "map '" + n + "'");
    return it->second;
}

const ExtensionPolarity& Document::polarity(const std::string& n) const {
    auto it = polarities.find(n);
    if (it == polarities.end()) throw Error(ErrorCode::UnknownId, "polarity '" + n + "'");
    return it->second;
}

namespace {

enum class Kind { Word, Str, Punct };
struct Tok {
    Kind kind;
    std::string text;
    int line;
    bool is(const char* p) const { return kind == Kind::Punct && text == p; }
};

bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.' || c == ':' ||
           c == '+' || c == '*' || c == '^' || c == '-' || c == '!' || c == '/' || c == '$';
}

[[noreturn]] void perr(int line, const std::string& msg) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<Tok> lex(const std::string& s) {
    std::vector<Tok> out;
    int line = 1;
    for (std::size_t i = 0; i < s.size();) {
        char c = s[i];
        if (c == '\n') { ++line; ++i; continue; }
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (c == '#') {
            while (i < s.size() && s[i] != '\n') ++i;
            continue;
        }
        if (c == '"') {
            std::size_t j = i + 1;
            std::string v;
            while (j < s.size() && s[j] != '"') {
                if (s[j] == '\n') ++line;
                v += s[j++];
            }
            if (j >= s.size()) perr(line, "unterminated string");
            out.push_back({Kind::Str, v, line});
            i = j + 1;
            continue;
        }
        if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
            out.push_back({Kind::Punct, "->", line});
            i += 2;
            continue;
        }
        if (std::string("{};<=~,").find(c) != std::string::npos) {
            out.push_back({Kind::Punct, std::string(1, c), line});
            ++i;
            continue;
        }
        if (word_char(c)) {
            std::size_t j = i;
            while (j < s.size() && word_char(s[j]) && !(s[j] == '-' && j + 1 < s.size() && s[j + 1] == '>')) ++j;
            out.push_back({Kind::Word, s.substr(i, j - i), line});
            i = j;
            continue;
        }
        perr(line, std::string("unexpected character '") + c + "'");
    }
    return out;
}

struct Stmt {
    std::string key;
    std::vector<Tok> args;
    int line;
};
struct Block {
    std::string kind, name;
    std::vector<Stmt> stmts;
    int line;
};

std::vector<Block> blocks(const std::vector<Tok>& t) {
    std::vector<Block> out;
    std::size_t i = 0;
    auto need_word = [&](const char* what) -> const Tok& {
        if (i >= t.size() || t[i].kind != Kind::Word) perr(i < t.size() ? t[i].line : 0, std::string("expected ") + what);
        return t[i++];
    };
    while (i < t.size()) {
        Block b;
        b.line = t[i].line;
        b.kind = need_word("section kind").text;
        if (i < t.size() && t[i].kind == Kind::Word) b.name = t[i++].text;
        if (i >= t.size() || !t[i].is("{")) perr(b.line, "expected '{' after " + b.kind);
        ++i;
        while (true) {
            if (i >= t.size()) perr(b.line, "unterminated section " + b.kind);
            if (t[i].is("}")) { ++i; break; }
            if (t[i].is(";")) { ++i; continue; }
            Stmt st;
            st.line = t[i].line;
            st.key = need_word("key").text;
            if (!st.key.empty() && st.key.back() == ':') st.key.pop_back();
            while (i < t.size() && !t[i].is(";") && !t[i].is("}")) st.args.push_back(t[i++]);
            b.stmts.push_back(std::move(st));
        }
        out.push_back(std::move(b));
    }
    return out;
}

std::string one_word(const Stmt& st) {
    if (st.args.size() != 1 || st.args[0].kind != Kind::Word) perr(st.line, "'" + st.key + "' takes one name");
    return st.args[0].text;
}

// Sequences like a<b<c d<e (sep '<') or a=b (sep '=').
std::vector<std::pair<std::string, std::string>> chains(const Stmt& st, const char* sep) {
    std::vector<std::pair<std::string, std::string>> out;
    const auto& a = st.args;
    for (std::size_t i = 0; i < a.size();) {
        if (a[i].kind != Kind::Word) perr(st.line, "expected element id");
        std::string prev = a[i++].text;
        while (i + 1 < a.size() && a[i].is(sep)) {
            if (a[i + 1].kind != Kind::Word) perr(st.line, "expected element id");
            out.emplace_back(prev, a[i + 1].text);
            prev = a[i + 1].text;
            i += 2;
        }
        if (i < a.size() && a[i].is(",")) ++i;
    }
    return out;
}

std::vector<std::string> words(const Stmt& st) {
    std::vector<std::string> out;
    for (auto& t : st.args) {
        if (t.is(",")) continue;
        if (t.kind != Kind::Word) perr(st.line, "expected ids in '" + st.key + "'");
        out.push_back(t.text);
    }
    return out;
}

// rel entries: rl | none | a~b ...
Relation rel_entries(const Stmt& st, const Poset& x, const Poset& y, const std::optional<Relation>& rl) {
    Relation r(x.size(), y.size());
    const auto& a = st.args;
    for (std::size_t i = 0; i < a.size();) {
        if (a[i].is(",")) { ++i; continue; }
        if (a[i].kind != Kind::Word) perr(st.line, "bad relation entry");
        if (a[i].text == "rl" && !(i + 1 < a.size() && a[i + 1].is("~"))) {
            if (!rl) perr(st.line, "'rl' needs a shared base");
            r |= *rl;
            ++i;
            continue;
        }
        if (a[i].text == "none" && !(i + 1 < a.size() && a[i + 1].is("~"))) { ++i; continue; }
        if (i + 2 >= a.size() || !a[i + 1].is("~") || a[i + 2].kind != Kind::Word) perr(st.line, "expected pair a~b");
        auto xi = x.find(a[i].text);
        auto yi = y.find(a[i + 2].text);
        if (!xi) perr(st.line, "unknown X element '" + a[i].text + "'");
        if (!yi) perr(st.line, "unknown Y element '" + a[i + 2].text + "'");
        r.set(*xi, *yi);
        i += 3;
    }
    return r;
}

const Stmt* find(const Block& b, const char* key) {
    for (auto& s : b.stmts)
        if (s.key == key) return &s;
    return nullptr;
}

const Stmt& need(const Block& b, const char* key) {
    auto s = find(b, key);
    if (!s) perr(b.line, b.kind + " '" + b.name + "' lacks '" + key + "'");
    return *s;
}

Index union_ref(const ExtensionPolarity& e, const std::string& id, int line) {
    if (id.size() > 2 && id[1] == ':') {
        if (id[0] == 'x') {
            if (auto i = e.X().find(id.substr(2))) return e.ux(*i);
        } else if (id[0] == 'y') {
            if (auto i = e.Y().find(id.substr(2))) return e.uy(*i);
        }
    }
    perr(line, "unknown union element '" + id + "' (use x:id or y:id)");
}

template <class M>
void fresh(const M& m, const Block& b) {
    if (b.name.empty()) perr(b.line, b.kind + " needs a name");
    if (m.count(b.name)) perr(b.line, "duplicate " + b.kind + " '" + b.name + "'");
}

}  // namespace

Document parse_document(const std::string& text) {
    Document doc;
    for (auto& b : blocks(lex(text))) {
        int at = b.line;  // bodies may narrow this to the offending statement
        auto wrap = [&](auto&& body) {
            try {
                body();
            } catch (const Error& err) {
                if (err.code() == ErrorCode::ParseError) throw;
                std::string msg = err.what();
                std::string prefix = std::string(to_string(err.code())) + ": ";
                if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
                throw Error(err.code(), "line " + std::to_string(at) + ": " + b.kind + " '" + b.name + "': " + msg);
            }
        };
        if (b.kind == "poset") {
            fresh(doc.posets, b);
            wrap([&] {
                auto el = find(b, "elems");
                std::vector<std::string> names = el ? words(*el) : std::vector<std::string>{};
                std::vector<std::pair<std::string, std::string>> le;
                for (auto& s : b.stmts)
                    if (s.key == "le") {
                        auto c = chains(s, "<");
                        le.insert(le.end(), c.begin(), c.end());
                        at = s.line;
                        Poset::from_pairs(names, le);  // throws at the statement closing a cycle
                    }
                at = b.line;
                doc.posets[b.name] = share(Poset::from_pairs(names, le));
            });
        } else if (b.kind == "map") {
            fresh(doc.maps, b);
            wrap([&] {
                MapDecl d{one_word(need(b, "from")), one_word(need(b, "to"))};
                auto src = doc.poset_ref(d.from), dst = doc.poset_ref(d.to);
                std::vector<std::pair<std::string, std::string>> assign;
                const Stmt& s = need(b, "send");
                if (s.args.size() == 1 && s.args[0].text == "names") {
                    for (auto& n : src->names()) assign.emplace_back(n, n);
                } else {
                    for (std::size_t i = 0; i < s.args.size();) {
                        if (s.args[i].is(",")) { ++i; continue; }
                        if (i + 2 >= s.args.size() || !s.args[i + 1].is("->")) perr(s.line, "expected a->b");
                        assign.emplace_back(s.args[i].text, s.args[i + 2].text);
                        i += 3;
                    }
                }
                doc.maps[b.name] = MonotoneMap::by_name(src, dst, assign);
                doc.map_decls[b.name] = d;
            });
        } else if (b.kind == "polarity") {
            fresh(doc.polarities, b);
            wrap([&] {
                PolarityDecl d;
                Extension ex, ey;
                if (find(b, "ex")) {
                    d.ex = one_word(need(b, "ex"));
                    d.ey = one_word(need(b, "ey"));
                    ex = doc.map(d.ex);
                    ey = doc.map(d.ey);
                } else {
                    d.x = one_word(need(b, "x"));
                    d.y = one_word(need(b, "y"));
                    ex = MonotoneMap(empty_poset(), doc.poset_ref(d.x), {});
                    ey = MonotoneMap(empty_poset(), doc.poset_ref(d.y), {});
                }
                std::optional<Relation> rl;
                if (ex.source() == ey.source()) rl = r_l(ex, ey);
                Relation r = rel_entries(need(b, "rel"), ex.target(), ey.target(), rl);
                doc.polarities.emplace(b.name, ExtensionPolarity(ex, ey, r));
                doc.polarity_decls[b.name] = d;
            });
        } else if (b.kind == "preorder") {
            fresh(doc.preorders, b);
            wrap([&] {
                PreorderDecl d;
                d.on = one_word(need(b, "on"));
                const auto& e = doc.polarity(d.on);
                d.rel = Relation(e.n(), e.n());
                for (auto& s : b.stmts) {
                    if (s.key == "le")
                        for (auto& [a, c] : chains(s, "<")) d.rel.set(union_ref(e, a, s.line), union_ref(e, c, s.line));
                    else if (s.key == "eq")
                        for (auto& [a, c] : chains(s, "=")) {
                            Index i = union_ref(e, a, s.line), j = union_ref(e, c, s.line);
                            d.rel.set(i, j);
                            d.rel.set(j, i);
                        }
                    else if (s.key == "identify")
                        for (Index p = 0; p < e.P().size(); ++p) {
                            d.rel.set(e.ux(e.ex()(p)), e.uy(e.ey()(p)));
                            d.rel.set(e.uy(e.ey()(p)), e.ux(e.ex()(p)));
                        }
                    else if (s.key != "on")
                        perr(s.line, "unknown preorder key '" + s.key + "'");
                }
                d.rel |= r_zero(e);
                d.rel.close_reflexive();
                d.rel.close_transitive();
                doc.preorders[b.name] = std::move(d);
            });
        } else if (b.kind == "context") {
            fresh(doc.contexts, b);
            wrap([&] {
                ContextDecl d{one_word(need(b, "inner")), one_word(need(b, "ix")), one_word(need(b, "iy"))};
                const auto& e = doc.polarity(d.inner);
                if (!(doc.map(d.ix).source() == e.X()) || !(doc.map(d.iy).source() == e.Y()))
                    throw Error(ErrorCode::DomainMismatch, "outer extensions must start at X and Y");
                doc.contexts[b.name] = d;
            });
        } else if (b.kind == "relation") {
            fresh(doc.relations, b);
            wrap([&] {
                RelationDecl d;
                d.on = one_word(need(b, "on"));
                auto it = doc.contexts.find(d.on);
                if (it == doc.contexts.end()) throw Error(ErrorCode::UnknownId, "context '" + d.on + "'");
                const auto& e = doc.polarity(it->second.inner);
                auto ox = compose(doc.map(it->second.ix), e.ex());
                auto oy = compose(doc.map(it->second.iy), e.ey());
                d.rel = rel_entries(need(b, "rel"), ox.target(), oy.target(), r_l(ox, oy));
                doc.relations[b.name] = std::move(d);
            });
        } else if (b.kind == "morphism") {
            fresh(doc.morphisms, b);
            wrap([&] {
                MorphismDecl d{one_word(need(b, "from")), one_word(need(b, "to")), one_word(need(b, "hx")),
                               one_word(need(b, "hp")), one_word(need(b, "hy"))};
                doc.polarity(d.from);
                doc.polarity(d.to);
                doc.map(d.hx);
                doc.map(d.hp);
                doc.map(d.hy);
                doc.morphisms[b.name] = d;
            });
        } else if (b.kind == "expect") {
            for (auto& s : b.stmts) {
                Expectation x;
                x.property = s.key;
                x.line = s.line;
                std::size_t i = 0;
                for (; i < s.args.size() && !s.args[i].is("="); ++i) {
                    if (s.args[i].kind != Kind::Word) perr(s.line, "bad expectation argument");
                    x.args.push_back(s.args[i].text);
                }
                if (i + 1 >= s.args.size() || s.args[i + 1].kind == Kind::Punct) perr(s.line, "expectation needs '= value'");
                x.expected = s.args[i + 1].text;
                if (i + 2 < s.args.size()) {
                    if (s.args[i + 2].kind != Kind::Str) perr(s.line, "expected a quoted citation");
                    x.cite = s.args[i + 2].text;
                }
                doc.expectations.push_back(std::move(x));
            }
            continue;
        } else {
            perr(b.line, "unknown section kind '" + b.kind + "'");
        }
        doc.order.emplace_back(b.kind, b.name);
    }
    return doc;
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

std::string relation_text(const Relation& r, const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                          const std::string& sep) {
    std::string out;
    for (auto [a, b] : r.pairs()) out += (out.empty() ? "" : " ") + rows[a] + sep + cols[b];
    return out;
}

namespace {

std::string rel_line(const Relation& r, const Poset& x, const Poset& y) {
    std::string s = relation_text(r, x.names(), y.names());
    return s.empty() ? "none" : s;
}

}  // namespace

std::string write_document(const Document& doc) {
    std::ostringstream o;
    for (auto& [kind, name] : doc.order) {
        if (kind == "poset") {
            const Poset& p = doc.poset(name);
            o << "poset " << name << " {\n  elems";
            for (auto& n : p.names()) o << " " << n;
            o << ";\n";
            auto c = p.covers();
            if (c.count()) o << "  le " << relation_text(c, p.names(), p.names(), "<") << ";\n";
            o << "}\n";
        } else if (kind == "map") {
            const auto& m = doc.map(name);
            const auto& d = doc.map_decls.at(name);
            o << "map " << name << " {\n  from " << d.from << ";\n  to " << d.to << ";\n  send";
            for (Index i = 0; i < m.source().size(); ++i) o << " " << m.source().name(i) << "->" << m.target().name(m(i));
            o << ";\n}\n";
        } else if (kind == "polarity") {
            const auto& e = doc.polarity(name);
            const auto& d = doc.polarity_decls.at(name);
            o << "polarity " << name << " {\n";
            if (!d.ex.empty()) o << "  ex " << d.ex << ";\n  ey " << d.ey << ";\n";
            else o << "  x " << d.x << ";\n  y " << d.y << ";\n";
            o << "  rel " << rel_line(e.r(), e.X(), e.Y()) << ";\n}\n";
        } else if (kind == "preorder") {
            const auto& d = doc.preorders.at(name);
            const auto& e = doc.polarity(d.on);
            Relation strict = d.rel;
            for (Index i = 0; i < strict.rows(); ++i) strict.set(i, i, false);
            o << "preorder " << name << " {\n  on " << d.on << ";\n";
            if (strict.count()) o << "  le " << relation_text(strict, e.union_names(), e.union_names(), "<") << ";\n";
            o << "}\n";
        } else if (kind == "context") {
            const auto& d = doc.contexts.at(name);
            o << "context " << name << " {\n  inner " << d.inner << ";\n  ix " << d.ix << ";\n  iy " << d.iy << ";\n}\n";
        } else if (kind == "relation") {
            const auto& d = doc.relations.at(name);
            const auto& c = doc.contexts.at(d.on);
            o << "relation " << name << " {\n  on " << d.on << ";\n  rel "
              << rel_line(d.rel, doc.map(c.ix).target(), doc.map(c.iy).target()) << ";\n}\n";
        } else if (kind == "morphism") {
            const auto& d = doc.morphisms.at(name);
            o << "morphism " << name << " {\n  from " << d.from << ";\n  to " << d.to << ";\n  hx " << d.hx
              << ";\n  hp " << d.hp << ";\n  hy " << d.hy << ";\n}\n";
        }
    }
    if (!doc.expectations.empty()) {
        o << "expect {\n";
        for (auto& x : doc.expectations) {
            bool plain = !x.expected.empty();
            for (char c : x.expected)
                if (!word_char(c)) plain = false;
            o << "  " << x.label() << " = " << (plain ? x.expected : "\"" + x.expected + "\"");
            if (!x.cite.empty()) o << " \"" << x.cite << "\"";
            o << ";\n";
        }
        o << "}\n";
    }
    return o.str();
}

std::string to_dot(const Poset& p, const std::string& name, const std::optional<BitSet>& marked) {
    std::ostringstream o;
    o << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=circle, label=\"\", width=0.15];\n";
    for (Index i = 0; i < p.size(); ++i) {
        bool m = marked && marked->test(i);
        o << "  n" << i << " [xlabel=\"" << p.name(i) << "\", style=" << (m ? "filled, fillcolor=black" : "solid")
          << "];\n";
    }
    for (auto [a, b] : p.covers().pairs()) o << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
    o << "}\n";
    return o.str();
}

}  // namespace polab
