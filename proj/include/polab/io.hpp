#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polab/polarity.hpp"

namespace polab {

// Text format:
//   poset P { elems p q r; le p<q q<r; }
//   map eX { from P; to X; send p->p q->q; }      (send names; maps by id)
//   polarity E { ex eX; ey eY; rel rl x~y; }      (x X; y Y; for order polarities)
//   preorder U { on E; le x:a<y:b; eq x:a=y:a; identify; }
//   context C { inner E; ix iX; iy iY; }
//   relation S { on C; rel rl p~y; }               (X' x Y' of a context)
//   morphism h { from G; to H; hx f; hp g; hy k; }
//   expect { level E = 1 "cite"; }
// '#' starts a comment; a key may carry a trailing ':'.

struct ContextDecl {
    std::string inner, ix, iy;
};
struct RelationDecl {
    std::string on;  // context name
    Relation rel;    // X' x Y'
};
struct PreorderDecl {
    std::string on;
    Relation rel;  // closed, on X u Y
};
struct MorphismDecl {
    std::string from, to, hx, hp, hy;
};
struct Expectation {
    std::string property;
    std::vector<std::string> args;
    std::string expected;
    std::string cite;
    int line = 0;
    std::string label() const;
};
struct PolarityDecl {
    std::string ex, ey;  // map names, or
    std::string x, y;    // poset names of an order polarity
};
struct MapDecl {
    std::string from, to;
};

struct Document {
    std::map<std::string, PosetRef> posets;
    std::map<std::string, MonotoneMap> maps;
    std::map<std::string, MapDecl> map_decls;
    std::map<std::string, ExtensionPolarity> polarities;
    std::map<std::string, PolarityDecl> polarity_decls;
    std::map<std::string, PreorderDecl> preorders;
    std::map<std::string, ContextDecl> contexts;
    std::map<std::string, RelationDecl> relations;
    std::map<std::string, MorphismDecl> morphisms;
    std::vector<Expectation> expectations;
    std::vector<std::pair<std::string, std::string>> order;  // (kind, name) in declaration order

    const Poset& poset(const std::string& n) const;
    PosetRef poset_ref(const std::string& n) const;
    const MonotoneMap& map(const std::string& n) const;
    const ExtensionPolarity& polarity(const std::string& n) const;
};

// Throws ParseError (with line numbers) and the model errors of the checked
// constructors.
Document parse_document(const std::string& text);
Document load_document(const std::string& path);
std::string write_document(const Document& doc);

// Graphviz, bottom to top, transitive reduction; `marked` nodes are drawn filled.
std::string to_dot(const Poset& p, const std::string& name, const std::optional<BitSet>& marked = std::nullopt);

std::string relation_text(const Relation& r, const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                          const std::string& sep = "~");

}  // namespace polab
