#pragma once

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polab/polarity.hpp"

namespace polab {

enum class Cond { C1, C2, C3, C4, C5, C6, C7, C8, E1, E2, S1, S2 };
constexpr std::array<Cond, 12> all_conditions{Cond::C1, Cond::C2, Cond::C3, Cond::C4, Cond::C5, Cond::C6,
                                              Cond::C7, Cond::C8, Cond::E1, Cond::E2, Cond::S1, Cond::S2};
const char* to_string(Cond c);
std::optional<Cond> cond_from_string(const std::string& s);

struct Witness {
    std::vector<std::pair<std::string, std::string>> items;
    void add(std::string role, std::string value) { items.emplace_back(std::move(role), std::move(value)); }
    std::string str() const;
    bool empty() const { return items.empty(); }
};

struct CondResult {
    bool holds = true;
    Witness witness;  // first counterexample in index order
};

CondResult check_condition(const ExtensionPolarity& e, Cond c);

struct CoherenceReport {
    std::array<CondResult, 12> conds;
    int level = -1;  // -1 when C1 or C2 fails
    bool meet_ext = false, join_ext = false;
    bool galois = false, entangled = false;
    const CondResult& operator[](Cond c) const { return conds[static_cast<int>(c)]; }
};

CoherenceReport check_coherence(const ExtensionPolarity& e);
int coherence_level(const ExtensionPolarity& e);
std::string level_name(int level);

struct PreorderCheck {
    bool ok = true;
    std::string clause;
    Witness witness;
};
// U is a square relation on the union carrier X u Y.
PreorderCheck is_n_preorder(const ExtensionPolarity& e, const Relation& u, int n);
// Largest n for which U is an n-preorder, -1 if none.
int preorder_grade(const ExtensionPolarity& e, const Relation& u);

Index max_carrier_default();  // POLAB_MAX_CARRIER or 7

struct EnumOptions {
    Index max_carrier = max_carrier_default();
    std::size_t cap = std::numeric_limits<std::size_t>::max();
};
struct EnumResult {
    std::vector<Relation> preorders;
    bool truncated = false;
};

// Preorders on n points containing `forced`, disjoint from `forbidden`,
// accepted by `accept`; backtracking over free pairs in (row, col) order.
EnumResult search_preorders(Index n, const Relation& forced, const Relation& forbidden,
                            const std::function<bool(const Relation&)>& accept, std::size_t cap);

EnumResult enumerate_n_preorders(const ExtensionPolarity& e, int n, const EnumOptions& opt = {});
bool exists_n_preorder(const ExtensionPolarity& e, int n, const EnumOptions& opt = {});

// The canonical relation for grade n: R0, Rm, Rm, Rg.
Relation canonical_relation(const ExtensionPolarity& e, int n);

struct EquivalenceRow {
    int n = 0;
    bool coherent = false;
    bool canonical_is_preorder = false;
    bool exists = false;
    bool minimal = true;       // canonical contained in every enumerated member
    bool intersections = true; // pairwise intersections stay n-preorders
    bool truncated = false;
    bool consistent() const {
        return coherent == canonical_is_preorder && coherent == exists && minimal && intersections;
    }
};
std::vector<EquivalenceRow> coherence_equivalences(const ExtensionPolarity& e, const EnumOptions& opt = {});

bool is_entangled(const ExtensionPolarity& e);
struct EntanglementReport {
    bool entangled = false;
    bool consequences_hold = true;  // every 1-preorder restricts to the orders and is a 2-preorder
    std::size_t one_preorders = 0;
};
EntanglementReport entangled_consequences(const ExtensionPolarity& e, const EnumOptions& opt = {});

bool is_galois(const ExtensionPolarity& e);
// S1 and S2; throws PreconditionViolation unless E is 0-coherent with e_X a
// meet-extension and e_Y a join-extension.
bool galois_via_s1s2(const ExtensionPolarity& e);

// Throws NotGalois. Returns R-hat-g after checking it is the unique 3-preorder.
Relation unique_3preorder(const ExtensionPolarity& g);

struct Intermediate {
    Quotient q;
    PosetRef poset;
    MonotoneMap iota_x, iota_y, gamma;
};
// Throws NotOnePreorder.
Intermediate intermediate_structure(const ExtensionPolarity& e, const Relation& u);

}  // namespace polab
