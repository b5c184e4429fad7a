#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polab/bits.hpp"
#include "polab/error.hpp"

namespace polab {

// Finite poset on indices 0..n-1 with opaque string ids.
class Poset {
public:
    Poset() = default;

    // le lists generating pairs a<=b; the reflexive-transitive closure is taken.
    static Poset from_pairs(std::vector<std::string> names,
                            const std::vector<std::pair<std::string, std::string>>& le);
    static Poset from_relation(std::vector<std::string> names, Relation le);
    static Poset antichain(std::vector<std::string> names);
    static Poset chain(std::vector<std::string> names);

    Index size() const { return names_.size(); }
    const std::string& name(Index i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Index> find(const std::string& id) const;
    Index index_of(const std::string& id) const;

    bool leq(Index a, Index b) const { return le_.test(a, b); }
    const Relation& order() const { return le_; }
    const BitSet& up(Index a) const { return le_.row(a); }
    const BitSet& down(Index a) const { return down_[a]; }

    BitSet upper_bounds(const BitSet& s) const;
    BitSet lower_bounds(const BitSet& s) const;
    std::optional<Index> greatest(const BitSet& s) const;
    std::optional<Index> least(const BitSet& s) const;
    std::optional<Index> meet(const BitSet& s) const { return greatest(lower_bounds(s)); }
    std::optional<Index> join(const BitSet& s) const { return least(upper_bounds(s)); }
    std::optional<Index> top() const { return greatest(BitSet(size(), true)); }
    std::optional<Index> bottom() const { return least(BitSet(size(), true)); }
    bool is_complete_lattice() const;

    Relation covers() const;
    Poset subposet(const BitSet& keep) const;
    Poset dual() const;
    Poset renamed(std::vector<std::string> names) const;
    BitSet all() const { return BitSet(size(), true); }

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.names_ == b.names_ && a.le_ == b.le_;
    }

private:
    void index();
    std::vector<std::string> names_;
    Relation le_;
    std::vector<BitSet> down_;
    std::unordered_map<std::string, Index> ids_;
};

using PosetRef = std::shared_ptr<const Poset>;

inline PosetRef share(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

}  // namespace polab
