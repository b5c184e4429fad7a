#include "polab/poset.hpp"

namespace polab {

void Poset::index() {
    ids_.clear();
    for (Index i = 0; i < names_.size(); ++i) {
        if (!ids_.emplace(names_[i], i).second)
            throw Error(ErrorCode::PreconditionViolation, "duplicate element id '" + names_[i] + "'");
    }
    down_.assign(size(), BitSet(size()));
    for (Index i = 0; i < size(); ++i) down_[i] = le_.column(i);
}

Poset Poset::from_relation(std::vector<std::string> names, Relation le) {
    if (le.rows() != names.size() || le.cols() != names.size())
        throw Error(ErrorCode::CarrierMismatch, "order matrix does not match element count");
    le.close_reflexive();
    le.close_transitive();
    for (Index a = 0; a < names.size(); ++a)
        for (Index b : le.row(a).members())
            if (a != b && le.test(b, a))
                throw Error(ErrorCode::AntisymmetryViolation,
                            "cycle through '" + names[a] + "' and '" + names[b] + "'");
    Poset p;
    p.names_ = std::move(names);
    p.le_ = std::move(le);
    p.index();
    return p;
}

Poset Poset::from_pairs(std::vector<std::string> names,
                        const std::vector<std::pair<std::string, std::string>>& le) {
    std::unordered_map<std::string, Index> ids;
    for (Index i = 0; i < names.size(); ++i) ids.emplace(names[i], i);
    Relation r(names.size(), names.size());
    for (auto& [a, b] : le) {
        auto ia = ids.find(a), ib = ids.find(b);
        if (ia == ids.end()) throw Error(ErrorCode::UnknownId, a);
        if (ib == ids.end()) throw Error(ErrorCode::UnknownId, b);
        r.set(ia->second, ib->second);
    }
    return from_relation(std::move(names), std::move(r));
}

Poset Poset::antichain(std::vector<std::string> names) {
    Index n = names.size();
    return from_relation(std::move(names), Relation(n, n));
}

Poset Poset::chain(std::vector<std::string> names) {
    Index n = names.size();
    Relation r(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i; j < n; ++j) r.set(i, j);
    return from_relation(std::move(names), std::move(r));
}

std::optional<Index> Poset::find(const std::string& id) const {
    auto it = ids_.find(id);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

Index Poset::index_of(const std::string& id) const {
    auto i = find(id);
    if (!i) throw Error(ErrorCode::UnknownId, id);
    return *i;
}

BitSet Poset::upper_bounds(const BitSet& s) const {
    BitSet ub(size(), true);
    for (Index a : s.members()) ub &= up(a);
    return ub;
}

BitSet Poset::lower_bounds(const BitSet& s) const {
    BitSet lb(size(), true);
    for (Index a : s.members()) lb &= down(a);
    return lb;
}

std::optional<Index> Poset::greatest(const BitSet& s) const {
    for (Index a : s.members())
        if (s.subset_of(down(a))) return a;
    return std::nullopt;
}

std::optional<Index> Poset::least(const BitSet& s) const {
    for (Index a : s.members())
        if (s.subset_of(up(a))) return a;
    return std::nullopt;
}

bool Poset::is_complete_lattice() const {
    if (!top()) return false;
    for (Index a = 0; a < size(); ++a)
        for (Index b = a + 1; b < size(); ++b)
            if (!meet(BitSet::of(size(), {a, b}))) return false;
    return true;
}

Relation Poset::covers() const {
    Relation c(size(), size());
    for (Index a = 0; a < size(); ++a)
        for (Index b : up(a).members()) {
            if (a == b) continue;
            bool direct = true;
            for (Index m : up(a).members())
                if (m != a && m != b && leq(m, b)) { direct = false; break; }
            if (direct) c.set(a, b);
        }
    return c;
}

Poset Poset::subposet(const BitSet& keep) const {
    auto idx = keep.members();
    std::vector<std::string> names;
    Relation r(idx.size(), idx.size());
    for (Index i = 0; i < idx.size(); ++i) {
        names.push_back(names_[idx[i]]);
        for (Index j = 0; j < idx.size(); ++j)
            if (leq(idx[i], idx[j])) r.set(i, j);
    }
    return from_relation(std::move(names), std::move(r));
}

Poset Poset::dual() const { return from_relation(names_, le_.transpose()); }

Poset Poset::renamed(std::vector<std::string> names) const {
    return from_relation(std::move(names), le_);
}

}  // namespace polab
