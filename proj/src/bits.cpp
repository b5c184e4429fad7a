#include "polab/bits.hpp"

#include <bit>

namespace polab {

BitSet::BitSet(Index n, bool fill) : n_(n), w_((n + 63) / 64, fill ? ~std::uint64_t{0} : 0) { trim(); }

BitSet BitSet::of(Index n, const std::vector<Index>& members) {
    BitSet b(n);
    for (Index m : members) b.set(m);
    return b;
}

void BitSet::set(Index i, bool v) {
    auto mask = std::uint64_t{1} << (i & 63);
    if (v) w_[i >> 6] |= mask;
    else w_[i >> 6] &= ~mask;
}

void BitSet::trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
}

Index BitSet::count() const {
    Index c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool BitSet::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

bool BitSet::subset_of(const BitSet& o) const {
    for (Index i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

bool BitSet::intersects(const BitSet& o) const {
    for (Index i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

std::vector<Index> BitSet::members() const {
    std::vector<Index> out;
    for (Index i = 0; i < w_.size(); ++i) {
        auto w = w_[i];
        while (w) {
            out.push_back(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

BitSet& BitSet::operator&=(const BitSet& o) {
    for (Index i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

BitSet& BitSet::operator|=(const BitSet& o) {
    for (Index i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

BitSet& BitSet::subtract(const BitSet& o) {
    for (Index i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

BitSet BitSet::complement() const {
    BitSet c = *this;
    for (auto& w : c.w_) w = ~w;
    c.trim();
    return c;
}

bool operator<(const BitSet& a, const BitSet& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (Index i = a.w_.size(); i-- > 0;)
        if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    return false;
}

Relation::Relation(Index rows, Index cols) : rows_(rows), cols_(cols), r_(rows, BitSet(cols)) {}

Relation Relation::identity(Index n) {
    Relation r(n, n);
    for (Index i = 0; i < n; ++i) r.set(i, i);
    return r;
}

Relation Relation::full(Index rows, Index cols) {
    Relation r(rows, cols);
    for (auto& row : r.r_) row = BitSet(cols, true);
    return r;
}

BitSet Relation::column(Index j) const {
    BitSet c(rows_);
    for (Index i = 0; i < rows_; ++i)
        if (test(i, j)) c.set(i);
    return c;
}

Index Relation::count() const {
    Index c = 0;
    for (auto& row : r_) c += row.count();
    return c;
}

bool Relation::subset_of(const Relation& o) const {
    for (Index i = 0; i < rows_; ++i)
        if (!r_[i].subset_of(o.r_[i])) return false;
    return true;
}

Relation Relation::transpose() const {
    Relation t(cols_, rows_);
    for (Index i = 0; i < rows_; ++i)
        for (Index j : r_[i].members()) t.set(j, i);
    return t;
}

Relation Relation::compose(const Relation& then) const {
    Relation out(rows_, then.cols_);
    for (Index i = 0; i < rows_; ++i)
        for (Index k : r_[i].members()) out.r_[i] |= then.r_[k];
    return out;
}

Relation& Relation::operator|=(const Relation& o) {
    for (Index i = 0; i < rows_; ++i) r_[i] |= o.r_[i];
    return *this;
}

Relation& Relation::operator&=(const Relation& o) {
    for (Index i = 0; i < rows_; ++i) r_[i] &= o.r_[i];
    return *this;
}

bool Relation::reflexive() const {
    for (Index i = 0; i < rows_; ++i)
        if (!test(i, i)) return false;
    return true;
}

bool Relation::transitive() const {
    for (Index i = 0; i < rows_; ++i)
        for (Index k : r_[i].members())
            if (!r_[k].subset_of(r_[i])) return false;
    return true;
}

bool Relation::antisymmetric() const {
    for (Index i = 0; i < rows_; ++i)
        for (Index j : r_[i].members())
            if (j != i && test(j, i)) return false;
    return true;
}

void Relation::close_reflexive() {
    for (Index i = 0; i < rows_ && i < cols_; ++i) set(i, i);
}

void Relation::close_transitive() {
    for (Index k = 0; k < rows_; ++k)
        for (Index i = 0; i < rows_; ++i)
            if (test(i, k)) r_[i] |= r_[k];
}

std::vector<std::pair<Index, Index>> Relation::pairs() const {
    std::vector<std::pair<Index, Index>> out;
    for (Index i = 0; i < rows_; ++i)
        for (Index j : r_[i].members()) out.emplace_back(i, j);
    return out;
}

}  // namespace polab
