#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace polab {

using Index = std::size_t;

// Fixed-width dynamic bitset. Element 0 is the least significant bit when
// two sets are compared.
class BitSet {
public:
    BitSet() = default;
    explicit BitSet(Index n, bool fill = false);

    static BitSet of(Index n, const std::vector<Index>& members);

    Index size() const { return n_; }
    bool test(Index i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(Index i, bool v = true);
    void reset(Index i) { set(i, false); }

    Index count() const;
    bool any() const;
    bool none() const { return !any(); }
    bool subset_of(const BitSet& o) const;
    bool intersects(const BitSet& o) const;
    std::vector<Index> members() const;

    BitSet& operator&=(const BitSet& o);
    BitSet& operator|=(const BitSet& o);
    BitSet& subtract(const BitSet& o);
    BitSet complement() const;

    friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
    friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
    friend bool operator==(const BitSet& a, const BitSet& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
    friend bool operator!=(const BitSet& a, const BitSet& b) { return !(a == b); }
    // numeric order on the characteristic vector
    friend bool operator<(const BitSet& a, const BitSet& b);

private:
    void trim();
    Index n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Boolean matrix rows x cols.
class Relation {
public:
    Relation() = default;
    Relation(Index rows, Index cols);

    static Relation identity(Index n);
    static Relation full(Index rows, Index cols);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    bool test(Index i, Index j) const { return r_[i].test(j); }
    void set(Index i, Index j, bool v = true) { r_[i].set(j, v); }
    const BitSet& row(Index i) const { return r_[i]; }
    BitSet& row(Index i) { return r_[i]; }
    BitSet column(Index j) const;

    Index count() const;
    bool subset_of(const Relation& o) const;
    Relation transpose() const;
    Relation compose(const Relation& then) const;  // this ; then
    Relation& operator|=(const Relation& o);
    Relation& operator&=(const Relation& o);
    friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
    friend Relation operator&(Relation a, const Relation& b) { return a &= b; }
    friend bool operator==(const Relation& a, const Relation& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.r_ == b.r_;
    }
    friend bool operator!=(const Relation& a, const Relation& b) { return !(a == b); }

    // square matrices only
    bool reflexive() const;
    bool transitive() const;
    bool antisymmetric() const;
    void close_reflexive();
    void close_transitive();  // Warshall
    std::vector<std::pair<Index, Index>> pairs() const;

private:
    Index rows_ = 0, cols_ = 0;
    std::vector<BitSet> r_;
};

}  // namespace polab
