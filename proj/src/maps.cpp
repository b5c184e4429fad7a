#include "polab/maps.hpp"

#include <algorithm>

namespace polab {

MonotoneMap::MonotoneMap(PosetRef src, PosetRef dst, std::vector<Index> values)
    : src_(std::move(src)), dst_(std::move(dst)), f_(std::move(values)) {
    if (f_.size() != src_->size()) throw Error(ErrorCode::CarrierMismatch, "map arity differs from source size");
    for (Index v : f_)
        if (v >= dst_->size()) throw Error(ErrorCode::CarrierMismatch, "map value outside target");
    for (Index a = 0; a < f_.size(); ++a)
        for (Index b : src_->up(a).members())
            if (!dst_->leq(f_[a], f_[b]))
                throw Error(ErrorCode::NotMonotone,
                            src_->name(a) + "<=" + src_->name(b) + " but images are not ordered");
}

MonotoneMap MonotoneMap::identity(PosetRef p) {
    std::vector<Index> v(p->size());
    for (Index i = 0; i < v.size(); ++i) v[i] = i;
    return MonotoneMap(p, p, std::move(v));
}

MonotoneMap MonotoneMap::by_name(PosetRef src, PosetRef dst,
                                 const std::vector<std::pair<std::string, std::string>>& assignment) {
    std::vector<std::optional<Index>> v(src->size());
    for (auto& [a, b] : assignment) v[src->index_of(a)] = dst->index_of(b);
    std::vector<Index> out;
    for (Index i = 0; i < v.size(); ++i) {
        if (!v[i]) throw Error(ErrorCode::UnknownId, "no image given for '" + src->name(i) + "'");
        out.push_back(*v[i]);
    }
    return MonotoneMap(std::move(src), std::move(dst), std::move(out));
}

MonotoneMap MonotoneMap::inclusion(PosetRef sub, PosetRef dst) {
    std::vector<Index> v;
    for (auto& n : sub->names()) v.push_back(dst->index_of(n));
    return MonotoneMap(std::move(sub), std::move(dst), std::move(v));
}

bool MonotoneMap::is_injective() const {
    BitSet seen(target().size());
    for (Index v : f_) {
        if (seen.test(v)) return false;
        seen.set(v);
    }
    return true;
}

bool MonotoneMap::is_surjective() const { return image().count() == target().size(); }

bool MonotoneMap::is_embedding() const {
    for (Index a = 0; a < f_.size(); ++a)
        for (Index b = 0; b < f_.size(); ++b)
            if (target().leq(f_[a], f_[b]) != source().leq(a, b)) return false;
    return true;
}

BitSet MonotoneMap::image() const { return image(source().all()); }

BitSet MonotoneMap::image(const BitSet& s) const {
    BitSet out(target().size());
    for (Index a : s.members()) out.set(f_[a]);
    return out;
}

BitSet MonotoneMap::preimage(const BitSet& q) const {
    BitSet out(source().size());
    for (Index a = 0; a < f_.size(); ++a)
        if (q.test(f_[a])) out.set(a);
    return out;
}

bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.f_ == b.f_ && a.source() == b.source() && a.target() == b.target();
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
    if (!(f.target() == g.source())) throw Error(ErrorCode::DomainMismatch, "cannot compose maps");
    std::vector<Index> v;
    for (Index a = 0; a < f.source().size(); ++a) v.push_back(g(f(a)));
    return MonotoneMap(f.source_ref(), g.target_ref(), std::move(v));
}

void require_embedding(const MonotoneMap& e, const std::string& what) {
    if (!e.is_embedding()) throw Error(ErrorCode::NotEmbedding, what + " is not an order embedding");
}

BitSet meet_closure(const Extension& e) {
    const Poset& q = e.target();
    BitSet out(q.size());
    for (Index t = 0; t < q.size(); ++t) {
        auto m = q.meet(e.image(e.preimage(q.up(t))));
        if (m && *m == t) out.set(t);
    }
    return out;
}

BitSet join_closure(const Extension& e) {
    const Poset& q = e.target();
    BitSet out(q.size());
    for (Index t = 0; t < q.size(); ++t) {
        auto j = q.join(e.image(e.preimage(q.down(t))));
        if (j && *j == t) out.set(t);
    }
    return out;
}

bool is_meet_extension(const Extension& e) { return meet_closure(e).count() == e.target().size(); }
bool is_join_extension(const Extension& e) { return join_closure(e).count() == e.target().size(); }
bool is_completion(const Extension& e) { return e.target().is_complete_lattice(); }

bool is_dense(const Extension& e) {
    const Poset& q = e.target();
    BitSet m = meet_closure(e), j = join_closure(e);
    for (Index t = 0; t < q.size(); ++t) {
        auto a = q.join(m & q.down(t));
        auto b = q.meet(j & q.up(t));
        if (!a || *a != t || !b || *b != t) return false;
    }
    return true;
}

// On finite carriers every meet/join is already finite.
bool is_compact(const Extension& e) {
    (void)e;
    return true;
}

bool is_delta1(const Extension& e) {
    if (!is_completion(e)) throw Error(ErrorCode::NotCompleteLattice, "target of extension is not a complete lattice");
    return is_dense(e) && is_compact(e);
}

std::string set_name(const std::vector<std::string>& names, const BitSet& s) {
    std::string out = "{";
    bool first = true;
    for (Index i : s.members()) {
        if (!first) out += ",";
        out += names[i];
        first = false;
    }
    return out + "}";
}

std::vector<BitSet> macneille_cuts(const Poset& p) {
    std::vector<BitSet> fam{p.all()};
    for (Index a = 0; a < p.size(); ++a) fam.push_back(p.down(a));
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    for (bool grew = true; grew;) {
        grew = false;
        Index n = fam.size();
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j) {
                BitSet c = fam[i] & fam[j];
                if (!std::binary_search(fam.begin(), fam.end(), c)) {
                    fam.insert(std::lower_bound(fam.begin(), fam.end(), c), c);
                    grew = true;
                }
            }
    }
    return fam;
}

Extension macneille(PosetRef p) {
    auto cuts = macneille_cuts(*p);
    std::vector<std::string> names;
    for (auto& c : cuts) {
        auto g = p->greatest(c);
        names.push_back(g ? p->name(*g) : set_name(p->names(), c));
    }
    Relation le(cuts.size(), cuts.size());
    for (Index i = 0; i < cuts.size(); ++i)
        for (Index j = 0; j < cuts.size(); ++j)
            if (cuts[i].subset_of(cuts[j])) le.set(i, j);
    auto n = share(Poset::from_relation(std::move(names), std::move(le)));
    std::vector<Index> e;
    for (Index a = 0; a < p->size(); ++a)
        e.push_back(std::lower_bound(cuts.begin(), cuts.end(), p->down(a)) - cuts.begin());
    return MonotoneMap(std::move(p), std::move(n), std::move(e));
}

bool is_cut_stable(const MonotoneMap& f) {
    const Poset& p = f.source();
    const Poset& q = f.target();
    for (Index q1 = 0; q1 < q.size(); ++q1)
        for (Index q2 = 0; q2 < q.size(); ++q2) {
            if (q.leq(q1, q2)) continue;
            BitSet a = f.preimage(q.up(q1)), b = f.preimage(q.down(q2));
            bool found = false;
            for (Index p1 = 0; p1 < p.size() && !found; ++p1) {
                if (!a.subset_of(p.up(p1))) continue;
                for (Index p2 = 0; p2 < p.size(); ++p2)
                    if (!p.leq(p1, p2) && b.subset_of(p.down(p2))) { found = true; break; }
            }
            if (!found) return false;
        }
    return true;
}

bool is_complete_homomorphism(const MonotoneMap& g) {
    const Poset& a = g.source();
    const Poset& b = g.target();
    if (!a.is_complete_lattice() || !b.is_complete_lattice()) return false;
    if (g(*a.top()) != *b.top() || g(*a.bottom()) != *b.bottom()) return false;
    for (Index x = 0; x < a.size(); ++x)
        for (Index y = x + 1; y < a.size(); ++y) {
            BitSet xy = BitSet::of(a.size(), {x, y});
            BitSet gxy = BitSet::of(b.size(), {g(x), g(y)});
            if (g(*a.meet(xy)) != *b.meet(gxy) || g(*a.join(xy)) != *b.join(gxy)) return false;
        }
    return true;
}

MonotoneMap macneille_lift(const MonotoneMap& f, const Extension& e_src, const Extension& e_dst) {
    if (!(e_src.source() == f.source()) || !(e_dst.source() == f.target()))
        throw Error(ErrorCode::DomainMismatch, "completions do not match the map");
    if (!is_cut_stable(f)) throw Error(ErrorCode::NotCutStable, "map is not cut-stable");
    if (!is_completion(e_src) || !is_completion(e_dst))
        throw Error(ErrorCode::NotCompleteLattice, "lift needs complete targets");
    const Poset& np = e_src.target();
    const Poset& nq = e_dst.target();
    std::vector<Index> v;
    for (Index c = 0; c < np.size(); ++c) {
        BitSet s(nq.size());
        for (Index p = 0; p < f.source().size(); ++p)
            if (np.leq(e_src(p), c)) s.set(e_dst(f(p)));
        v.push_back(*nq.join(s));
    }
    MonotoneMap lift(e_src.target_ref(), e_dst.target_ref(), std::move(v));
    ensure(is_complete_homomorphism(lift), "lift is not a complete homomorphism");
    ensure(compose(lift, e_src) == compose(e_dst, f), "lift does not commute with the completions");
    return lift;
}

MonotoneMap macneille_lift(const MonotoneMap& f) {
    return macneille_lift(f, macneille(f.source_ref()), macneille(f.target_ref()));
}

bool preserves_meets(const MonotoneMap& f, const std::optional<BitSet>& domain) {
    const Poset& a = f.source();
    const Poset& b = f.target();
    BitSet dom = domain ? *domain : a.all();
    for (Index x = 0; x < a.size(); ++x) {
        BitSet above = a.up(x) & dom;
        for (Index u = 0; u < b.size(); ++u) {
            if (b.leq(u, f(x))) continue;
            BitSet bset(a.size());
            for (Index z : above.members())
                if (b.leq(u, f(z))) bset.set(z);
            auto m = a.meet(bset);
            if (m && *m == x) return false;
        }
    }
    return true;
}

bool preserves_joins(const MonotoneMap& f, const std::optional<BitSet>& domain) {
    const Poset& a = f.source();
    const Poset& b = f.target();
    BitSet dom = domain ? *domain : a.all();
    for (Index x = 0; x < a.size(); ++x) {
        BitSet below = a.down(x) & dom;
        for (Index u = 0; u < b.size(); ++u) {
            if (b.leq(f(x), u)) continue;
            BitSet bset(a.size());
            for (Index z : below.members())
                if (b.leq(f(z), u)) bset.set(z);
            auto j = a.join(bset);
            if (j && *j == x) return false;
        }
    }
    return true;
}

bool check_galois_connection(const MonotoneMap& alpha, const MonotoneMap& beta) {
    if (!(alpha.source() == beta.target()) || !(alpha.target() == beta.source()))
        throw Error(ErrorCode::DomainMismatch, "maps do not run in opposite directions");
    const Poset& p = alpha.source();
    const Poset& q = alpha.target();
    for (Index x = 0; x < p.size(); ++x)
        for (Index y = 0; y < q.size(); ++y)
            if (q.leq(alpha(x), y) != p.leq(x, beta(y))) return false;
    return true;
}

namespace {

struct IsoSearch {
    const Poset& a;
    const Poset& b;
    const std::vector<std::optional<Index>>& fixed;
    const std::function<bool(const std::vector<Index>&)>& visit;
    std::vector<Index> f;
    BitSet used;
    bool stopped = false;

    bool compatible(Index x, Index y) const {
        if (a.up(x).count() != b.up(y).count() || a.down(x).count() != b.down(y).count()) return false;
        for (Index z = 0; z < x; ++z) {
            if (a.leq(x, z) != b.leq(y, f[z]) || a.leq(z, x) != b.leq(f[z], y)) return false;
        }
        return true;
    }

    void run(Index x) {
        if (stopped) return;
        if (x == a.size()) {
            if (!visit(f)) stopped = true;
            return;
        }
        auto try_one = [&](Index y) {
            if (used.test(y) || !compatible(x, y)) return;
            f[x] = y;
            used.set(y);
            run(x + 1);
            used.reset(y);
        };
        if (x < fixed.size() && fixed[x]) try_one(*fixed[x]);
        else
            for (Index y = 0; y < b.size() && !stopped; ++y) try_one(y);
    }
};

}  // namespace

void for_each_order_iso(const Poset& a, const Poset& b, const std::vector<std::optional<Index>>& fixed,
                        const std::function<bool(const std::vector<Index>&)>& visit) {
    if (a.size() != b.size() || a.order().count() != b.order().count()) return;
    IsoSearch s{a, b, fixed, visit, std::vector<Index>(a.size()), BitSet(b.size())};
    s.run(0);
}

std::optional<std::vector<Index>> find_order_iso(const Poset& a, const Poset& b,
                                                 const std::vector<std::optional<Index>>& fixed) {
    std::optional<std::vector<Index>> out;
    for_each_order_iso(a, b, fixed, [&](const std::vector<Index>& f) {
        out = f;
        return false;
    });
    return out;
}

std::optional<ExtensionIso> extensions_isomorphic(const Extension& e1, const Extension& e2, bool fix_base) {
    const Poset& p1 = e1.source();
    const Poset& p2 = e2.source();
    std::optional<ExtensionIso> out;
    auto try_base = [&](const std::vector<Index>& gp) {
        std::vector<std::optional<Index>> fixed(e1.target().size());
        for (Index p = 0; p < p1.size(); ++p) {
            Index want = e2(gp[p]);
            auto& slot = fixed[e1(p)];
            if (slot && *slot != want) return true;
            slot = want;
        }
        auto gq = find_order_iso(e1.target(), e2.target(), fixed);
        if (gq) {
            out = ExtensionIso{gp, *gq};
            return false;
        }
        return true;
    };
    if (fix_base) {
        if (!(p1 == p2)) throw Error(ErrorCode::DomainMismatch, "bases differ");
        std::vector<Index> id(p1.size());
        for (Index i = 0; i < id.size(); ++i) id[i] = i;
        try_base(id);
    } else {
        for_each_order_iso(p1, p2, {}, try_base);
    }
    return out;
}

Quotient quotient(const std::vector<std::string>& names, const Relation& pre) {
    if (pre.rows() != names.size() || pre.cols() != names.size())
        throw Error(ErrorCode::CarrierMismatch, "preorder does not match carrier");
    if (!pre.reflexive() || !pre.transitive())
        throw Error(ErrorCode::PreconditionViolation, "relation is not a preorder");
    Quotient q;
    const Index none = static_cast<Index>(-1);
    q.cls.assign(names.size(), none);
    for (Index a = 0; a < names.size(); ++a) {
        if (q.cls[a] != none) continue;
        Index c = q.members.size();
        q.members.emplace_back();
        for (Index b = a; b < names.size(); ++b)
            if (pre.test(a, b) && pre.test(b, a)) {
                q.cls[b] = c;
                q.members.back().push_back(b);
            }
    }
    std::vector<std::string> cnames;
    for (auto& m : q.members) {
        std::string s;
        for (Index i : m) s += (s.empty() ? "" : "=") + names[i];
        cnames.push_back(s);
    }
    Relation le(q.members.size(), q.members.size());
    for (Index i = 0; i < q.members.size(); ++i)
        for (Index j = 0; j < q.members.size(); ++j)
            if (pre.test(q.members[i][0], q.members[j][0])) le.set(i, j);
    q.poset = Poset::from_relation(std::move(cnames), std::move(le));
    return q;
}

void for_each_monotone(const Poset& a, const Poset& b, const std::vector<std::optional<Index>>& fixed,
                       const std::function<bool(const std::vector<Index>&)>& visit) {
    std::vector<Index> val(a.size());
    bool stop = false;
    std::function<void(Index)> go = [&](Index i) {
        if (i == a.size()) {
            stop = !visit(val);
            return;
        }
        for (Index v = 0; v < b.size() && !stop; ++v) {
            if (i < fixed.size() && fixed[i] && *fixed[i] != v) continue;
            bool ok = true;
            for (Index k = 0; k < i && ok; ++k) {
                if (a.leq(k, i) && !b.leq(val[k], v)) ok = false;
                if (a.leq(i, k) && !b.leq(v, val[k])) ok = false;
            }
            if (!ok) continue;
            val[i] = v;
            go(i + 1);
        }
    };
    go(0);
}

}  // namespace polab
