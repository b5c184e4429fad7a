#include <doctest.h>

#include "polab/concept.hpp"
#include "polab/oracle.hpp"
#include "support.hpp"

using namespace polab;

namespace {
ExtensionPolarity op(Index nx, Index ny, const std::vector<std::pair<Index, Index>>& pairs) {
    std::vector<std::string> xs, ys;
    for (Index i = 0; i < nx; ++i) xs.push_back("x" + std::to_string(i));
    for (Index i = 0; i < ny; ++i) ys.push_back("y" + std::to_string(i));
    Relation r(nx, ny);
    for (auto [a, b] : pairs) r.set(a, b);
    return ExtensionPolarity::order_polarity(share(Poset::antichain(xs)), share(Poset::antichain(ys)), r);
}
}  // namespace

TEST_CASE("polars") {
    auto a = op(1, 1, {{0, 0}});
    CHECK(polar_right(a, BitSet(1)) == BitSet(1, true));
    CHECK(polar_right(a, BitSet(1, true)) == BitSet(1, true));

    Rng rng(4);
    for (int k = 0; k < 50; ++k) {
        auto e = random_polarity(rng, 7);
        BitSet s(e.nx());
        for (Index x = 0; x < e.nx(); ++x)
            if (rng() & 1) s.set(x);
        CHECK(s.subset_of(polar_left(e, polar_right(e, s))));
    }
}

TEST_CASE("concept lattice") {
    auto a = op(1, 1, {{0, 0}});
    CHECK(concept_lattice(a).closed.size() == 1);
    CHECK(xi(a, 0) == upsilon(a, 0));

    auto empty = op(2, 2, {});
    auto cl = concept_lattice(empty);
    CHECK(cl.closed == naive_closed_sets(empty));

    auto full = op(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(xi(full, 0) == BitSet(2, true));
    CHECK(xi(full, 1) == BitSet(2, true));

    auto k = fixture("fix_k").polarity("K");
    auto lk = concept_lattice(k);
    auto n = macneille(k.base_ref());
    CHECK(find_order_iso(*lk.lattice, n.target()).has_value());
}

TEST_CASE("order on X u Y from the four clauses") {
    auto a = op(1, 1, {{0, 0}});
    auto pa = prop_order_preorder(a);
    CHECK(pa.order.test(0, 1));
    CHECK(pa.order.test(1, 0));

    auto e = op(2, 2, {});
    auto pe = prop_order_preorder(e);
    for (Index x = 0; x < 2; ++x)
        for (Index y = 0; y < 2; ++y) {
            CHECK_FALSE(pe.order.test(e.ux(x), e.uy(y)));
            CHECK(pe.order.test(e.uy(y), e.ux(x)));
        }

    auto b = fixture("fix_b").polarity("B");
    auto pb = prop_order_preorder(b);
    CHECK(pb.greatest_checked);
}

TEST_CASE("xi and upsilon embeddings") {
    auto e = fixture("fix_e").polarity("E");
    CHECK(xi_embedding(e));
    CHECK(upsilon_embedding(e));
    auto x = share(Poset::chain({"a", "b"}));
    auto y = share(Poset::antichain({"c"}));
    CHECK_FALSE(xi_embedding(ExtensionPolarity::order_polarity(x, y, Relation(2, 1))));

    Rng rng(8);
    for (int k = 0; k < 100; ++k) {
        auto r = random_polarity(rng, 7);
        bool inj = true;
        for (Index i = 0; i < r.nx(); ++i)
            for (Index j = i + 1; j < r.nx(); ++j)
                if (xi(r, i) == xi(r, j)) inj = false;
        CHECK(inj == inj_1b(r));
    }
}

TEST_CASE("F and G") {
    auto p = share(Poset::chain({"a", "b"}));
    auto m = macneille(p);
    auto F = f_map(m, m);
    auto G = g_map(m, m);
    CHECK(check_galois_connection(F, G));
    CHECK(compose(F, m) == m);

    auto k = fixture("fix_k").polarity("K");
    auto mx = compose(macneille(k.ex().target_ref()), k.ex());
    auto my = compose(macneille(k.ey().target_ref()), k.ey());
    CHECK(check_galois_connection(f_map(mx, my), g_map(mx, my)));
    CHECK(compose(f_map(mx, my), my) == mx);
    CHECK(compose(g_map(mx, my), mx) == my);

    Rng rng(2);
    for (int n = 1; n <= 4; ++n) {
        auto q = random_poset(rng, n, "p");
        auto mq = macneille(q);
        if (mq.target().size() <= 6) CHECK(count_extending_galois_connections(mq, mq) == 1);
    }
}

TEST_CASE("Z'' against Z'") {
    auto e = fixture("fix_e").polarity("E");
    auto mx = macneille(e.ex().target_ref());
    auto my = macneille(e.ey().target_ref());
    CHECK(z_doubleprime(e, mx, my) == z_prime_yx(e));

    auto i = doc(kIdentityChain).polarity("I");
    auto zi = z_doubleprime(i, macneille(i.ex().target_ref()), macneille(i.ey().target_ref()));
    for (Index k = 0; k < 3; ++k) CHECK(zi.test(k, k));

    Rng rng(6);
    int seen = 0;
    for (int k = 0; k < 60 && seen < 20; ++k) {
        auto g = random_galois(rng, 3);
        if (!g) continue;
        ++seen;
        CHECK(z_doubleprime(*g, macneille(g->ex().target_ref()), macneille(g->ey().target_ref())) == z_prime_yx(*g));
    }
    CHECK(seen > 0);
}
