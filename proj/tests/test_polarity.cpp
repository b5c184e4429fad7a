#include <doctest.h>

#include <algorithm>

#include "polab/coherence.hpp"
#include "polab/error.hpp"
#include "support.hpp"

using namespace polab;

namespace {
ExtensionPolarity single_pair(bool related) {
    auto x = share(Poset::chain({"x"}));
    auto y = share(Poset::chain({"y"}));
    Relation r(1, 1);
    if (related) r.set(0, 0);
    return ExtensionPolarity::order_polarity(x, y, r);
}
Index u(const ExtensionPolarity& e, const std::string& n) {
    auto names = e.union_names();
    return std::find(names.begin(), names.end(), n) - names.begin();
}
}  // namespace

TEST_CASE("coherence levels with witnesses") {
    auto c = fixture("fix_c").polarity("C");
    auto rc = check_coherence(c);
    CHECK(rc.level == 1);
    CHECK_FALSE(rc[Cond::C5].holds);
    CHECK(rc[Cond::C5].witness.str() == "x1=p p=q x2=q");

    auto b = fixture("fix_b").polarity("B");
    auto rb = check_coherence(b);
    CHECK(rb.level == 2);
    CHECK_FALSE(rb[Cond::C7].holds);
    CHECK(rb[Cond::C7].witness.str().find("S={p,q}") != std::string::npos);

    auto i = doc(kIdentityChain).polarity("I");
    CHECK(check_coherence(i).galois);
}

TEST_CASE("r_zero") {
    auto a = single_pair(true);
    auto r0 = r_zero(a);
    CHECK(r0.count() == 3);
    CHECK(r0.test(0, 1));
    CHECK(r_zero(single_pair(false)) == Relation::identity(2));

    auto c = fixture("fix_c").polarity("C");
    auto z = r_zero(c);
    CHECK(z.count() == 4 + 3);
    CHECK(z.test(u(c, "x:p"), u(c, "y:p")));
    CHECK(z.test(u(c, "x:q"), u(c, "y:q")));
    CHECK(z.test(u(c, "x:p"), u(c, "y:q")));
}

TEST_CASE("r_hat_m") {
    auto c = fixture("fix_c").polarity("C");
    auto m = r_hat_m(c);
    CHECK(m.transitive());
    auto q = quotient(c.union_names(), m);
    CHECK(q.poset.size() == 2);
    CHECK(q.poset.covers().count() == 1);
    CHECK(r_hat_m(fixture("fix_b").polarity("B")).transitive());

    auto i = doc(kIdentityChain).polarity("I");
    auto mi = r_hat_m(i);
    CHECK(mi.test(u(i, "x:a"), u(i, "y:a")));
    CHECK(mi.test(u(i, "y:a"), u(i, "x:a")));
}

TEST_CASE("r_hat_g and Z_S, Z_T") {
    // empty S is allowed: its meet is the top of X, its join the bottom of Y
    auto a = single_pair(true);
    CHECK(z_s(a).count() == 1);
    CHECK(z_t(a).count() == 1);
    CHECK(r_hat_g(a) == Relation::full(2, 2));
    CHECK(preorder_grade(a, r_hat_g(a)) == 3);

    auto e = fixture("fix_e").polarity("E");
    auto g = r_hat_g(e);
    CHECK(g.test(u(e, "y:y"), u(e, "x:x")));
    CHECK(preorder_grade(e, g) == 3);
}

TEST_CASE("r_l") {
    auto i = doc(kIdentityChain).polarity("I");
    auto rl = r_l(i.ex(), i.ey());
    for (Index x = 0; x < 3; ++x)
        for (Index y = 0; y < 3; ++y) CHECK(rl.test(x, y) == i.X().leq(x, y));
    auto b = fixture("fix_b").polarity("B");
    CHECK(b.R(b.X().index_of("x"), b.Y().index_of("r")));
    CHECK(is_galois(fixture("fix_k").polarity("K")));
}

TEST_CASE("is_n_preorder") {
    auto a = single_pair(true);
    CHECK(is_n_preorder(a, r_zero(a), 2).ok);
    auto p3 = is_n_preorder(a, r_zero(a), 3);
    CHECK_FALSE(p3.ok);
    CHECK(p3.clause == "P4");

    auto e = fixture("fix_e");
    auto w = e.preorders.at("W").rel;
    CHECK(is_n_preorder(e.polarity("E"), w, 2).ok);
    CHECK_FALSE(is_n_preorder(e.polarity("E"), w, 3).ok);

    auto f = fixture("fix_f").polarity("F");
    CHECK(is_n_preorder(f, r_hat_g(f), 3).ok);
    CHECK_THROWS_AS(is_n_preorder(f, Relation::identity(2), 1), Error);
}

TEST_CASE("enumeration") {
    auto a = single_pair(false);
    auto all = enumerate_n_preorders(a, 0);
    CHECK(all.preorders.size() == 2);
    auto c = fixture("fix_c").polarity("C");
    CHECK(enumerate_n_preorders(c, 2).preorders.empty());

    for (int n = 0; n <= 3; ++n) {
        auto res = enumerate_n_preorders(fixture("fix_a").polarity("A"), n);
        if (res.preorders.empty()) continue;
        Relation meet = res.preorders.front();
        for (auto& r : res.preorders) meet &= r;
        CHECK(is_n_preorder(fixture("fix_a").polarity("A"), meet, n).ok);
    }
}

TEST_CASE("equivalence matrix") {
    auto b = fixture("fix_b").polarity("B");
    EnumOptions o;
    o.max_carrier = 8;
    for (auto& row : coherence_equivalences(b, o)) {
        CHECK(row.consistent());
        if (row.n == 3) CHECK_FALSE(row.exists);
        if (row.n == 2) CHECK(row.exists);
    }
    for (auto& row : coherence_equivalences(fixture("fix_a").polarity("A"))) CHECK(row.consistent());
}

TEST_CASE("entanglement") {
    CHECK(is_entangled(fixture("fix_e").polarity("E")));
    CHECK_FALSE(is_entangled(fixture("fix_c").polarity("C")));
    auto x = share(Poset::chain({"a", "b"}));
    auto y = share(Poset::antichain({}));
    CHECK_FALSE(is_entangled(ExtensionPolarity::order_polarity(x, y, Relation(2, 0))));
}

TEST_CASE("galois by two routes") {
    auto e = fixture("fix_e").polarity("E");
    CHECK(is_galois(e));
    CHECK(galois_via_s1s2(e));
    CHECK_FALSE(is_galois(fixture("fix_d").polarity("D")));
    auto i = doc(kIdentityChain).polarity("I");
    CHECK(is_galois(i));
    CHECK(galois_via_s1s2(i));
}

TEST_CASE("unique 3-preorder and the intermediate structure") {
    auto e = fixture("fix_e").polarity("E");
    auto g = unique_3preorder(e);
    CHECK(g == r_hat_g(e));
    CHECK(g != fixture("fix_e").preorders.at("W").rel);
    CHECK_THROWS_AS(unique_3preorder(fixture("fix_d").polarity("D")), Error);

    auto i = doc(kIdentityChain).polarity("I");
    auto im = intermediate_structure(i, unique_3preorder(i));
    CHECK(im.poset->size() == 3);
    CHECK(im.gamma.is_isomorphism());

    auto c = fixture("fix_c").polarity("C");
    auto ic = intermediate_structure(c, r_hat_m(c));
    CHECK(ic.poset->size() == 2);
    CHECK(ic.gamma.is_surjective());

    auto f = fixture("fix_f").polarity("F");
    auto iff = intermediate_structure(f, r_hat_g(f));
    CHECK(iff.poset->size() == 8);
}
