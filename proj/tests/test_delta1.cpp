#include <doctest.h>

#include "polab/delta1.hpp"
#include "polab/error.hpp"
#include "polab/oracle.hpp"
#include "support.hpp"

using namespace polab;

TEST_CASE("Gamma on objects") {
    auto i = doc(kIdentityChain).polarity("I");
    auto gi = gamma_on_objects(make_galois(i));
    CHECK(extensions_isomorphic(gi, macneille(i.base_ref()), true).has_value());

    auto k = fixture("fix_k").polarity("K");
    auto gk = gamma_on_objects(make_galois(k));
    CHECK(is_delta1(gk));
    CHECK(extensions_isomorphic(gk, macneille(k.base_ref()), true).has_value());

    auto ge = gamma_on_objects(make_galois(fixture("fix_e").polarity("E")));
    CHECK(is_delta1(ge));
    CHECK(ge.target().size() == 8);
    CHECK_THROWS_AS(gamma_on_objects(make_galois(fixture("fix_d").polarity("D"))), Error);
}

TEST_CASE("Delta on objects") {
    auto anti = share(Poset::antichain({"p", "q"}));
    auto g = delta_on_objects(macneille(anti));
    // every element of the 4-element lattice is a meet (and a join) of images
    CHECK(g.g->pol.nx() == 4);
    CHECK(g.g->pol.ny() == 4);
    CHECK(is_galois(g.g->pol));

    auto chain = share(Poset::from_pairs({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}}));
    auto base = share(Poset::chain({"a"}));
    MonotoneMap d(base, chain, {1});
    REQUIRE(is_delta1(d));
    CHECK(delta_on_objects(d).g->pol.nx() == 2);  // a and the empty meet 1
    auto full = share(Poset::chain({"a", "b", "c"}));
    auto dc = delta_on_objects(MonotoneMap::identity(full));
    CHECK(dc.g->pol.nx() == 3);
    CHECK(dc.g->pol.ny() == 3);

    auto ge = gamma_on_objects(make_galois(fixture("fix_e").polarity("E")));
    auto back = delta_on_objects(ge);
    CHECK(unit(back.g).complete);
}

TEST_CASE("unit and counit") {
    auto e = make_galois(fixture("fix_e").polarity("E"));
    auto ue = unit(e);
    CHECK(ue.eta.embedding);
    CHECK_FALSE(ue.eta.isomorphism);
    CHECK_FALSE(ue.complete);

    auto a = make_galois(fixture("fix_a").polarity("A"));
    auto ua = unit(a);
    CHECK(ua.complete);
    CHECK(ua.eta.isomorphism);
    CHECK(ua.isos_over_p == std::size_t{1});

    auto d = gamma_on_objects(make_galois(fixture("fix_k").polarity("K")));
    CHECK(counit_iso(d).g.is_isomorphism());
    auto m = macneille(share(Poset::antichain({"p", "q"})));
    CHECK(counit_iso(m).g.is_isomorphism());
}

TEST_CASE("functor laws and naturality") {
    auto d = fixture("fix_j");
    const auto& md = d.morphisms.at("h");
    auto G = make_galois(d.polarity("G"));
    auto G2 = make_galois(d.polarity("G2"));
    auto h = validate_morphism(G, G2, d.map(md.hx), d.map(md.hp), d.map(md.hy));
    auto gh = gamma_on_morphisms(h);
    CHECK(gh.g.is_isomorphism());
    CHECK(gamma_on_morphisms(identity_morphism(G)) == identity_delta1(gamma_on_objects(G)));
    auto id2 = identity_morphism(G2);
    CHECK(gamma_on_morphisms(compose(id2, h)) == compose(gamma_on_morphisms(id2), gh));
    CHECK(naturality(h));
    auto dm = delta_on_morphisms(gh);
    CHECK(dm.hp == gh.f);

    auto target = gamma_on_objects(G2);
    auto med = adjunction_mediator(compose(unit(G2).eta, h), target);
    CHECK(med.candidates == std::size_t{1});
}

TEST_CASE("universal property") {
    auto e = make_galois(fixture("fix_e").polarity("E"));
    const auto& im = e->im;
    auto u = universal_property(e, im.iota_x, im.iota_y);
    CHECK(u.is_isomorphism());
    for (Index i = 0; i < u.source().size(); ++i) CHECK(u(i) == i);

    auto n = macneille(e->XY_ref());
    auto un = universal_property(e, compose(n, im.iota_x), compose(n, im.iota_y));
    CHECK(un == n);

    // P empty, R empty: y sits below x through the empty meet, so sending
    // y above x breaks condition (1)
    auto bare = make_galois(doc("poset X { elems x; } poset Y { elems y; } polarity B { x X; y Y; rel none; }").polarity("B"));
    auto q = share(Poset::chain({"lo", "hi"}));
    MonotoneMap f(bare->pol.ex().target_ref(), q, {0});
    MonotoneMap g(bare->pol.ey().target_ref(), q, {1});
    try {
        universal_property(bare, f, g);
        FAIL("condition (1) not detected");
    } catch (const Error& x) {
        CHECK(x.code() == ErrorCode::ConditionOneFails);
    }
    MonotoneMap f1(bare->pol.ex().target_ref(), q, {1});
    MonotoneMap g0(bare->pol.ey().target_ref(), q, {0});
    CHECK(universal_property(bare, f1, g0).target().size() == 2);
}

TEST_CASE("unit extension relation") {
    for (auto [f, n] : {std::pair{"fix_e", "E"}, {"fix_k", "K"}, {"fix_a", "A"}}) {
        auto ue = unit_extension(make_galois(fixture(f).polarity(n)));
        CHECK(ue.contained);
    }
    CHECK(unit_extension(make_galois(fixture("fix_a").polarity("A"))).equal);
    CHECK_FALSE(unit_extension(make_galois(fixture("fix_k").polarity("K"))).equal);
}
