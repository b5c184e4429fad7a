#include <doctest.h>

#include <filesystem>
#include <set>

#include "polab/error.hpp"
#include "polab/evaluate.hpp"
#include "polab/laws.hpp"
#include "polab/oracle.hpp"
#include "support.hpp"

using namespace polab;

TEST_CASE("minimal document") {
    auto d = doc("poset P { elems p q; le p<q }");
    CHECK(d.poset("P").size() == 2);
    CHECK(d.poset("P").leq(0, 1));
}

TEST_CASE("parse errors carry a line") {
    try {
        doc("poset P {\n  elems p q;\n  le p<q q<p;\n}\n");
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AntisymmetryViolation);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(doc("map f { from P; to Q; send names; }"), Error);
    CHECK_THROWS_AS(doc("poset P { elems p q; le p<z; }"), Error);
    CHECK_THROWS_AS(doc("poset P { elems p q }}"), Error);
    CHECK_THROWS_AS(doc("poset P { elems p q; le p<q; } poset Q { elems a; }"
                        " map f { from P; to Q; send p->a q->a; }"
                        " polarity E { ex f; ey f; rel rl; }"),
                    Error);
}

TEST_CASE("fixtures round trip through the writer") {
    for (auto& ent : std::filesystem::directory_iterator(POLAB_FIXTURE_DIR)) {
        CAPTURE(ent.path().string());
        auto d = load_document(ent.path().string());
        auto text = write_document(d);
        auto again = parse_document(text);
        CHECK(write_document(again) == text);
        CHECK(again.expectations.size() == d.expectations.size());
    }
}

TEST_CASE("random documents round trip") {
    Rng rng(17);
    for (int k = 0; k < 100; ++k) {
        auto e = random_polarity(rng, 7);
        auto text = write_document(document_of(e));
        auto d = parse_document(text);
        CHECK(d.polarity("E").r() == e.r());
        CHECK(write_document(d) == text);
    }
}

TEST_CASE("dot output") {
    auto one = Poset::chain({"p"});
    auto dot = to_dot(one, "one");
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("->") == std::string::npos);
    CHECK(to_dot(one, "one") == dot);

    auto e = fixture("fix_e").polarity("E");
    auto q = quotient(e.union_names(), r_hat_g(e));
    std::set<std::pair<std::string, std::string>> edges;
    for (auto [a, b] : q.poset.covers().pairs()) edges.insert({q.poset.name(a), q.poset.name(b)});
    std::set<std::pair<std::string, std::string>> want{
        {"x:c=y:c", "y:y"}, {"x:d=y:d", "y:y"}, {"y:y", "x:x"}, {"x:x", "x:a=y:a"}, {"x:x", "x:b=y:b"}};
    CHECK(edges == want);
}

TEST_CASE("fixture expectations") {
    std::size_t n = 0;
    for (auto& ent : std::filesystem::directory_iterator(POLAB_FIXTURE_DIR)) {
        auto d = load_document(ent.path().string());
        for (auto& r : run_expectations(d, ent.path().filename().string())) {
            CAPTURE(r.file);
            CAPTURE(r.label);
            CHECK(r.actual == r.expected);
            CHECK_FALSE(r.cite.empty());
            ++n;
        }
    }
    CHECK(n >= 25);
}

TEST_CASE("unknown property") {
    auto d = doc("poset X { elems x; } poset Y { elems y; } polarity A { x X; y Y; rel x~y; }"
                 " expect { nonsense A = 1 \"c\"; }");
    auto rows = run_expectations(d, "t");
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].pass);
}
