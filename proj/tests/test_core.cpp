#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "locgpd/core.hpp"
#include "locgpd/json_io.hpp"

using namespace locgpd;

TEST_CASE("cyclic group validates and is 3-associative") {
    auto g = cyclic(3);
    auto rep = validate(g);
    CHECK(rep.axioms_pass());
    CHECK(rep.three_associative);
    CHECK(rep.v_pairs_in_u);
}

TEST_CASE("interval_group(1) has 7 of 9 pairs in U") {
    auto g = interval_group(1);
    CHECK(g.num_arrows() == 3);
    CHECK(g.num_objects() == 1);
    CHECK(g.mult.size() == 7);
    int one = g.arrow_index("1");
    int mone = g.arrow_index("m1");
    CHECK_FALSE(g.product(one, one));
    CHECK_FALSE(g.product(mone, mone));
    auto rep = validate(g);
    CHECK(rep.axioms_pass());
    CHECK(rep.three_associative);
    CHECK_FALSE(rep.v_pairs_in_u);   // (1,1) composes but is outside U
}

TEST_CASE("interval_group(1,5) builds the same table as interval_group(1)") {
    auto a = interval_group(1);
    auto b = interval_group(1, 5);
    CHECK(a.mult == b.mult);
    CHECK(a.inv == b.inv);
}

TEST_CASE("interval_group(2,5) is the full group table of Z/5") {
    auto g = interval_group(2, 5);
    CHECK(g.mult.size() == 25);
    CHECK(validate(g).axioms_pass());
}

TEST_CASE("source axiom failure is reported with a witness") {
    auto g = cyclic(3);
    // corrupt: redirect product of (1,1) to an arrow with wrong endpoints is
    // impossible over one object; build a two-object table instead
    auto p = pair_restriction(2, {{0, 1}});
    // break: p01 * p10 should be unit at 1; point it at unit of 0
    int a = p.arrow_index("p0_1");
    int b = p.arrow_index("p1_0");
    p.mult[{a, b}] = p.unit_of[1];   // wrong src/tgt
    auto rep = validate(p);
    CHECK_FALSE(rep.axioms_pass());
    bool found = false;
    for (const auto& ax : rep.axioms)
        if (ax.name == "source_target_of_products" && !ax.passed) found = true;
    CHECK(found);
}

TEST_CASE("restrict keeps axioms; identity restriction is the identity") {
    auto g = cyclic(3);
    std::set<std::pair<int, int>> keep;
    for (const auto& [p, prod] : g.mult) {
        (void)prod;
        keep.insert(p);
    }
    std::set<int> keepv;
    for (const auto& [a, ai] : g.inv) {
        (void)ai;
        keepv.insert(a);
    }
    auto r = restrict_table(g, keep, keepv);
    CHECK(r.mult == g.mult);
    CHECK(r.inv == g.inv);

    // drop (2,2): still valid, still inversional
    keep.erase({2, 2});
    auto r2 = restrict_table(g, keep, keepv);
    CHECK(validate(r2).axioms_pass());
    CHECK(is_inversional(r2).inversional);

    // double restriction with the same sets is idempotent
    auto r3 = restrict_table(r2, keep, keepv);
    CHECK(r3.mult == r2.mult);
}

TEST_CASE("removing a unit pair raises UnitPairRemoved") {
    auto g = cyclic(3);
    std::set<std::pair<int, int>> keep;
    for (const auto& [p, prod] : g.mult) {
        (void)prod;
        keep.insert(p);
    }
    std::set<int> keepv{0, 1, 2};
    keep.erase({0, 1});   // (unit, g)
    CHECK_THROWS_AS(restrict_table(g, keep, keepv), UnitPairRemoved);
}

TEST_CASE("is_inversional on groups and intervals") {
    CHECK(is_inversional(cyclic(3)).inversional);
    auto g = interval_group(1);
    auto rep = is_inversional(g);
    CHECK(rep.inversional);
    // every certificate evaluates back to its arrow
    for (const auto& [a, cert] : rep.certificates) {
        auto v = cert.evaluate(g);
        REQUIRE(v);
        CHECK(*v == a);
    }
}

TEST_CASE("arrow outside the closure of V is reported") {
    auto g = interval_group(2);
    // shrink V to {0}: +-1, +-2 are no longer products of V-elements
    g.inv.clear();
    g.inv[g.arrow_index("0")] = g.arrow_index("0");
    auto rep = is_inversional(g);
    CHECK_FALSE(rep.inversional);
    CHECK(rep.unreachable.size() == 4);
}

TEST_CASE("is_inversional is monotone in V") {
    auto small = interval_group(2);
    small.inv.clear();
    small.inv[small.arrow_index("0")] = small.arrow_index("0");
    small.inv[small.arrow_index("1")] = small.arrow_index("m1");
    small.inv[small.arrow_index("m1")] = small.arrow_index("1");
    auto big = interval_group(2);
    auto rep_small = is_inversional(small);
    auto rep_big = is_inversional(big);
    if (rep_small.inversional) CHECK(rep_big.inversional);
    CHECK(rep_small.inversional);   // +-2 = 1+1 reachable
}

TEST_CASE("generates: tree edges plus units generate the pair restriction") {
    auto g = pair_restriction(4, {{0, 1}, {1, 2}, {2, 3}});
    std::set<int> s;
    for (int u : g.unit_of) s.insert(u);
    for (const auto& [a, ai] : g.inv) {
        (void)ai;
        s.insert(a);
    }
    CHECK(generates(g, s));

    std::set<int> all;
    for (std::size_t a = 0; a < g.num_arrows(); ++a) all.insert(static_cast<int>(a));
    CHECK(generates(g, all));
}

TEST_CASE("generates: interval_group(2) from {-1,0,1}") {
    auto g = interval_group(2);
    std::set<int> s{g.arrow_index("m1"), g.arrow_index("0"), g.arrow_index("1")};
    CHECK(generates(g, s));
}

TEST_CASE("pair_restriction on a path graph keeps only edge-supported pairs") {
    auto g = pair_restriction(3, {{0, 1}, {1, 2}});
    CHECK(g.num_arrows() == 9);
    CHECK(validate(g).axioms_pass());
    int a20 = g.arrow_index("p2_0");
    int a02 = g.arrow_index("p0_2");
    // neither factor is a unit or an edge arrow
    CHECK_FALSE(g.product(a20, a02));
    // with an edge factor the product is defined
    int a21 = g.arrow_index("p2_1");
    int a10 = g.arrow_index("p1_0");
    CHECK(g.product(a21, a10));
}

TEST_CASE("validate(make_example) passes across constructors and params") {
    std::mt19937_64 rng(20260810);
    for (int rep = 0; rep < 20; ++rep) {
        int k = 1 + static_cast<int>(rng() % 4);
        CHECK(validate(interval_group(k)).axioms_pass());
        int n = 2 * k + 1 + static_cast<int>(rng() % 4);
        CHECK(validate(interval_group(k, n)).axioms_pass());
        CHECK(validate(cyclic(1 + static_cast<int>(rng() % 7))).axioms_pass());
        int nv = 2 + static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < nv; ++v)
            edges.push_back({static_cast<int>(rng() % v), v});   // random tree
        CHECK(validate(pair_restriction(nv, edges)).axioms_pass());
    }
    CHECK_THROWS_AS(interval_group(0), BadParams);
    CHECK_THROWS_AS(interval_group(2, 3), BadParams);
}

TEST_CASE("json round-trip is bit-exact on canonical output") {
    auto g = pair_restriction(3, {{0, 1}, {1, 2}});
    auto text = to_json(g);
    auto g2 = from_json(text);
    CHECK(to_json(g2) == text);
    CHECK(g2.mult == g.mult);
    CHECK(g2.inv == g.inv);
    CHECK(g2.objects == g.objects);
}

TEST_CASE("malformed json tables are rejected") {
    CHECK_THROWS_AS(from_json("{"), MalformedTable);
    CHECK_THROWS_AS(from_json(R"({"objects":["a"],"arrows":[{"id":"u","src":"a","tgt":"b"}],)"
                              R"("units":{"a":"u"},"mult":[],"inv":[]})"),
                    MalformedTable);
}
