#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "locgpd/homotopy.hpp"

using namespace locgpd;
using namespace locgpd::homotopy;

namespace {

SimplicialData five_cycle() {
    SimplicialData x;
    x.num_vertices = 5;
    for (int v = 0; v < 5; ++v) x.edges.push_back({v, (v + 1) % 5, false});
    return x;
}

int base_vertex_of_tet(const SimplicialData& x, int tet) {
    int t0 = x.tets[tet].d0;
    int e = x.tris[t0].d0;
    return x.edges[e].d0;
}

} // namespace

TEST_CASE("reduce: cancellation, units, idempotence") {
    auto n = nerve::build_nerve(cyclic(3), 2);
    auto x = from_nerve(n);
    // edges are level-1 simplices = arrows 0,1,2 with 0 the unit
    FreeWord w = make_word(x, {{1, +1}, {1, -1}});
    CHECK(w.empty());
    CHECK(w.src == 0);

    FreeWord v = make_word(x, {{1, +1}, {2, +1}, {2, -1}, {1, +1}});
    CHECK(v.letters == std::vector<std::pair<int, int>>{{1, +1}, {1, +1}});

    FreeWord already = make_word(x, {{1, +1}, {2, +1}});
    CHECK(reduce(x, already) == already);

    // unit edges act as identities
    FreeWord u = make_word(x, {{1, +1}, {0, +1}, {1, -1}});
    CHECK(u.empty());

    CHECK(reduce(x, v).size() <= 4);
    CHECK(reduce(x, reduce(x, v)) == reduce(x, v));
}

TEST_CASE("boundary2 on nerve pairs has the h.g.(gh)^-1 cyclic pattern") {
    auto g = cyclic(3);
    auto n = nerve::build_nerve(g, 2);
    auto x = from_nerve(n);
    // sigma = (1,1): d0 = 1, d2 = 1, d1 = 2
    auto it = n.index[2].find({1, 1});
    REQUIRE(it != n.index[2].end());
    FreeWord b = boundary2(x, it->second);
    // composition order: (d1)^-1 . d2 . d0 = 2^-1 . 1 . 1
    CHECK(b.letters == std::vector<std::pair<int, int>>{{2, -1}, {1, +1}, {1, +1}});
    CHECK(b.src == b.tgt);
}

TEST_CASE("boundary of degenerate 2-simplices is trivial") {
    auto g = cyclic(3);
    auto n = nerve::build_nerve(g, 2);
    auto x = from_nerve(n);
    for (auto& [tuple, s] : n.index[2]) {
        if (!n.degenerate(2, s)) continue;
        CHECK(boundary2(x, s).empty());
    }
}

TEST_CASE("delta2 of a conjugated generator has bounded length") {
    auto g = cyclic(3);
    auto n = nerve::build_nerve(g, 2);
    auto x = from_nerve(n);
    int sigma = n.index[2].at({1, 1});
    FreeWord w = make_word(x, {{1, +1}, {2, +1}, {1, +1}});
    auto d = delta2_gen(x, {w, sigma});
    CHECK(d.size() <= 2 * w.size() + 3);
    CHECK(d.src == w.tgt);
    CHECK(d.tgt == w.tgt);
}

TEST_CASE("delta2 respects the Gamma2 interchange relation") {
    auto g = cyclic(3);
    auto n = nerve::build_nerve(g, 2);
    auto x = from_nerve(n);
    int s1 = n.index[2].at({1, 1});
    int s2 = n.index[2].at({2, 1});
    FreeWord w1 = make_word(x, {{1, +1}});
    FreeWord w2 = make_word(x, {{2, +1}});
    FreeWord w1w2 = concat(x, w1, w2);
    FreeWord tw = concat(x, concat(x, w1, boundary2(x, s1)), w2);
    Gamma2Elt lhs{{Gamma2Gen{w1, s1}, +1}, {Gamma2Gen{w1w2, s2}, +1}};
    Gamma2Elt rhs{{Gamma2Gen{tw, s2}, +1}, {Gamma2Gen{w1, s1}, +1}};
    CHECK(delta2(x, lhs) == delta2(x, rhs));
}

TEST_CASE("delta2 . delta3 reduces to the identity on corpus 3-simplices") {
    std::vector<FiniteLocalGroupoid> corpus = {
        cyclic(3), cyclic(4), interval_group(1), interval_group(2),
        pair_restriction(4, {{0, 1}, {1, 2}, {2, 3}}),
    };
    for (const auto& g : corpus) {
        auto n = nerve::build_nerve(g, 3);
        auto x = from_nerve(n);
        for (std::size_t tet = 0; tet < x.tets.size(); ++tet) {
            int base = base_vertex_of_tet(x, static_cast<int>(tet));
            Gamma3Gen gen;
            gen.w = empty_word(base);
            gen.tet = static_cast<int>(tet);
            auto d = delta2(x, delta3(x, gen));
            INFO("groupoid with ", g.num_arrows(), " arrows, tet ", tet);
            REQUIRE(d.empty());
        }
    }
}

TEST_CASE("delta2 . delta3 with nonempty approach and conjugator") {
    auto g = cyclic(3);
    auto n = nerve::build_nerve(g, 3);
    auto x = from_nerve(n);
    FreeWord w = make_word(x, {{2, +1}, {1, +1}});
    for (std::size_t tet = 0; tet < x.tets.size(); ++tet) {
        Gamma3Gen gen;
        gen.w = w;
        gen.tet = static_cast<int>(tet);
        gen.xi = {{Gamma2Gen{w, x.tets[tet].d0}, +1}};
        auto d = delta2(x, delta3(x, gen));
        REQUIRE(d.empty());
    }
}

TEST_CASE("pi1 presentation of a 5-cycle is free of rank 1") {
    auto x = five_cycle();
    auto pi = pi1_presentation(x, 0);
    CHECK(pi.pres.num_generators == 1);
    CHECK(pi.pres.relators.empty());
    auto inv = h1(pi.pres);
    CHECK(inv.free_rank == 1);
    CHECK(inv.torsion.empty());
}

TEST_CASE("pi1 of the tree pair restriction nerve is trivial") {
    auto g = pair_restriction(4, {{0, 1}, {1, 2}, {2, 3}});
    auto n = nerve::build_nerve(g, 2);
    auto pi = pi1_presentation(from_nerve(n), 0);
    auto t = todd_coxeter(pi.pres, 10'000);
    REQUIRE(t.completed);
    CHECK(t.index == 1);
}

TEST_CASE("pi1 of the Z/3 nerve has H1 = Z/3") {
    auto n = nerve::build_nerve(cyclic(3), 2);
    auto pi = pi1_presentation(from_nerve(n), 0);
    auto inv = h1(pi.pres);
    CHECK(inv.free_rank == 0);
    REQUIRE(inv.torsion.size() == 1);
    CHECK(inv.torsion[0] == 3);
}

TEST_CASE("h1 oracle cases") {
    GroupPresentation free1{1, {}, {}};
    CHECK(h1(free1).free_rank == 1);
    GroupPresentation z3{1, {{1, 1, 1}}, {}};
    auto inv = h1(z3);
    CHECK(inv.free_rank == 0);
    CHECK(inv.torsion == std::vector<std::int64_t>{3});
}

TEST_CASE("disconnected complexes raise unless allowed") {
    SimplicialData x;
    x.num_vertices = 3;
    x.edges.push_back({0, 1, false});
    CHECK_THROWS_AS(pi1_presentation(x, 0), DisconnectedFromBasepoint);
    auto pi = pi1_presentation(x, 0, true);
    CHECK(pi.pres.num_generators == 0);
}

TEST_CASE("presentation-level H1 equals chain-level H1 across the corpus") {
    std::vector<FiniteLocalGroupoid> corpus = {
        cyclic(2), cyclic(3), cyclic(4), interval_group(1), interval_group(2),
        pair_restriction(4, {{0, 1}, {1, 2}, {2, 3}}), pair_groupoid(3),
    };
    for (const auto& g : corpus) {
        auto n = nerve::build_nerve(g, 2);
        auto pi = pi1_presentation(from_nerve(n), 0);
        CHECK(h1(pi.pres) == chain_h1(n));
    }
}

TEST_CASE("ac_vs_pi1 matches on the paper examples") {
    auto r1 = ac_vs_pi1(cyclic(3));
    CHECK(r1.h1_equal);
    REQUIRE(r1.order_ac);
    REQUIRE(r1.order_pi1);
    CHECK(*r1.order_ac == 3);
    CHECK(*r1.order_pi1 == 3);
    CHECK(r1.orders_match);

    auto r2 = ac_vs_pi1(pair_restriction(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(r2.h1_equal);
    CHECK(r2.orders_match);
    CHECK(*r2.order_ac == 1);

    auto r3 = ac_vs_pi1(interval_group(1), 0, 300);
    CHECK(r3.h1_equal);
    CHECK(r3.h1_ac.free_rank == 1);
}

TEST_CASE("image groupoid of a pair restriction is isomorphic to it") {
    auto g = pair_restriction(3, {{0, 1}, {1, 2}});
    std::vector<int> to_u;
    auto u = image_groupoid(g, &to_u);
    CHECK(u.num_arrows() == g.num_arrows());
    std::set<int> im(to_u.begin(), to_u.end());
    CHECK(im.size() == g.num_arrows());
}

TEST_CASE("simplicial monodromy: Z/3 over a point gives Z/3") {
    auto rep = simplicial_monodromy_ab(cyclic(3), 0);
    CHECK(rep.exact);
    CHECK(rep.invariants.torsion == std::vector<std::int64_t>{3});
    CHECK(rep.invariants.free_rank == 0);
}

TEST_CASE("simplicial monodromy: tree pair restriction is trivial") {
    auto rep = simplicial_monodromy_ab(pair_restriction(4, {{0, 1}, {1, 2}, {2, 3}}), 0);
    CHECK(rep.exact);
    CHECK(rep.invariants.trivial());
}

TEST_CASE("simplicial monodromy: interval_group(1,5) detects Z") {
    auto rep = simplicial_monodromy_ab(interval_group(1, 5), 0);
    CHECK(rep.exact);
    CHECK(rep.invariants.free_rank == 1);
    CHECK(rep.invariants.torsion.empty());
}
