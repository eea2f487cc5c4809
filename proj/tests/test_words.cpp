#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "locgpd/words.hpp"

using namespace locgpd;
using namespace locgpd::words;

namespace {

FiniteLocalGroupoid z3_without_22() {
    auto g = cyclic(3);
    std::set<std::pair<int, int>> keep;
    for (const auto& [p, prod] : g.mult) {
        (void)prod;
        keep.insert(p);
    }
    keep.erase({2, 2});
    std::set<int> keepv{0, 1, 2};
    return restrict_table(g, keep, keepv);
}

} // namespace

TEST_CASE("moves_from: unit contraction and interval expansions") {
    auto g = interval_group(1);
    int one = g.arrow_index("1");
    int zero = g.arrow_index("0");

    // (1,1): no contraction available, expansions only
    auto ms = moves_from({one, one}, g);
    bool any_contraction = false;
    bool expands_to_1_0 = false;
    for (const auto& [m, w] : ms) {
        if (m.kind == Move::Kind::Contraction) any_contraction = true;
        if (m.kind == Move::Kind::Expansion && w.size() == 3 && w[0] == one && w[1] == zero)
            expands_to_1_0 = true;
    }
    CHECK_FALSE(any_contraction);
    CHECK(expands_to_1_0);

    // (g, unit) contracts to (g)
    auto ms2 = moves_from({one, zero}, g);
    bool contracts = false;
    for (const auto& [m, w] : ms2)
        if (m.kind == Move::Kind::Contraction && w == Word{one}) contracts = true;
    CHECK(contracts);
}

TEST_CASE("moves_from: total multiplication always contracts") {
    auto g = cyclic(3);
    auto ms = moves_from({1, 2}, g);
    bool contracts = false;
    for (const auto& [m, w] : ms)
        if (m.kind == Move::Kind::Contraction && w == Word{0}) contracts = true;
    CHECK(contracts);
}

TEST_CASE("equivalent: unit absorption in one move") {
    auto g = interval_group(1);
    int one = g.arrow_index("1");
    int zero = g.arrow_index("0");
    auto v = equivalent({one, zero}, {one}, g);
    REQUIRE(v.kind == EquivalenceVerdict::Kind::Equivalent);
    REQUIRE(v.trace);
    CHECK(v.trace->moves.size() == 1);
    CHECK(v.trace->replay(g) == Word{one});
}

TEST_CASE("equivalent: (1,1,1) ~ (0) in Z/3 and the trace replays") {
    auto g = cyclic(3);
    auto v = equivalent({1, 1, 1}, {0}, g);
    REQUIRE(v.kind == EquivalenceVerdict::Kind::Equivalent);
    CHECK(v.trace->moves.size() == 2);
    CHECK(v.trace->replay(g) == Word{0});
}

TEST_CASE("equivalent: five steps around Z/5 interval stay inequivalent in bounds") {
    auto g = interval_group(1, 5);
    int one = g.arrow_index("1");
    int zero = g.arrow_index("0");
    Bounds b;
    b.max_len = 8;
    b.max_steps = 60'000;
    auto v = equivalent({one, one, one, one, one}, {zero}, g, b);
    CHECK(v.kind == EquivalenceVerdict::Kind::NotWithinBounds);
}

TEST_CASE("equivalent: endpoint mismatch verdict") {
    auto g = pair_restriction(3, {{0, 1}, {1, 2}});
    int a = g.arrow_index("p1_0");
    int b = g.arrow_index("p2_1");
    auto v = equivalent({a}, {b}, g);
    CHECK(v.kind == EquivalenceVerdict::Kind::SourceTargetMismatch);
}

TEST_CASE("random move traces always replay") {
    std::mt19937_64 rng(42);
    for (const auto& g : {cyclic(4), interval_group(2)}) {
        for (int rep = 0; rep < 100; ++rep) {
            Word w{static_cast<int>(rng() % g.num_arrows())};
            MoveTrace t;
            t.start = w;
            for (int step = 0; step < 6; ++step) {
                auto ms = moves_from(w, g);
                if (ms.empty()) break;
                auto& [m, nw] = ms[rng() % ms.size()];
                t.moves.push_back(m);
                w = nw;
            }
            CHECK(t.replay(g) == w);
            auto back = t.reversed(g);
            CHECK(back.replay(g) == t.start);
        }
    }
}

TEST_CASE("equivalent traces preserve endpoints") {
    auto g = cyclic(4);
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 40; ++rep) {
        Word w{static_cast<int>(rng() % 4)};
        for (int step = 0; step < 4; ++step) {
            auto ms = moves_from(w, g);
            w = ms[rng() % ms.size()].second;
        }
        Word w2 = w;
        for (int step = 0; step < 3; ++step) {
            auto ms = moves_from(w2, g);
            w2 = ms[rng() % ms.size()].second;
        }
        Word w0{static_cast<int>(rng() % 4)};
        if (word_src(w, g) != word_src(w2, g)) continue;
        auto v = equivalent(w, w2, g, {10, 200'000});
        REQUIRE(v.kind == EquivalenceVerdict::Kind::Equivalent);
        CHECK(v.trace->replay(g) == w2);
    }
}

TEST_CASE("associators of groups are trivial") {
    auto g = cyclic(3);
    auto rep = associators(g, 0, {6, 50'000});
    REQUIRE(rep.found.size() == 1);
    CHECK(rep.found[0].arrow == 0);
}

TEST_CASE("associators of interval_group(1) are trivial") {
    auto g = interval_group(1);
    auto rep = associators(g, 0, {6, 50'000});
    REQUIRE(rep.found.size() == 1);
    CHECK(rep.found[0].arrow == g.arrow_index("0"));
    // certificates replay
    const auto& c = rep.found[0];
    CHECK(c.to_unit.replay(g) == Word{g.unit_of[0]});
    CHECK(c.to_arrow.replay(g) == Word{c.arrow});
}

TEST_CASE("ac_build on Z/3: finite of order 3, completion bijective") {
    auto g = cyclic(3);
    auto r = ac_build(g);
    REQUIRE(r.kind == AcResult::Kind::Finite);
    REQUIRE(r.vertex_group_order.size() == 1);
    CHECK(r.vertex_group_order[0] == 3);
    CHECK(r.ac.num_arrows() == 3);
    std::set<int> image(r.completion_map.begin(), r.completion_map.end());
    CHECK(image.size() == 3);
    CHECK(validate(r.ac).axioms_pass());
}

TEST_CASE("ac_build on restricted Z/3 rebuilds Z/3") {
    auto g = z3_without_22();
    auto r = ac_build(g);
    REQUIRE(r.kind == AcResult::Kind::Finite);
    CHECK(r.vertex_group_order[0] == 3);
    std::set<int> image(r.completion_map.begin(), r.completion_map.end());
    CHECK(image.size() == 3);
}

TEST_CASE("ac_build on interval_group(1): infinite with H1 = Z") {
    auto g = interval_group(1);
    auto r = ac_build(g, {200, 64});
    REQUIRE(r.kind == AcResult::Kind::InfiniteCertified);
    REQUIRE(r.h1_per_component.size() == 1);
    CHECK(r.h1_per_component[0].free_rank == 1);
    CHECK(r.h1_per_component[0].torsion.empty());
}

TEST_CASE("ac_build on the tree pair restriction: full pair groupoid") {
    auto g = pair_restriction(4, {{0, 1}, {1, 2}, {2, 3}});
    auto r = ac_build(g);
    REQUIRE(r.kind == AcResult::Kind::Finite);
    CHECK(r.vertex_group_order == std::vector<int>{1});
    CHECK(r.ac.num_arrows() == 16);
    CHECK(validate(r.ac).axioms_pass());
    // completion map injective here (globally associative table)
    std::set<int> image(r.completion_map.begin(), r.completion_map.end());
    CHECK(image.size() == g.num_arrows());
}

TEST_CASE("ac_build requires inversional input") {
    auto g = interval_group(2);
    g.inv.clear();
    g.inv[g.arrow_index("0")] = g.arrow_index("0");
    CHECK_THROWS_AS(ac_build(g), NotInversional);
}

TEST_CASE("completion_kernel: exact on finite AC") {
    auto g = cyclic(3);
    auto k = completion_kernel(g);
    CHECK(k.exact);
    CHECK(k.arrows == std::vector<int>{0});

    auto t = pair_restriction(4, {{0, 1}, {1, 2}, {2, 3}});
    auto kt = completion_kernel(t);
    CHECK(kt.exact);
    std::vector<int> units(t.unit_of.begin(), t.unit_of.end());
    std::sort(units.begin(), units.end());
    CHECK(kt.arrows == units);
}

TEST_CASE("restriction invariance of bounded associators (matched bounds)") {
    auto full = cyclic(3);
    auto restricted = z3_without_22();
    Bounds b{6, 50'000};
    auto a1 = associators(full, 0, b);
    auto a2 = associators(restricted, 0, b);
    std::set<int> s1, s2;
    for (const auto& c : a1.found) s1.insert(c.arrow);
    for (const auto& c : a2.found) s2.insert(c.arrow);
    CHECK(s1 == s2);
}

TEST_CASE("functoriality: morphisms map words and traces") {
    auto g6 = cyclic(6);
    auto g3 = cyclic(3);
    Morphism f;
    f.dom = &g6;
    f.cod = &g3;
    f.object_map = {0};
    f.arrow_map = {0, 1, 2, 0, 1, 2};
    REQUIRE(f.valid());

    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        Word w{static_cast<int>(rng() % 6)};
        MoveTrace t;
        t.start = w;
        for (int step = 0; step < 5; ++step) {
            auto ms = moves_from(w, g6);
            auto& [m, nw] = ms[rng() % ms.size()];
            t.moves.push_back(m);
            w = nw;
        }
        // mapped trace replays on the mapped word
        MoveTrace ft;
        ft.start = map_word(f, t.start);
        Word cur = t.start;
        for (const Move& m : t.moves) {
            Move fm = m;
            if (m.kind == Move::Kind::Expansion) {
                fm.left = f.arrow_map[m.left];
                fm.right = f.arrow_map[m.right];
            }
            ft.moves.push_back(fm);
            cur = apply_move(cur, m, g6);
        }
        CHECK(ft.replay(g3) == map_word(f, w));
    }
}

TEST_CASE("presentation marks trees and units correctly") {
    auto g = pair_restriction(4, {{0, 1}, {1, 2}, {2, 3}});
    auto p = presentation(g);
    int tree_count = 0;
    for (bool b : p.tree_arrow) tree_count += b ? 1 : 0;
    CHECK(tree_count == 3);
    REQUIRE(p.groups.size() == 1);
    CHECK(p.groups[0].pres.num_generators == 9);   // 16 - 3 tree - 4 units
}
