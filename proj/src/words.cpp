#include "locgpd/words.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>

namespace locgpd::words {

bool well_formed(const Word& w, const FiniteLocalGroupoid& g) {
    if (w.empty()) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (g.src(w[i]) != g.tgt(w[i + 1])) return false;
    return true;
}

int word_src(const Word& w, const FiniteLocalGroupoid& g) { return g.src(w.back()); }
int word_tgt(const Word& w, const FiniteLocalGroupoid& g) { return g.tgt(w.front()); }

Word apply_move(const Word& w, const Move& m, const FiniteLocalGroupoid& g) {
    Word out;
    if (m.kind == Move::Kind::Contraction) {
        if (m.index < 0 || m.index + 1 >= static_cast<int>(w.size()))
            throw IllegalMove("contraction index out of range");
        auto p = g.product(w[m.index], w[m.index + 1]);
        if (!p) throw IllegalMove("contraction pair outside U");
        out.assign(w.begin(), w.begin() + m.index);
        out.push_back(*p);
        out.insert(out.end(), w.begin() + m.index + 2, w.end());
    } else {
        if (m.index < 0 || m.index >= static_cast<int>(w.size()))
            throw IllegalMove("expansion index out of range");
        auto p = g.product(m.left, m.right);
        if (!p || *p != w[m.index]) throw IllegalMove("expansion payload does not multiply back");
        out.assign(w.begin(), w.begin() + m.index);
        out.push_back(m.left);
        out.push_back(m.right);
        out.insert(out.end(), w.begin() + m.index + 1, w.end());
    }
    return out;
}

Move inverse_move(const Word& before, const Move& m) {
    if (m.kind == Move::Kind::Contraction)
        return Move{Move::Kind::Expansion, m.index, before[m.index], before[m.index + 1]};
    return Move{Move::Kind::Contraction, m.index, -1, -1};
}

Word MoveTrace::replay(const FiniteLocalGroupoid& g) const {
    Word w = start;
    for (const Move& m : moves) w = apply_move(w, m, g);
    return w;
}

MoveTrace MoveTrace::reversed(const FiniteLocalGroupoid& g) const {
    std::vector<Word> states{start};
    Word w = start;
    for (const Move& m : moves) {
        w = apply_move(w, m, g);
        states.push_back(w);
    }
    MoveTrace out;
    out.start = states.back();
    for (std::size_t i = moves.size(); i-- > 0;)
        out.moves.push_back(inverse_move(states[i], moves[i]));
    return out;
}

namespace {

std::map<int, std::vector<std::pair<int, int>>> factorizations(const FiniteLocalGroupoid& g) {
    std::map<int, std::vector<std::pair<int, int>>> f;
    for (const auto& [p, prod] : g.mult) f[prod].push_back(p);
    return f;
}

void neighbors(const Word& w, const FiniteLocalGroupoid& g,
               const std::map<int, std::vector<std::pair<int, int>>>& facts, int max_len,
               const std::function<void(const Move&, const Word&)>& emit) {
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i) {
        if (g.product(w[i], w[i + 1])) {
            Move m{Move::Kind::Contraction, i, -1, -1};
            emit(m, apply_move(w, m, g));
        }
    }
    if (static_cast<int>(w.size()) < max_len) {
        for (int i = 0; i < static_cast<int>(w.size()); ++i) {
            auto it = facts.find(w[i]);
            if (it == facts.end()) continue;
            for (const auto& [u, v] : it->second) {
                Move m{Move::Kind::Expansion, i, u, v};
                emit(m, apply_move(w, m, g));
            }
        }
    }
}

} // namespace

std::vector<std::pair<Move, Word>> moves_from(const Word& w, const FiniteLocalGroupoid& g) {
    if (!well_formed(w, g)) throw BadParams("moves_from: word not well-formed");
    auto facts = factorizations(g);
    std::vector<std::pair<Move, Word>> out;
    neighbors(w, g, facts, std::numeric_limits<int>::max(),
              [&](const Move& m, const Word& nw) { out.push_back({m, nw}); });
    return out;
}

namespace {

struct SearchNode {
    Word parent;
    Move move;      // move applied at parent to reach this word
    int side = 0;   // 0 = from w1, 1 = from w2
};

} // namespace

EquivalenceVerdict equivalent(const Word& w1, const Word& w2,
                              const FiniteLocalGroupoid& g, const Bounds& b) {
    if (!well_formed(w1, g) || !well_formed(w2, g))
        throw BadParams("equivalent: words must be well-formed");
    EquivalenceVerdict verdict;
    if (word_src(w1, g) != word_src(w2, g) || word_tgt(w1, g) != word_tgt(w2, g)) {
        verdict.kind = EquivalenceVerdict::Kind::SourceTargetMismatch;
        return verdict;
    }
    auto facts = factorizations(g);

    if (w1 == w2) {
        verdict.kind = EquivalenceVerdict::Kind::Equivalent;
        verdict.trace = MoveTrace{w1, {}};
        return verdict;
    }

    std::map<Word, SearchNode> visited;   // excludes the two roots
    const Word roots[2] = {w1, w2};
    std::deque<Word> frontier[2]{{w1}, {w2}};
    std::size_t steps = 0;

    auto side_of = [&](const Word& w) -> std::optional<int> {
        if (w == roots[0]) return 0;
        if (w == roots[1]) return 1;
        auto it = visited.find(w);
        if (it != visited.end()) return it->second.side;
        return std::nullopt;
    };

    struct Bridge {
        Word from;
        Move move;
        Word to;
        int side;
    };
    std::optional<Bridge> bridge;

    while ((!frontier[0].empty() || !frontier[1].empty()) && !bridge) {
        int side = frontier[0].empty() ? 1
                 : frontier[1].empty() ? 0
                 : (frontier[0].size() <= frontier[1].size() ? 0 : 1);
        std::size_t level = frontier[side].size();
        for (std::size_t i = 0; i < level && !bridge; ++i) {
            Word cur = frontier[side].front();
            frontier[side].pop_front();
            neighbors(cur, g, facts, b.max_len, [&](const Move& m, const Word& nw) {
                if (bridge || steps >= b.max_steps) return;
                ++steps;
                auto existing = side_of(nw);
                if (existing) {
                    if (*existing != side) bridge = Bridge{cur, m, nw, side};
                    return;
                }
                visited.insert({nw, SearchNode{cur, m, side}});
                frontier[side].push_back(nw);
            });
            if (steps >= b.max_steps) break;
        }
        if (steps >= b.max_steps) break;
    }

    if (!bridge) {
        verdict.kind = EquivalenceVerdict::Kind::NotWithinBounds;
        return verdict;
    }

    // chain from a root of the given side down to `end`
    auto chain_to_root = [&](Word end, int side) {
        std::vector<std::pair<Word, Move>> steps_back;
        Word cur = end;
        while (cur != roots[side]) {
            const SearchNode& n = visited.at(cur);
            steps_back.push_back({n.parent, n.move});
            cur = n.parent;
        }
        MoveTrace t;
        t.start = roots[side];
        for (auto it = steps_back.rbegin(); it != steps_back.rend(); ++it)
            t.moves.push_back(it->second);
        return t;
    };

    MoveTrace from_w1, from_w2;
    if (bridge->side == 0) {
        from_w1 = chain_to_root(bridge->from, 0);
        from_w1.moves.push_back(bridge->move);
        from_w2 = chain_to_root(bridge->to, 1);
    } else {
        from_w2 = chain_to_root(bridge->from, 1);
        from_w2.moves.push_back(bridge->move);
        from_w1 = chain_to_root(bridge->to, 0);
    }
    // full trace: w1 -> meet, then meet -> w2
    MoveTrace back = from_w2.reversed(g);
    MoveTrace full;
    full.start = w1;
    full.moves = from_w1.moves;
    full.moves.insert(full.moves.end(), back.moves.begin(), back.moves.end());
    verdict.kind = EquivalenceVerdict::Kind::Equivalent;
    verdict.trace = std::move(full);
    return verdict;
}

namespace {

/// Expansion-only closure from a seed word; parents recorded for traces.
struct UpwardClosure {
    std::map<Word, std::pair<Word, Move>> parent;   // word -> (parent, move)
    Word seed;

    MoveTrace trace_from_seed(const Word& w) const {
        std::vector<std::pair<Word, Move>> steps;
        Word cur = w;
        while (cur != seed) {
            const auto& pm = parent.at(cur);
            steps.push_back(pm);
            cur = pm.first;
        }
        MoveTrace t;
        t.start = seed;
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) t.moves.push_back(it->second);
        return t;
    }
};

UpwardClosure expansion_closure(const Word& seed, const FiniteLocalGroupoid& g,
                                const std::map<int, std::vector<std::pair<int, int>>>& facts,
                                const Bounds& b, std::size_t& steps) {
    UpwardClosure c;
    c.seed = seed;
    std::deque<Word> q{seed};
    while (!q.empty() && steps < b.max_steps) {
        Word cur = q.front();
        q.pop_front();
        if (static_cast<int>(cur.size()) >= b.max_len) continue;
        for (int i = 0; i < static_cast<int>(cur.size()) && steps < b.max_steps; ++i) {
            auto it = facts.find(cur[i]);
            if (it == facts.end()) continue;
            for (const auto& [u, v] : it->second) {
                if (steps >= b.max_steps) break;
                ++steps;
                Move m{Move::Kind::Expansion, i, u, v};
                Word nw = apply_move(cur, m, g);
                if (nw == seed || c.parent.count(nw)) continue;
                c.parent.insert({nw, {cur, m}});
                q.push_back(nw);
            }
        }
    }
    return c;
}

} // namespace

AssociatorReport associators(const FiniteLocalGroupoid& g, int x, const Bounds& b) {
    AssociatorReport rep;
    auto facts = factorizations(g);
    int unit = g.unit_of[x];
    std::size_t steps = 0;
    UpwardClosure from_unit = expansion_closure({unit}, g, facts, b, steps);

    for (int a : g.isotropy(x)) {
        std::optional<Word> common;
        std::optional<UpwardClosure> from_a;
        if (a == unit) {
            common = Word{unit};
            from_a = UpwardClosure{{}, {unit}};
        } else {
            std::size_t local_steps = 0;
            UpwardClosure c = expansion_closure({a}, g, facts, b, local_steps);
            // earliest common word in canonical order
            for (const auto& [w, pm] : c.parent) {
                (void)pm;
                if (from_unit.parent.count(w)) {
                    common = w;
                    break;
                }
            }
            from_a = std::move(c);
        }
        if (!common) continue;
        AssociatorCertificate cert;
        cert.arrow = a;
        cert.upper = *common;
        MoveTrace up_unit = (*common == Word{unit}) ? MoveTrace{{Word{unit}}, {}}
                                                    : from_unit.trace_from_seed(*common);
        MoveTrace up_arrow = (*common == Word{a}) ? MoveTrace{{Word{a}}, {}}
                                                  : from_a->trace_from_seed(*common);
        cert.to_unit = up_unit.reversed(g);
        cert.to_arrow = up_arrow.reversed(g);
        rep.found.push_back(std::move(cert));
    }
    return rep;
}

GroupoidPresentation presentation(const FiniteLocalGroupoid& g) {
    GroupoidPresentation p;
    p.component_of_object = g.components();
    int ncomp = 0;
    for (int c : p.component_of_object) ncomp = std::max(ncomp, c + 1);
    p.base_of_component.assign(ncomp, -1);
    for (std::size_t x = 0; x < g.num_objects(); ++x)
        if (p.base_of_component[p.component_of_object[x]] < 0)
            p.base_of_component[p.component_of_object[x]] = static_cast<int>(x);

    // BFS spanning forest over the arrow quiver (arrows traversed both ways)
    p.tree_arrow.assign(g.num_arrows(), false);
    std::vector<bool> seen(g.num_objects(), false);
    std::vector<std::vector<std::pair<int, int>>> adj(g.num_objects());   // (other, arrow)
    for (std::size_t a = 0; a < g.num_arrows(); ++a) {
        int ga = static_cast<int>(a);
        if (g.src(ga) != g.tgt(ga)) {
            adj[g.src(ga)].push_back({g.tgt(ga), ga});
            adj[g.tgt(ga)].push_back({g.src(ga), ga});
        }
    }
    for (int base : p.base_of_component) {
        std::deque<int> q{base};
        seen[base] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (auto [w, a] : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    p.tree_arrow[a] = true;
                    q.push_back(w);
                }
        }
    }

    // generators: non-tree, non-unit arrows, grouped per component
    p.groups.resize(ncomp);
    for (int c = 0; c < ncomp; ++c) p.groups[c].base = p.base_of_component[c];
    std::vector<int> gen_letter(g.num_arrows(), 0);   // 0 = none, else +-(index+1)
    for (std::size_t a = 0; a < g.num_arrows(); ++a) {
        int ga = static_cast<int>(a);
        if (p.tree_arrow[a] || g.is_unit(ga)) continue;
        int c = p.component_of_object[g.src(ga)];
        auto& vg = p.groups[c];
        vg.gen_arrows.push_back(ga);
        gen_letter[a] = static_cast<int>(vg.gen_arrows.size());   // 1-based within component
    }
    p.rho.assign(g.num_arrows(), {});
    for (std::size_t a = 0; a < g.num_arrows(); ++a)
        if (gen_letter[a] > 0) p.rho[a] = {gen_letter[a]};

    for (int c = 0; c < ncomp; ++c) {
        auto& vg = p.groups[c];
        vg.pres.num_generators = static_cast<int>(vg.gen_arrows.size());
        for (int a : vg.gen_arrows) vg.pres.generator_names.push_back(g.arrows[a].id);
    }
    for (const auto& [pair, prod] : g.mult) {
        int c = p.component_of_object[g.src(pair.first)];
        std::vector<int> rel;
        for (int letter : p.rho[pair.first]) rel.push_back(letter);
        for (int letter : p.rho[pair.second]) rel.push_back(letter);
        for (auto it = p.rho[prod].rbegin(); it != p.rho[prod].rend(); ++it)
            rel.push_back(-*it);
        // free reduction
        std::vector<int> red;
        for (int letter : rel) {
            if (!red.empty() && red.back() == -letter) red.pop_back();
            else red.push_back(letter);
        }
        if (!red.empty()) p.groups[c].pres.relators.push_back(std::move(red));
    }
    for (auto& vg : p.groups) {
        std::sort(vg.pres.relators.begin(), vg.pres.relators.end());
        vg.pres.relators.erase(std::unique(vg.pres.relators.begin(), vg.pres.relators.end()),
                               vg.pres.relators.end());
    }
    return p;
}

AcResult ac_build(const FiniteLocalGroupoid& g, const AcLimits& limits) {
    auto invrep = is_inversional(g);
    if (!invrep.inversional)
        throw NotInversional("ac_build requires an inversional local groupoid");
    AcResult out;
    out.pres = presentation(g);
    int ncomp = static_cast<int>(out.pres.groups.size());

    for (const auto& vg : out.pres.groups)
        out.h1_per_component.push_back(
            cokernel_invariants(vg.pres.relator_matrix(), vg.pres.num_generators));

    std::vector<CosetTable> tables;
    bool all_finite = true;
    for (const auto& vg : out.pres.groups) {
        CosetTable t = todd_coxeter(vg.pres, limits.coset_limit);
        all_finite = all_finite && t.completed;
        tables.push_back(std::move(t));
    }
    if (!all_finite) {
        bool infinite = false;
        for (const auto& h : out.h1_per_component)
            if (h.free_rank > 0) infinite = true;
        out.kind = infinite ? AcResult::Kind::InfiniteCertified : AcResult::Kind::NotStabilized;
        return out;
    }

    out.kind = AcResult::Kind::Finite;
    for (const auto& t : tables) out.vertex_group_order.push_back(t.index);

    // assemble AC: objects unchanged; arrows (y, x, h) per component
    FiniteLocalGroupoid ac;
    ac.objects = g.objects;
    std::map<std::tuple<int, int, int>, int> arrow_of;   // (tgt obj, src obj, h)
    for (std::size_t y = 0; y < g.num_objects(); ++y)
        for (std::size_t x = 0; x < g.num_objects(); ++x) {
            int cy = out.pres.component_of_object[y];
            if (cy != out.pres.component_of_object[x]) continue;
            for (int h = 0; h < tables[cy].index; ++h) {
                int id = static_cast<int>(ac.arrows.size());
                arrow_of[{static_cast<int>(y), static_cast<int>(x), h}] = id;
                ac.arrows.push_back({"ac_" + g.objects[y] + "_" + g.objects[x] + "_h" +
                                         std::to_string(h),
                                     static_cast<int>(x), static_cast<int>(y)});
            }
        }
    ac.unit_of.resize(ac.objects.size());
    for (std::size_t x = 0; x < g.num_objects(); ++x)
        ac.unit_of[x] = arrow_of.at({static_cast<int>(x), static_cast<int>(x), 0});
    for (const auto& [key1, a1] : arrow_of)
        for (const auto& [key2, a2] : arrow_of) {
            auto [z, y1, h1] = key1;
            auto [y2, x, h2] = key2;
            if (y1 != y2) continue;
            int c = out.pres.component_of_object[x];
            int h = tables[c].multiply(h1, h2);
            ac.mult[{a1, a2}] = arrow_of.at({z, x, h});
        }
    for (const auto& [key, a] : arrow_of) {
        auto [y, x, h] = key;
        int c = out.pres.component_of_object[x];
        ac.inv[a] = arrow_of.at({x, y, tables[c].inverse_of(h)});
    }
    out.ac = std::move(ac);

    out.completion_map.resize(g.num_arrows());
    for (std::size_t a = 0; a < g.num_arrows(); ++a) {
        int ga = static_cast<int>(a);
        int c = out.pres.component_of_object[g.src(ga)];
        int h = tables[c].trace(0, out.pres.rho[a]);
        out.completion_map[a] = arrow_of.at({g.tgt(ga), g.src(ga), h});
    }
    return out;
}

KernelReport completion_kernel(const FiniteLocalGroupoid& g, const Bounds& b,
                               const AcLimits& limits) {
    KernelReport rep;
    AcResult ac = ac_build(g, limits);
    if (ac.kind == AcResult::Kind::Finite) {
        rep.exact = true;
        for (std::size_t a = 0; a < g.num_arrows(); ++a)
            if (ac.ac.is_unit(ac.completion_map[a])) rep.arrows.push_back(static_cast<int>(a));
        return rep;
    }
    rep.exact = false;
    for (std::size_t x = 0; x < g.num_objects(); ++x) {
        auto ar = associators(g, static_cast<int>(x), b);
        for (const auto& c : ar.found) rep.arrows.push_back(c.arrow);
    }
    std::sort(rep.arrows.begin(), rep.arrows.end());
    rep.arrows.erase(std::unique(rep.arrows.begin(), rep.arrows.end()), rep.arrows.end());
    return rep;
}

Word map_word(const Morphism& f, const Word& w) {
    Word out;
    for (int a : w) out.push_back(f.arrow_map[a]);
    return out;
}

MoveTrace bracketing_trace(const assoc::Tuple& tuple, const assoc::Bracketing& b,
                           const FiniteLocalGroupoid& g) {
    MoveTrace t;
    t.start = tuple;
    Word cur = tuple;
    // leaf i currently sits at word position pos[i]; contracting a node's
    // span shifts everything to its right
    std::vector<int> pos(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) pos[i] = static_cast<int>(i);
    // returns (position, leftmost leaf) of the contracted span
    std::function<std::pair<int, int>(int)> contract = [&](int node) -> std::pair<int, int> {
        const auto& nd = b.nodes[node];
        if (nd.leaf >= 0) return {pos[nd.leaf], nd.leaf};
        auto [pl, leafl] = contract(nd.left);
        auto [pr, leafr] = contract(nd.right);
        (void)pr;
        (void)leafr;
        Move m{Move::Kind::Contraction, pl, -1, -1};
        t.moves.push_back(m);
        cur = apply_move(cur, m, g);
        for (std::size_t i = 0; i < pos.size(); ++i)
            if (pos[i] > pl) --pos[i];
        return {pl, leafl};
    };
    contract(b.root);
    return t;
}

std::optional<AssociatorCertificate> associator_from_failure(
    const FiniteLocalGroupoid& g, const assoc::AssocFailure& f) {
    // upper word: the tuple followed by the reversed inverses of its letters
    Word upper = f.tuple;
    for (auto it = f.tuple.rbegin(); it != f.tuple.rend(); ++it) {
        auto inv = g.inverse(*it);
        if (!inv) return std::nullopt;
        upper.push_back(*inv);
    }
    int m = static_cast<int>(f.tuple.size());
    int x = g.tgt(f.tuple.front());

    // route to the unit: cancel (letter, letter^-1) pairs from the middle out
    MoveTrace to_unit;
    to_unit.start = upper;
    Word cur = upper;
    try {
        for (int i = m - 1; i >= 0; --i) {
            Move cancel{Move::Kind::Contraction, i, -1, -1};
            cur = apply_move(cur, cancel, g);
            to_unit.moves.push_back(cancel);
            if (i > 0) {
                Move absorb{Move::Kind::Contraction, i - 1, -1, -1};
                cur = apply_move(cur, absorb, g);
                to_unit.moves.push_back(absorb);
            }
        }
    } catch (const IllegalMove&) {
        return std::nullopt;
    }
    if (cur != Word{g.unit_of[x]}) return std::nullopt;

    // route to the associator: contract the tuple along one bracketing,
    // then peel the inverse letters from the left; one of the two
    // bracketings yields a nontrivial element
    auto brs = assoc::bracketings(m);
    for (int which : {f.bracketing_b, f.bracketing_a}) {
        MoveTrace to_arrow = bracketing_trace(f.tuple, brs[which], g);
        to_arrow.start = upper;
        Word cur2 = upper;
        bool ok = true;
        try {
            for (const Move& mv : to_arrow.moves) cur2 = apply_move(cur2, mv, g);
            for (int i = 0; i < m; ++i) {
                Move mv{Move::Kind::Contraction, 0, -1, -1};
                cur2 = apply_move(cur2, mv, g);
                to_arrow.moves.push_back(mv);
            }
        } catch (const IllegalMove&) {
            ok = false;
        }
        if (!ok || cur2.size() != 1 || cur2[0] == g.unit_of[x]) continue;
        AssociatorCertificate cert;
        cert.arrow = cur2[0];
        cert.upper = upper;
        cert.to_unit = std::move(to_unit);
        cert.to_arrow = std::move(to_arrow);
        return cert;
    }
    return std::nullopt;
}

} // namespace locgpd::words
