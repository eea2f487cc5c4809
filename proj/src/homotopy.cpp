#include "locgpd/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "locgpd/words.hpp"

namespace locgpd::homotopy {

SimplicialData from_nerve(const nerve::SimplicialTruncation& n) {
    SimplicialData x;
    x.num_vertices = static_cast<int>(n.g.num_objects());
    for (std::size_t s = 0; s < n.level[1].size(); ++s) {
        int a = n.level[1][s][0];
        x.edges.push_back({n.g.src(a), n.g.tgt(a), n.g.is_unit(a)});
    }
    if (n.m_max >= 2)
        for (std::size_t s = 0; s < n.level[2].size(); ++s)
            x.tris.push_back({n.face[2][0][s], n.face[2][1][s], n.face[2][2][s]});
    if (n.m_max >= 3)
        for (std::size_t s = 0; s < n.level[3].size(); ++s)
            x.tets.push_back(
                {n.face[3][0][s], n.face[3][1][s], n.face[3][2][s], n.face[3][3][s]});
    return x;
}

int letter_src(const SimplicialData& x, std::pair<int, int> l) {
    return l.second > 0 ? x.edges[l.first].d0 : x.edges[l.first].d1;
}

int letter_tgt(const SimplicialData& x, std::pair<int, int> l) {
    return l.second > 0 ? x.edges[l.first].d1 : x.edges[l.first].d0;
}

FreeWord empty_word(int at) {
    FreeWord w;
    w.src = w.tgt = at;
    return w;
}

FreeWord make_word(const SimplicialData& x, const std::vector<std::pair<int, int>>& letters) {
    if (letters.empty()) throw BadParams("make_word: use empty_word for identities");
    FreeWord w;
    w.letters = letters;
    w.src = letter_src(x, letters.back());
    w.tgt = letter_tgt(x, letters.front());
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
        if (letter_src(x, letters[i]) != letter_tgt(x, letters[i + 1]))
            throw BadParams("make_word: letters do not chain");
    return reduce(x, w);
}

FreeWord reduce(const SimplicialData& x, FreeWord w) {
    std::vector<std::pair<int, int>> out;
    for (const auto& l : w.letters) {
        if (x.edges[l.first].identity) continue;
        if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
            out.pop_back();
        else
            out.push_back(l);
    }
    FreeWord r;
    r.letters = std::move(out);
    r.src = w.src;
    r.tgt = w.tgt;
    return r;
}

FreeWord concat(const SimplicialData& x, const FreeWord& a, const FreeWord& b) {
    if (a.src != b.tgt) throw BadParams("concat: src(a) != tgt(b)");
    FreeWord w;
    w.letters = a.letters;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    w.src = b.src;
    w.tgt = a.tgt;
    return reduce(x, w);
}

FreeWord inverse_word(const SimplicialData& x, const FreeWord& w) {
    FreeWord out;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back({it->first, -it->second});
    out.src = w.tgt;
    out.tgt = w.src;
    return reduce(x, out);
}

FreeWord boundary2(const SimplicialData& x, int tri) {
    const auto& t = x.tris.at(tri);
    // loop (d1)^-1 . d2 . d0 based at d0 d1 sigma, composition order
    FreeWord w;
    w.letters = {{t.d1, -1}, {t.d2, +1}, {t.d0, +1}};
    w.src = letter_src(x, {t.d0, +1});
    w.tgt = letter_tgt(x, {t.d1, -1});
    if (w.src != w.tgt) throw BadParams("boundary2: faces do not close");
    return reduce(x, w);
}

FreeWord delta2_gen(const SimplicialData& x, const Gamma2Gen& g) {
    FreeWord b = boundary2(x, g.tri);
    return concat(x, concat(x, g.w, b), inverse_word(x, g.w));
}

FreeWord delta2(const SimplicialData& x, const Gamma2Elt& e) {
    if (e.empty()) throw BadParams("delta2: empty formal product has no basepoint");
    FreeWord acc = empty_word(e.front().first.w.tgt);
    for (const auto& [gen, sign] : e) {
        FreeWord d = delta2_gen(x, gen);
        if (sign < 0) d = inverse_word(x, d);
        acc = concat(x, acc, d);
    }
    return acc;
}

namespace {

Gamma2Elt inverse_elt(const Gamma2Elt& e) {
    Gamma2Elt out;
    for (auto it = e.rbegin(); it != e.rend(); ++it) out.push_back({it->first, -it->second});
    return out;
}

} // namespace

Gamma2Elt delta3(const SimplicialData& x, const Gamma3Gen& g) {
    const auto& tet = x.tets.at(g.tet);
    // twist edge: d0 of the 2-simplex d1(tau)
    int twist_edge = x.tris.at(tet.d1).d0;
    FreeWord twist = x.edges[twist_edge].identity
                         ? empty_word(letter_tgt(x, {twist_edge, +1}))
                         : make_word(x, {{twist_edge, +1}});
    FreeWord twisted = concat(x, g.w, inverse_word(x, twist));
    Gamma2Elt out = g.xi;
    out.push_back({Gamma2Gen{twisted, tet.d3}, -1});
    out.push_back({Gamma2Gen{g.w, tet.d1}, -1});
    out.push_back({Gamma2Gen{g.w, tet.d2}, +1});
    out.push_back({Gamma2Gen{g.w, tet.d0}, +1});
    auto inv_xi = inverse_elt(g.xi);
    out.insert(out.end(), inv_xi.begin(), inv_xi.end());
    return out;
}

Pi1Presentation pi1_presentation(const SimplicialData& x, int basepoint,
                                 bool allow_disconnected) {
    if (basepoint < 0 || basepoint >= x.num_vertices)
        throw DisconnectedFromBasepoint("basepoint vertex does not exist");
    Pi1Presentation out;
    out.basepoint = basepoint;

    std::vector<std::vector<std::pair<int, int>>> adj(x.num_vertices);   // (other, edge)
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        const auto& ed = x.edges[e];
        if (ed.identity || ed.d0 == ed.d1) continue;
        adj[ed.d0].push_back({ed.d1, static_cast<int>(e)});
        adj[ed.d1].push_back({ed.d0, static_cast<int>(e)});
    }
    std::vector<bool> in_tree(x.edges.size(), false);
    std::vector<bool> seen(x.num_vertices, false);
    out.tree_parent.assign(x.num_vertices, -1);
    std::deque<int> q{basepoint};
    seen[basepoint] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (auto [w, e] : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                in_tree[e] = true;
                out.tree_parent[w] = e;
                q.push_back(w);
            }
    }
    if (!allow_disconnected)
        for (int v = 0; v < x.num_vertices; ++v)
            if (!seen[v])
                throw DisconnectedFromBasepoint("vertex " + std::to_string(v) +
                                                " unreachable from basepoint");

    std::vector<int> letter_of_edge(x.edges.size(), 0);
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        if (x.edges[e].identity || in_tree[e]) continue;
        if (!seen[x.edges[e].d0]) continue;   // outside the component
        out.gen_edges.push_back(static_cast<int>(e));
        letter_of_edge[e] = static_cast<int>(out.gen_edges.size());
    }
    out.pres.num_generators = static_cast<int>(out.gen_edges.size());
    for (int e : out.gen_edges) out.pres.generator_names.push_back("e" + std::to_string(e));

    for (std::size_t tri = 0; tri < x.tris.size(); ++tri) {
        FreeWord b = boundary2(x, static_cast<int>(tri));
        if (!seen[b.src]) continue;
        std::vector<int> rel;
        for (const auto& [e, sign] : b.letters) {
            int letter = letter_of_edge[e];
            if (letter == 0) continue;   // tree or identity edge
            int signed_letter = sign * letter;
            if (!rel.empty() && rel.back() == -signed_letter) rel.pop_back();
            else rel.push_back(signed_letter);
        }
        if (!rel.empty()) out.pres.relators.push_back(std::move(rel));
    }
    std::sort(out.pres.relators.begin(), out.pres.relators.end());
    out.pres.relators.erase(std::unique(out.pres.relators.begin(), out.pres.relators.end()),
                            out.pres.relators.end());
    return out;
}

AbelianInvariants h1(const GroupPresentation& p) {
    return cokernel_invariants(p.relator_matrix(), p.num_generators);
}

AbelianInvariants chain_h1(const nerve::SimplicialTruncation& n) {
    if (n.m_max < 2) throw BadParams("chain_h1 needs a 2-truncation");
    std::vector<int> edge_col(n.level[1].size(), -1);
    int n1 = 0;
    for (std::size_t s = 0; s < n.level[1].size(); ++s)
        if (!n.degenerate(1, static_cast<int>(s))) edge_col[s] = n1++;
    std::vector<std::vector<std::int64_t>> d1;   // rows: edges, cols: vertices
    for (std::size_t s = 0; s < n.level[1].size(); ++s) {
        if (edge_col[s] < 0) continue;
        std::vector<std::int64_t> row(n.g.num_objects(), 0);
        row[n.face[1][0][s]] += 1;
        row[n.face[1][1][s]] -= 1;
        d1.push_back(std::move(row));
    }
    std::vector<std::vector<std::int64_t>> d2;   // rows: tris, cols: edges
    for (std::size_t s = 0; s < n.level[2].size(); ++s) {
        if (n.degenerate(2, static_cast<int>(s))) continue;
        std::vector<std::int64_t> row(n1, 0);
        int sign = 1;
        for (int i = 0; i <= 2; ++i) {
            int e = n.face[2][i][s];
            if (edge_col[e] >= 0) row[edge_col[e]] += sign;
            sign = -sign;
        }
        bool nonzero = false;
        for (auto v : row) nonzero = nonzero || v != 0;
        if (nonzero) d2.push_back(std::move(row));
    }
    auto diag1 = smith_diagonal(d1);
    auto diag2 = smith_diagonal(d2);
    int r1 = 0;
    for (auto d : diag1)
        if (d != 0) ++r1;
    AbelianInvariants inv;
    int r2 = 0;
    for (auto d : diag2)
        if (d != 0) {
            ++r2;
            if (d > 1) inv.torsion.push_back(d);
        }
    inv.free_rank = n1 - r1 - r2;
    std::sort(inv.torsion.begin(), inv.torsion.end());
    return inv;
}

CrossCheckReport ac_vs_pi1(const FiniteLocalGroupoid& g, int basepoint_object,
                           int coset_limit) {
    CrossCheckReport rep;
    auto pres = locgpd::words::presentation(g);
    int comp = pres.component_of_object.at(basepoint_object);
    const auto& vg = pres.groups.at(comp);
    rep.h1_ac = cokernel_invariants(vg.pres.relator_matrix(), vg.pres.num_generators);

    auto n = nerve::build_nerve(g, 2);
    auto data = from_nerve(n);
    auto pi = pi1_presentation(data, basepoint_object, /*allow_disconnected=*/true);
    rep.h1_pi1 = h1(pi.pres);
    rep.h1_equal = rep.h1_ac == rep.h1_pi1;

    auto t_ac = todd_coxeter(vg.pres, coset_limit);
    if (t_ac.completed) rep.order_ac = t_ac.index;
    auto t_pi = todd_coxeter(pi.pres, coset_limit);
    if (t_pi.completed) rep.order_pi1 = t_pi.index;
    rep.orders_match = rep.order_ac && rep.order_pi1 && *rep.order_ac == *rep.order_pi1;
    return rep;
}

FiniteLocalGroupoid image_groupoid(const FiniteLocalGroupoid& g, std::vector<int>* arrow_to_u) {
    FiniteLocalGroupoid u;
    u.objects = g.objects;
    std::map<std::pair<int, int>, int> pair_arrow;
    auto intern = [&](int y, int x) {
        auto it = pair_arrow.find({y, x});
        if (it != pair_arrow.end()) return it->second;
        int id = static_cast<int>(u.arrows.size());
        pair_arrow[{y, x}] = id;
        u.arrows.push_back({"u" + g.objects[y] + "_" + g.objects[x], x, y});
        return id;
    };
    u.unit_of.resize(g.num_objects());
    for (std::size_t x = 0; x < g.num_objects(); ++x)
        u.unit_of[x] = intern(static_cast<int>(x), static_cast<int>(x));
    std::vector<int> to_u(g.num_arrows());
    for (std::size_t a = 0; a < g.num_arrows(); ++a)
        to_u[a] = intern(g.tgt(static_cast<int>(a)), g.src(static_cast<int>(a)));
    for (const auto& [p, prod] : g.mult) u.mult[{to_u[p.first], to_u[p.second]}] = to_u[prod];
    for (const auto& [a, ai] : g.inv) u.inv[to_u[a]] = to_u[ai];
    if (arrow_to_u) *arrow_to_u = std::move(to_u);
    return u;
}

SimplicialMonodromyReport simplicial_monodromy_ab(const FiniteLocalGroupoid& g, int x) {
    SimplicialMonodromyReport rep;
    std::vector<int> to_u;
    auto u = image_groupoid(g, &to_u);
    (void)u;

    bool all_isotropic = true;
    for (std::size_t a = 0; a < g.num_arrows(); ++a)
        if (g.src(static_cast<int>(a)) != g.tgt(static_cast<int>(a))) all_isotropic = false;

    std::set<int> u_image(to_u.begin(), to_u.end());
    bool arrow_bijective = u_image.size() == g.num_arrows();

    if (all_isotropic) {
        auto n = nerve::build_nerve(g, 2);
        auto data = from_nerve(n);
        auto pi = pi1_presentation(data, x, true);
        rep.exact = true;
        rep.invariants = h1(pi.pres);
        for (int e : pi.gen_edges) rep.generators.push_back(g.arrows[n.level[1][e][0]].id);
        rep.note = "U discrete; K1/delta(K2) = pi1 of the nerve (abelianized)";
        return rep;
    }
    if (arrow_bijective) {
        rep.exact = true;
        rep.invariants = AbelianInvariants{};
        rep.note = "(t,s) injective on arrows; K1 trivial";
        return rep;
    }
    auto iso = g.isotropy(x);
    std::vector<int> gens;
    std::map<int, int> col;
    for (int a : iso)
        if (!g.is_unit(a)) {
            col[a] = static_cast<int>(gens.size());
            gens.push_back(a);
        }
    std::vector<std::vector<std::int64_t>> rel;
    for (const auto& [p, prod] : g.mult) {
        auto [a, b] = p;
        if (g.src(a) != x || g.tgt(a) != x || g.src(b) != x || g.tgt(b) != x) continue;
        std::vector<std::int64_t> row(gens.size(), 0);
        if (col.count(a)) row[col.at(a)] += 1;
        if (col.count(b)) row[col.at(b)] += 1;
        if (col.count(prod)) row[col.at(prod)] -= 1;
        bool nonzero = false;
        for (auto v : row) nonzero = nonzero || v != 0;
        if (nonzero) rel.push_back(std::move(row));
    }
    rep.exact = false;
    rep.invariants = cokernel_invariants(rel, static_cast<int>(gens.size()));
    for (int a : gens) rep.generators.push_back(g.arrows[a].id);
    rep.note = "abelianized approximation (isotropy relations at the basepoint only)";
    return rep;
}

} // namespace locgpd::homotopy
