#include "locgpd/complexes.hpp"

#include <algorithm>
#include <functional>

namespace locgpd::cpx {

std::pair<int, int> OrderedComplex2::edge_key(int a, int b) const {
    return before(a, b) ? std::pair{a, b} : std::pair{b, a};
}

int OrderedComplex2::face_count(int a, int b) const {
    int n = 0;
    for (const auto& f : faces) {
        int hit = 0;
        for (int v : f) hit += (v == a || v == b) ? 1 : 0;
        if (hit == 2) ++n;
    }
    return n;
}

bool OrderedComplex2::boundary_edge(int a, int b) const {
    if (!edges.count(edge_key(a, b))) return false;
    return face_count(a, b) <= 1;
}

std::vector<int> OrderedComplex2::boundary_vertices() const {
    std::set<int> out;
    for (const auto& [a, b] : edges)
        if (boundary_edge(a, b)) {
            out.insert(a);
            out.insert(b);
        }
    // isolated vertices (W_0 degenerate case) count as boundary
    if (out.empty())
        for (int v = 0; v < num_vertices(); ++v) out.insert(v);
    return {out.begin(), out.end()};
}

int OrderedComplex2::source() const {
    auto bv = boundary_vertices();
    int best = bv.front();
    for (int v : bv)
        if (before(v, best)) best = v;
    return best;
}

int OrderedComplex2::target() const {
    auto bv = boundary_vertices();
    int best = bv.front();
    for (int v : bv)
        if (before(best, v)) best = v;
    return best;
}

OrderedComplex2 from_wk(int k) {
    if (k < 1) throw BadParams("from_wk: k >= 1");
    OrderedComplex2 s;
    for (int i = 0; i <= k; ++i) s.pos.push_back(Rational(i));
    for (int i = 0; i < k; ++i) s.edges.insert({i, i + 1});
    return s;
}

int apply_move(OrderedComplex2& s, const ComplexMove& m) {
    int v_before = s.num_vertices();
    int e_before = static_cast<int>(s.edges.size());
    int f_before = static_cast<int>(s.faces.size());
    int created = -1;

    if (m.kind == ComplexMove::Kind::Expansion) {
        if (!s.boundary_edge(m.u, m.w)) throw IllegalMove("expansion needs a boundary edge");
        int u = m.u, w = m.w;
        if (!s.before(u, w)) std::swap(u, w);
        created = s.num_vertices();
        // strictly between u and the next occupied position, so the total
        // order stays strict even when other vertices sit inside (u,w)
        Rational upper = s.pos[w];
        for (const Rational& p : s.pos)
            if (s.pos[u] < p && p < upper) upper = p;
        s.pos.push_back((s.pos[u] + upper) / 2);
        s.edges.insert({u, created});
        s.edges.insert({created, w});
        s.faces.insert({u, created, w});
        if (!(s.num_vertices() == v_before + 1 &&
              static_cast<int>(s.edges.size()) == e_before + 2 &&
              static_cast<int>(s.faces.size()) == f_before + 1))
            throw IllegalMove("expansion broke the Euler bookkeeping");
    } else {
        int u = m.u, v = m.v, w = m.w;
        if (!(s.before(u, v) && s.before(v, w)))
            throw IllegalMove("contraction needs u < v < w");
        if (!s.boundary_edge(u, v) || !s.boundary_edge(v, w))
            throw IllegalMove("contraction needs two boundary edges");
        if (s.edges.count({u, w})) throw IllegalMove("contraction: {u,w} already present");
        s.edges.insert({u, w});
        s.faces.insert({u, v, w});
        if (!(s.num_vertices() == v_before &&
              static_cast<int>(s.edges.size()) == e_before + 1 &&
              static_cast<int>(s.faces.size()) == f_before + 1))
            throw IllegalMove("contraction broke the Euler bookkeeping");
    }
    // each edge of the new face may carry at most two faces
    const std::array<int, 3> f = m.kind == ComplexMove::Kind::Expansion
                                     ? std::array<int, 3>{m.u, created, m.w}
                                     : std::array<int, 3>{m.u, m.v, m.w};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (s.face_count(f[i], f[j]) > 2)
                throw IllegalMove("move would give an edge three faces");
    return created;
}

std::vector<std::vector<int>> boundary_paths(const OrderedComplex2& s) {
    int src = s.source();
    int tgt = s.target();
    // increasing adjacency along boundary edges
    std::map<int, std::vector<int>> up;
    for (const auto& [a, b] : s.edges)
        if (s.boundary_edge(a, b)) up[a].push_back(b);
    for (auto& [v, list] : up)
        std::sort(list.begin(), list.end(),
                  [&](int x, int y) { return s.before(x, y); });

    std::vector<std::vector<int>> out;
    std::vector<int> path{src};
    std::function<void()> dfs = [&]() {
        int cur = path.back();
        if (cur == tgt) {
            out.push_back(path);
            return;
        }
        auto it = up.find(cur);
        if (it == up.end()) return;
        for (int nxt : it->second) {
            path.push_back(nxt);
            dfs();
            path.pop_back();
        }
    };
    dfs();
    return out;
}

words::Word path_word(const NerveLabeling& lab, const std::vector<int>& path) {
    words::Word w;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        w.push_back(lab.edge_arrow.at({path[i], path[i + 1]}));
    return w;
}

std::optional<Certificate> certify_equivalence(const words::Word& w1, const words::Word& w2,
                                               const FiniteLocalGroupoid& g,
                                               const words::Bounds& b) {
    auto verdict = words::equivalent(w1, w2, g, b);
    if (verdict.kind != words::EquivalenceVerdict::Kind::Equivalent) return std::nullopt;

    Certificate cert;
    cert.word1 = w1;
    cert.word2 = w2;
    int k = static_cast<int>(w1.size());
    cert.complex = from_wk(k);
    // vertex i sits between letters i-1 and i; objects run tgt -> src
    cert.labeling.vertex_object[0] = words::word_tgt(w1, g);
    for (int i = 1; i <= k; ++i) cert.labeling.vertex_object[i] = g.src(w1[i - 1]);
    for (int i = 0; i < k; ++i) cert.labeling.edge_arrow[{i, i + 1}] = w1[i];
    cert.path1.resize(k + 1);
    for (int i = 0; i <= k; ++i) cert.path1[i] = i;

    std::vector<int> path = cert.path1;
    words::Word cur = w1;
    for (const auto& mv : verdict.trace->moves) {
        MoveRecord rec;
        if (mv.kind == words::Move::Kind::Contraction) {
            int u = path[mv.index], v = path[mv.index + 1], w = path[mv.index + 2];
            rec.move = {ComplexMove::Kind::Contraction, u, v, w};
            auto prod = g.product(cur[mv.index], cur[mv.index + 1]);
            if (!prod) throw IllegalMove("certify: contraction pair left U");
            rec.arrow_uw = *prod;
            apply_move(cert.complex, rec.move);
            cert.labeling.edge_arrow[{u, w}] = *prod;
            path.erase(path.begin() + mv.index + 1);
        } else {
            int u = path[mv.index], w = path[mv.index + 1];
            rec.move = {ComplexMove::Kind::Expansion, u, -1, w};
            int v = apply_move(cert.complex, rec.move);
            rec.new_vertex = v;
            rec.arrow_uv = mv.left;
            rec.arrow_vw = mv.right;
            cert.labeling.edge_arrow[{u, v}] = mv.left;
            cert.labeling.edge_arrow[{v, w}] = mv.right;
            cert.labeling.vertex_object[v] = g.src(mv.left);
            path.insert(path.begin() + mv.index + 1, v);
        }
        cert.history.push_back(rec);
        cur = words::apply_move(cur, mv, g);
    }
    cert.path2 = path;
    if (cur != w2) throw Error("certify: trace replay mismatch");
    return cert;
}

bool verify_certificate(const Certificate& cert, const FiniteLocalGroupoid& g) {
    try {
        int k = static_cast<int>(cert.word1.size());
        if (k < 1 || !words::well_formed(cert.word1, g) ||
            !words::well_formed(cert.word2, g))
            return false;
        OrderedComplex2 s = from_wk(k);
        NerveLabeling lab;
        lab.vertex_object[0] = words::word_tgt(cert.word1, g);
        for (int i = 1; i <= k; ++i) lab.vertex_object[i] = g.src(cert.word1[i - 1]);
        for (int i = 0; i < k; ++i) lab.edge_arrow[{i, i + 1}] = cert.word1[i];

        for (const auto& rec : cert.history) {
            if (rec.move.kind == ComplexMove::Kind::Expansion) {
                auto key = s.edge_key(rec.move.u, rec.move.w);
                int label = lab.edge_arrow.at(key);
                auto prod = g.product(rec.arrow_uv, rec.arrow_vw);
                if (!prod || *prod != label) return false;
                int v = apply_move(s, rec.move);
                if (v != rec.new_vertex) return false;
                if (g.src(rec.arrow_uv) != g.tgt(rec.arrow_vw)) return false;
                lab.edge_arrow[{key.first, v}] = rec.arrow_uv;
                lab.edge_arrow[{v, key.second}] = rec.arrow_vw;
                lab.vertex_object[v] = g.src(rec.arrow_uv);
            } else {
                int u = rec.move.u, v = rec.move.v, w = rec.move.w;
                int a = lab.edge_arrow.at({u, v});
                int bb = lab.edge_arrow.at({v, w});
                auto prod = g.product(a, bb);
                if (!prod || *prod != rec.arrow_uw) return false;
                apply_move(s, rec.move);
                lab.edge_arrow[{u, w}] = rec.arrow_uw;
            }
        }
        // final complex and labeling match the certificate
        if (s.edges != cert.complex.edges || s.faces != cert.complex.faces) return false;
        if (lab.edge_arrow != cert.labeling.edge_arrow) return false;
        // every face composes in G
        for (const auto& f : s.faces) {
            int a = lab.edge_arrow.at({f[0], f[1]});
            int bb = lab.edge_arrow.at({f[1], f[2]});
            int c = lab.edge_arrow.at({f[0], f[2]});
            auto prod = g.product(a, bb);
            if (!prod || *prod != c) return false;
        }
        // both designated paths are boundary paths with the claimed words
        auto paths = boundary_paths(s);
        auto is_path = [&](const std::vector<int>& p) {
            return std::find(paths.begin(), paths.end(), p) != paths.end();
        };
        if (!is_path(cert.path1) || !is_path(cert.path2)) return false;
        if (path_word(lab, cert.path1) != cert.word1) return false;
        if (path_word(lab, cert.path2) != cert.word2) return false;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace locgpd::cpx
