#include "locgpd/core.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace locgpd {

int FiniteLocalGroupoid::object_index(const std::string& name) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == name) return static_cast<int>(i);
    throw MalformedTable("unknown object: " + name);
}

int FiniteLocalGroupoid::arrow_index(const std::string& id) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id == id) return static_cast<int>(i);
    throw MalformedTable("unknown arrow: " + id);
}

bool FiniteLocalGroupoid::is_unit(int a) const {
    for (int u : unit_of)
        if (u == a) return true;
    return false;
}

std::optional<int> FiniteLocalGroupoid::product(int g, int h) const {
    auto it = mult.find({g, h});
    if (it == mult.end()) return std::nullopt;
    return it->second;
}

std::optional<int> FiniteLocalGroupoid::inverse(int g) const {
    auto it = inv.find(g);
    if (it == inv.end()) return std::nullopt;
    return it->second;
}

std::vector<int> FiniteLocalGroupoid::isotropy(int x) const {
    std::vector<int> out;
    for (std::size_t a = 0; a < arrows.size(); ++a)
        if (arrows[a].src == x && arrows[a].tgt == x) out.push_back(static_cast<int>(a));
    return out;
}

std::vector<int> FiniteLocalGroupoid::components() const {
    std::vector<int> parent(objects.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Arrow& a : arrows) parent[find(a.src)] = find(a.tgt);
    std::vector<int> comp(objects.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        int r = find(static_cast<int>(i));
        if (comp[r] < 0) comp[r] = next++;
        comp[i] = comp[r];
    }
    return comp;
}

void FiniteLocalGroupoid::check_well_formed() const {
    std::set<std::string> seen;
    for (const auto& o : objects)
        if (!seen.insert(o).second) throw MalformedTable("duplicate object id: " + o);
    seen.clear();
    for (const Arrow& a : arrows) {
        if (!seen.insert(a.id).second) throw MalformedTable("duplicate arrow id: " + a.id);
        if (a.src < 0 || a.src >= static_cast<int>(objects.size()) ||
            a.tgt < 0 || a.tgt >= static_cast<int>(objects.size()))
            throw MalformedTable("dangling endpoint on arrow " + a.id);
    }
    if (unit_of.size() != objects.size()) throw MalformedTable("missing unit entries");
    for (int u : unit_of)
        if (u < 0 || u >= static_cast<int>(arrows.size()))
            throw MalformedTable("dangling unit arrow");
    auto ok_arrow = [&](int a) { return a >= 0 && a < static_cast<int>(arrows.size()); };
    for (const auto& [pair, prod] : mult) {
        if (!ok_arrow(pair.first) || !ok_arrow(pair.second) || !ok_arrow(prod))
            throw MalformedTable("dangling arrow in mult table");
    }
    for (const auto& [g, gi] : inv)
        if (!ok_arrow(g) || !ok_arrow(gi)) throw MalformedTable("dangling arrow in inv table");
}

bool ValidationReport::axioms_pass() const {
    for (const auto& c : axioms)
        if (!c.passed) return false;
    return true;
}

namespace {

std::string pair_witness(const FiniteLocalGroupoid& g, int a, int b) {
    return "(" + g.arrows[a].id + "," + g.arrows[b].id + ")";
}

} // namespace

ValidationReport validate(const FiniteLocalGroupoid& g) {
    g.check_well_formed();
    ValidationReport rep;

    AxiomCheck units{"unit_endpoints"};
    for (std::size_t x = 0; x < g.objects.size() && units.passed; ++x) {
        int u = g.unit_of[x];
        if (g.src(u) != static_cast<int>(x) || g.tgt(u) != static_cast<int>(x)) {
            units.passed = false;
            units.witness = g.objects[x];
        }
    }
    rep.axioms.push_back(units);

    AxiomCheck unit_pairs{"unit_multiplication"};
    for (std::size_t a = 0; a < g.arrows.size() && unit_pairs.passed; ++a) {
        int ga = static_cast<int>(a);
        auto r = g.product(ga, g.unit_of[g.src(ga)]);
        auto l = g.product(g.unit_of[g.tgt(ga)], ga);
        if (!r || *r != ga || !l || *l != ga) {
            unit_pairs.passed = false;
            unit_pairs.witness = g.arrows[a].id;
        }
    }
    rep.axioms.push_back(unit_pairs);

    AxiomCheck st{"source_target_of_products"};
    for (const auto& [p, prod] : g.mult) {
        if (!g.composable(p.first, p.second)) {
            st.passed = false;
            st.witness = pair_witness(g, p.first, p.second) + " not composable";
            break;
        }
        if (g.src(prod) != g.src(p.second) || g.tgt(prod) != g.tgt(p.first)) {
            st.passed = false;
            st.witness = pair_witness(g, p.first, p.second);
            break;
        }
    }
    rep.axioms.push_back(st);

    AxiomCheck inva{"inversion"};
    for (const auto& [a, ai] : g.inv) {
        auto back = g.inverse(ai);
        if (!back || *back != a) {
            inva.passed = false;
            inva.witness = g.arrows[a].id + " (not an involution on V)";
            break;
        }
        if (g.src(ai) != g.tgt(a) || g.tgt(ai) != g.src(a)) {
            inva.passed = false;
            inva.witness = g.arrows[a].id + " (endpoint flip)";
            break;
        }
        auto left = g.product(ai, a);
        auto right = g.product(a, ai);
        if (!left || *left != g.unit_of[g.src(a)] || !right || *right != g.unit_of[g.tgt(a)]) {
            inva.passed = false;
            inva.witness = g.arrows[a].id + " (inverse products)";
            break;
        }
    }
    rep.axioms.push_back(inva);

    AxiomCheck univ{"units_invertible"};
    for (std::size_t x = 0; x < g.objects.size() && univ.passed; ++x) {
        auto i = g.inverse(g.unit_of[x]);
        if (!i || *i != g.unit_of[x]) {
            univ.passed = false;
            univ.witness = g.objects[x];
        }
    }
    rep.axioms.push_back(univ);

    // Full V x_s,t V subset U containment, informational.
    for (const auto& [a, ai] : g.inv) {
        (void)ai;
        for (const auto& [b, bi] : g.inv) {
            (void)bi;
            if (g.composable(a, b) && !g.product(a, b)) {
                rep.v_pairs_in_u = false;
                rep.v_pairs_witness = pair_witness(g, a, b);
                break;
            }
        }
        if (!rep.v_pairs_in_u) break;
    }

    // 3-associativity wherever both bracketings are defined.
    for (const auto& [p, gh] : g.mult) {
        auto [a, b] = p;
        for (std::size_t c = 0; c < g.arrows.size(); ++c) {
            int k = static_cast<int>(c);
            if (!g.composable(b, k)) continue;
            auto gh_k = g.product(gh, k);
            auto hk = g.product(b, k);
            if (!gh_k || !hk) continue;
            auto g_hk = g.product(a, *hk);
            if (!g_hk) continue;
            if (*gh_k != *g_hk) {
                rep.three_associative = false;
                rep.three_associativity_witness =
                    "(" + g.arrows[a].id + "," + g.arrows[b].id + "," + g.arrows[c].id + ")";
                break;
            }
        }
        if (!rep.three_associative) break;
    }

    return rep;
}

FiniteLocalGroupoid restrict_table(const FiniteLocalGroupoid& g,
                                   const std::set<std::pair<int, int>>& keep_mult,
                                   const std::set<int>& keep_inv) {
    for (std::size_t a = 0; a < g.arrows.size(); ++a) {
        int ga = static_cast<int>(a);
        std::pair<int, int> right{ga, g.unit_of[g.src(ga)]};
        std::pair<int, int> left{g.unit_of[g.tgt(ga)], ga};
        if (!keep_mult.count(right) || !keep_mult.count(left))
            throw UnitPairRemoved("restriction drops a unit pair at arrow " + g.arrows[a].id);
    }
    for (int u : g.unit_of)
        if (!keep_inv.count(u)) throw UnitPairRemoved("restriction drops a unit from V");

    FiniteLocalGroupoid out = g;
    out.mult.clear();
    out.inv.clear();
    for (const auto& p : keep_mult) {
        auto it = g.mult.find(p);
        if (it == g.mult.end()) throw BadParams("keep_mult pair outside U");
        out.mult.insert(*it);
    }
    for (int a : keep_inv) {
        auto it = g.inv.find(a);
        if (it == g.inv.end()) throw BadParams("keep_inv arrow outside V");
        if (!keep_inv.count(it->second)) throw BadParams("keep_inv not closed under inversion");
        // inverse pairs must remain in U
        if (!keep_mult.count({it->second, a}) || !keep_mult.count({a, it->second}))
            throw BadParams("keep_mult drops an inverse pair of a kept V-element");
        out.inv.insert(*it);
    }
    return out;
}

std::optional<int> BracketedProduct::evaluate(const FiniteLocalGroupoid& g) const {
    std::function<std::optional<int>(int)> ev = [&](int n) -> std::optional<int> {
        const Node& nd = nodes[n];
        if (nd.left < 0) return nd.arrow;
        auto l = ev(nd.left);
        auto r = ev(nd.right);
        if (!l || !r) return std::nullopt;
        return g.product(*l, *r);
    };
    return ev(root);
}

std::string BracketedProduct::render(const FiniteLocalGroupoid& g) const {
    std::function<std::string(int)> rd = [&](int n) -> std::string {
        const Node& nd = nodes[n];
        if (nd.left < 0) return g.arrows[nd.arrow].id;
        return "(" + rd(nd.left) + "*" + rd(nd.right) + ")";
    };
    return rd(root);
}

InversionalReport is_inversional(const FiniteLocalGroupoid& g) {
    InversionalReport rep;
    std::deque<int> frontier;
    for (const auto& [a, ai] : g.inv) {
        (void)ai;
        if (!rep.certificates.count(a)) {
            BracketedProduct leaf;
            leaf.nodes.push_back({a, -1, -1});
            leaf.root = 0;
            rep.certificates.emplace(a, std::move(leaf));
            frontier.push_back(a);
        }
    }
    // closure under defined products, breadth-first for short certificates
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [p, prod] : g.mult) {
            if (rep.certificates.count(prod)) continue;
            auto li = rep.certificates.find(p.first);
            auto ri = rep.certificates.find(p.second);
            if (li == rep.certificates.end() || ri == rep.certificates.end()) continue;
            BracketedProduct combined = li->second;
            int offset = static_cast<int>(combined.nodes.size());
            for (auto nd : ri->second.nodes) {
                if (nd.left >= 0) { nd.left += offset; nd.right += offset; }
                combined.nodes.push_back(nd);
            }
            int rroot = ri->second.root + offset;
            combined.nodes.push_back({prod, li->second.root, rroot});
            combined.root = static_cast<int>(combined.nodes.size()) - 1;
            rep.certificates.emplace(prod, std::move(combined));
            grew = true;
        }
    }
    for (std::size_t a = 0; a < g.arrows.size(); ++a)
        if (!rep.certificates.count(static_cast<int>(a)))
            rep.unreachable.push_back(static_cast<int>(a));
    rep.inversional = rep.unreachable.empty();
    return rep;
}

bool generates(const FiniteLocalGroupoid& g, const std::set<int>& s) {
    for (int u : g.unit_of)
        if (!s.count(u)) throw BadParams("generating set must contain all units");
    std::set<int> reach = s;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [p, prod] : g.mult) {
            if (reach.count(prod)) continue;
            if (reach.count(p.first) && reach.count(p.second)) {
                reach.insert(prod);
                grew = true;
            }
        }
    }
    return reach.size() == g.arrows.size();
}

namespace {

std::string int_name(int v) { return v < 0 ? "m" + std::to_string(-v) : std::to_string(v); }

} // namespace

FiniteLocalGroupoid interval_group(int k) {
    if (k < 1) throw BadParams("interval_group: k must be >= 1");
    FiniteLocalGroupoid g;
    g.objects = {"pt"};
    auto idx = [&](int v) { return v + k; };
    for (int v = -k; v <= k; ++v) g.arrows.push_back({int_name(v), 0, 0});
    g.unit_of = {idx(0)};
    for (int a = -k; a <= k; ++a)
        for (int b = -k; b <= k; ++b)
            if (std::abs(a + b) <= k) g.mult[{idx(a), idx(b)}] = idx(a + b);
    for (int a = -k; a <= k; ++a) g.inv[idx(a)] = idx(-a);
    return g;
}

FiniteLocalGroupoid interval_group(int k, int modulus) {
    if (k < 1 || modulus < 2 * k + 1)
        throw BadParams("interval_group: need k >= 1 and modulus >= 2k+1");
    FiniteLocalGroupoid g;
    g.objects = {"pt"};
    auto idx = [&](int v) { return v + k; };
    for (int v = -k; v <= k; ++v) g.arrows.push_back({int_name(v), 0, 0});
    g.unit_of = {idx(0)};
    auto centered = [&](int v) {
        int r = ((v % modulus) + modulus) % modulus;
        if (r > modulus / 2) r -= modulus;
        return r;
    };
    for (int a = -k; a <= k; ++a)
        for (int b = -k; b <= k; ++b) {
            int s = centered(a + b);
            if (std::abs(s) <= k) g.mult[{idx(a), idx(b)}] = idx(s);
        }
    for (int a = -k; a <= k; ++a) g.inv[idx(a)] = idx(centered(-a));
    return g;
}

FiniteLocalGroupoid cyclic(int n) {
    if (n < 1) throw BadParams("cyclic: n must be >= 1");
    FiniteLocalGroupoid g;
    g.objects = {"pt"};
    for (int v = 0; v < n; ++v) g.arrows.push_back({std::to_string(v), 0, 0});
    g.unit_of = {0};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mult[{a, b}] = (a + b) % n;
    for (int a = 0; a < n; ++a) g.inv[a] = (n - a) % n;
    return g;
}

FiniteLocalGroupoid pair_restriction(int n_vertices,
                                     const std::vector<std::pair<int, int>>& edges) {
    if (n_vertices < 1) throw BadParams("pair_restriction: need at least one vertex");
    std::set<std::pair<int, int>> edge_set;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices || u == v)
            throw BadParams("pair_restriction: bad edge");
        edge_set.insert({std::min(u, v), std::max(u, v)});
    }
    FiniteLocalGroupoid g;
    for (int i = 0; i < n_vertices; ++i) g.objects.push_back("v" + std::to_string(i));
    // arrow (y,x): x -> y, for every ordered pair in the same component
    std::vector<std::vector<int>> aidx(n_vertices, std::vector<int>(n_vertices, -1));
    for (int y = 0; y < n_vertices; ++y)
        for (int x = 0; x < n_vertices; ++x) {
            aidx[y][x] = static_cast<int>(g.arrows.size());
            g.arrows.push_back({"p" + std::to_string(y) + "_" + std::to_string(x), x, y});
        }
    g.unit_of.resize(n_vertices);
    for (int x = 0; x < n_vertices; ++x) g.unit_of[x] = aidx[x][x];

    auto in_v = [&](int y, int x) {
        return y == x || edge_set.count({std::min(y, x), std::max(y, x)}) > 0;
    };
    // U: composable pairs with at least one factor a unit or an edge arrow
    for (int z = 0; z < n_vertices; ++z)
        for (int y = 0; y < n_vertices; ++y)
            for (int x = 0; x < n_vertices; ++x) {
                if (in_v(z, y) || in_v(y, x))
                    g.mult[{aidx[z][y], aidx[y][x]}] = aidx[z][x];
            }
    for (int y = 0; y < n_vertices; ++y)
        for (int x = 0; x < n_vertices; ++x)
            if (in_v(y, x)) g.inv[aidx[y][x]] = aidx[x][y];
    return g;
}

FiniteLocalGroupoid pair_groupoid(int n_vertices) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n_vertices; ++u)
        for (int v = u + 1; v < n_vertices; ++v) edges.push_back({u, v});
    return pair_restriction(n_vertices, edges);
}

bool Morphism::valid() const {
    if (!dom || !cod) return false;
    if (object_map.size() != dom->objects.size()) return false;
    if (arrow_map.size() != dom->arrows.size()) return false;
    for (std::size_t x = 0; x < dom->objects.size(); ++x)
        if (arrow_map[dom->unit_of[x]] != cod->unit_of[object_map[x]]) return false;
    for (std::size_t a = 0; a < dom->arrows.size(); ++a) {
        int fa = arrow_map[a];
        if (cod->src(fa) != object_map[dom->src(static_cast<int>(a))]) return false;
        if (cod->tgt(fa) != object_map[dom->tgt(static_cast<int>(a))]) return false;
    }
    for (const auto& [p, prod] : dom->mult) {
        auto q = cod->product(arrow_map[p.first], arrow_map[p.second]);
        if (!q || *q != arrow_map[prod]) return false;
    }
    for (const auto& [a, ai] : dom->inv) {
        auto q = cod->inverse(arrow_map[a]);
        if (!q || *q != arrow_map[ai]) return false;
    }
    return true;
}

} // namespace locgpd
