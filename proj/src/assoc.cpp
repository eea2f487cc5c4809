#include "locgpd/assoc.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace locgpd::assoc {

std::string Bracketing::render() const {
    std::function<std::string(int)> rd = [&](int n) -> std::string {
        const Node& nd = nodes[n];
        if (nd.leaf >= 0) return std::to_string(nd.leaf);
        return "(" + rd(nd.left) + rd(nd.right) + ")";
    };
    return rd(root);
}

namespace {

// trees over leaf range [lo, hi); returns roots added to pool
std::vector<int> trees(int lo, int hi, std::vector<Bracketing::Node>& pool) {
    std::vector<int> roots;
    if (hi - lo == 1) {
        pool.push_back({lo, -1, -1});
        roots.push_back(static_cast<int>(pool.size()) - 1);
        return roots;
    }
    for (int k = lo + 1; k < hi; ++k) {
        auto lefts = trees(lo, k, pool);
        for (int l : lefts) {
            auto rights = trees(k, hi, pool);
            for (int r : rights) {
                pool.push_back({-1, l, r});
                roots.push_back(static_cast<int>(pool.size()) - 1);
            }
        }
    }
    return roots;
}

} // namespace

std::vector<Bracketing> bracketings(int m) {
    if (m < 1 || m > 12) throw TooLarge("bracketings: m out of range [1,12]");
    // shared pool would alias subtree enumerations; rebuild per root instead
    std::vector<Bracketing> out;
    std::vector<Bracketing::Node> pool;
    auto roots = trees(0, m, pool);
    for (int r : roots) {
        Bracketing b;
        b.leaves = m;
        // copy reachable nodes
        std::function<int(int)> copy = [&](int n) -> int {
            const auto& nd = pool[n];
            if (nd.leaf >= 0) {
                b.nodes.push_back(nd);
                return static_cast<int>(b.nodes.size()) - 1;
            }
            int l = copy(nd.left);
            int rr = copy(nd.right);
            b.nodes.push_back({-1, l, rr});
            return static_cast<int>(b.nodes.size()) - 1;
        };
        b.root = copy(r);
        out.push_back(std::move(b));
    }
    return out;
}

std::optional<int> evaluate(const Tuple& w, const Bracketing& b,
                            const FiniteLocalGroupoid& g) {
    if (static_cast<int>(w.size()) != b.leaves)
        throw BadParams("evaluate: tuple length != leaf count");
    std::function<std::optional<int>(int)> ev = [&](int n) -> std::optional<int> {
        const auto& nd = b.nodes[n];
        if (nd.leaf >= 0) return w[nd.leaf];
        auto l = ev(nd.left);
        if (!l) return std::nullopt;
        auto r = ev(nd.right);
        if (!r) return std::nullopt;
        return g.product(*l, *r);
    };
    return ev(b.root);
}

std::vector<std::pair<int, int>> evaluation_pairs(const Tuple& w, const Bracketing& b,
                                                  const FiniteLocalGroupoid& g) {
    std::vector<std::pair<int, int>> pairs;
    std::function<std::optional<int>(int)> ev = [&](int n) -> std::optional<int> {
        const auto& nd = b.nodes[n];
        if (nd.leaf >= 0) return w[nd.leaf];
        auto l = ev(nd.left);
        if (!l) return std::nullopt;
        auto r = ev(nd.right);
        if (!r) return std::nullopt;
        auto p = g.product(*l, *r);
        if (p) pairs.push_back({*l, *r});
        return p;
    };
    if (!ev(b.root)) return {};
    return pairs;
}

namespace {

/// Depth-first enumeration of well-formed m-tuples in lexicographic order,
/// invoking fn on each; returns false if the visit count exceeds budget.
bool for_each_tuple(const FiniteLocalGroupoid& g, int m, std::size_t budget,
                    const std::function<bool(const Tuple&)>& fn) {
    // arrows composable after a given arrow, by source object
    std::vector<std::vector<int>> by_tgt(g.num_objects());
    for (std::size_t a = 0; a < g.num_arrows(); ++a)
        by_tgt[g.tgt(static_cast<int>(a))].push_back(static_cast<int>(a));
    std::size_t visited = 0;
    Tuple w;
    std::function<bool(int)> rec = [&](int depth) -> bool {
        if (depth == m) {
            ++visited;
            if (visited > budget) return false;
            return fn(w);
        }
        static thread_local std::vector<int> all;
        const std::vector<int>* candidates;
        if (depth == 0) {
            all.resize(g.num_arrows());
            for (std::size_t i = 0; i < g.num_arrows(); ++i) all[i] = static_cast<int>(i);
            candidates = &all;
        } else {
            candidates = &by_tgt[g.src(w.back())];
        }
        for (int a : *candidates) {
            w.push_back(a);
            bool ok = rec(depth + 1);
            w.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    if (!rec(0)) {
        if (visited > budget) throw SearchSpaceTooLarge(
            "assoc_order: tuple space at m=" + std::to_string(m) + " exceeds budget");
        return false;   // fn aborted (witness found)
    }
    return true;
}

} // namespace

AssocReport assoc_order(const FiniteLocalGroupoid& g, int n, std::size_t budget) {
    if (n < 3) throw BadParams("assoc_order: n must be >= 3");
    AssocReport rep;
    for (int m = 3; m <= n; ++m) {
        rep.order_checked = m;
        auto brs = bracketings(m);
        bool complete = for_each_tuple(g, m, budget, [&](const Tuple& w) {
            int first_def = -1;
            int first_val = -1;
            for (std::size_t bi = 0; bi < brs.size(); ++bi) {
                auto v = evaluate(w, brs[bi], g);
                if (!v) continue;
                if (first_def < 0) {
                    first_def = static_cast<int>(bi);
                    first_val = *v;
                } else if (*v != first_val) {
                    rep.failure = AssocFailure{w, first_def, static_cast<int>(bi),
                                               first_val, *v};
                    return false;
                }
            }
            return true;
        });
        if (!complete && rep.failure) return rep;
    }
    return rep;
}

FiniteLocalGroupoid restrict_to_n_associative(const FiniteLocalGroupoid& g, int n) {
    FiniteLocalGroupoid cur = g;
    auto unit_adjacent = [&](const std::pair<int, int>& p) {
        return cur.is_unit(p.first) || cur.is_unit(p.second);
    };
    while (true) {
        AssocReport rep = assoc_order(cur, n);
        if (rep.pass()) return cur;
        const AssocFailure& f = *rep.failure;
        auto brs = bracketings(static_cast<int>(f.tuple.size()));
        auto pa = evaluation_pairs(f.tuple, brs[f.bracketing_a], cur);
        auto pb = evaluation_pairs(f.tuple, brs[f.bracketing_b], cur);
        std::vector<std::pair<int, int>> involved = pa;
        involved.insert(involved.end(), pb.begin(), pb.end());
        std::sort(involved.begin(), involved.end());
        involved.erase(std::unique(involved.begin(), involved.end()), involved.end());
        const std::pair<int, int>* victim = nullptr;
        for (const auto& p : involved)
            if (!unit_adjacent(p)) {
                victim = &p;
                break;
            }
        if (!victim)
            throw CannotRestrict("associativity failure supported on unit pairs only");
        cur.mult.erase(*victim);
        // keep the inverse axiom: drop V-elements whose inverse pairs left U
        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            for (auto it = cur.inv.begin(); it != cur.inv.end(); ++it) {
                auto [a, ai] = *it;
                if (cur.is_unit(a)) continue;
                if (!cur.product(ai, a) || !cur.product(a, ai)) {
                    cur.inv.erase(a);
                    if (a != ai) cur.inv.erase(ai);
                    shrunk = true;
                    break;
                }
            }
        }
    }
}

} // namespace locgpd::assoc
