#include "locgpd/nerve.hpp"

#include <algorithm>
#include <functional>

namespace locgpd::nerve {

bool SimplicialTruncation::degenerate(int m, int s) const {
    if (m == 0) return false;
    for (int a : level[m][s])
        if (g.is_unit(a)) return true;
    return false;
}

namespace {

assoc::Tuple face_tuple(const assoc::Tuple& w, int i, const FiniteLocalGroupoid& g) {
    int m = static_cast<int>(w.size());
    assoc::Tuple out;
    if (i == 0) {
        out.assign(w.begin() + 1, w.end());
    } else if (i == m) {
        out.assign(w.begin(), w.end() - 1);
    } else {
        out.assign(w.begin(), w.begin() + i - 1);
        auto p = g.product(w[i - 1], w[i]);
        if (!p) throw Error("nerve face: pair unexpectedly outside U");
        out.push_back(*p);
        out.insert(out.end(), w.begin() + i + 1, w.end());
    }
    return out;
}

assoc::Tuple degen_tuple(const assoc::Tuple& w, int i, const FiniteLocalGroupoid& g) {
    assoc::Tuple out(w.begin(), w.begin() + i);
    int unit = i == 0 ? g.unit_of[g.tgt(w[0])] : g.unit_of[g.src(w[i - 1])];
    out.push_back(unit);
    out.insert(out.end(), w.begin() + i, w.end());
    return out;
}

} // namespace

SimplicialTruncation build_nerve(const FiniteLocalGroupoid& g, int m_max,
                                 std::size_t budget) {
    if (m_max < 1 || m_max > 6) throw BadParams("build_nerve: m_max in [1,6]");
    SimplicialTruncation n;
    n.g = g;
    n.m_max = m_max;
    n.level.resize(m_max + 1);
    n.index.resize(m_max + 1);
    n.face.resize(m_max + 1);
    n.degen.resize(m_max + 1);

    for (std::size_t a = 0; a < g.num_arrows(); ++a)
        n.level[1].push_back({static_cast<int>(a)});
    for (std::size_t s = 0; s < n.level[1].size(); ++s)
        n.index[1][n.level[1][s]] = static_cast<int>(s);

    // higher levels: extend level m-1 chains one letter, keep tuples with
    // all m-fold products defined and equal
    for (int m = 2; m <= m_max; ++m) {
        auto brs = assoc::bracketings(m);
        for (const auto& w : n.level[m - 1]) {
            for (std::size_t a = 0; a < g.num_arrows(); ++a) {
                int ga = static_cast<int>(a);
                if (g.src(w.back()) != g.tgt(ga)) continue;
                assoc::Tuple t = w;
                t.push_back(ga);
                int first_val = -2;
                bool ok = true;
                for (const auto& b : brs) {
                    auto v = assoc::evaluate(t, b, g);
                    if (!v) {
                        ok = false;
                        break;
                    }
                    if (first_val == -2) first_val = *v;
                    else if (*v != first_val) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                if (n.level[m].size() >= budget)
                    throw SearchSpaceTooLarge("build_nerve: level " + std::to_string(m));
                n.index[m][t] = static_cast<int>(n.level[m].size());
                n.level[m].push_back(std::move(t));
            }
        }
    }

    for (int m = 1; m <= m_max; ++m) {
        n.face[m].assign(m + 1, std::vector<int>(n.level[m].size(), -1));
        for (std::size_t s = 0; s < n.level[m].size(); ++s) {
            const auto& w = n.level[m][s];
            if (m == 1) {
                n.face[1][0][s] = g.src(w[0]);
                n.face[1][1][s] = g.tgt(w[0]);
                continue;
            }
            for (int i = 0; i <= m; ++i) {
                auto ft = face_tuple(w, i, g);
                auto it = n.index[m - 1].find(ft);
                if (it == n.index[m - 1].end())
                    throw Error("nerve: face of a stored simplex is not stored");
                n.face[m][i][s] = it->second;
            }
        }
    }

    n.degen[0].assign(1, std::vector<int>(g.num_objects(), -1));
    for (std::size_t x = 0; x < g.num_objects(); ++x)
        n.degen[0][0][x] = n.index[1].at({g.unit_of[x]});
    for (int m = 1; m < m_max; ++m) {
        n.degen[m].assign(m + 1, std::vector<int>(n.level[m].size(), -1));
        for (std::size_t s = 0; s < n.level[m].size(); ++s) {
            for (int i = 0; i <= m; ++i) {
                auto dt = degen_tuple(n.level[m][s], i, g);
                auto it = n.index[m + 1].find(dt);
                if (it == n.index[m + 1].end())
                    throw Error("nerve: degeneracy of a stored simplex is not stored");
                n.degen[m][i][s] = it->second;
            }
        }
    }
    return n;
}

IdentityCheck check_simplicial_identities(const SimplicialTruncation& n) {
    IdentityCheck out;
    auto fail = [&](const std::string& w) {
        out.ok = false;
        if (out.witness.empty()) out.witness = w;
    };
    for (int m = 2; m <= n.m_max; ++m) {
        for (std::size_t s = 0; s < n.level[m].size(); ++s) {
            for (int j = 1; j <= m; ++j)
                for (int i = 0; i < j; ++i) {
                    int lhs = n.face[m - 1][i][n.face[m][j][s]];
                    int rhs = n.face[m - 1][j - 1][n.face[m][i][s]];
                    if (lhs != rhs)
                        fail("d" + std::to_string(i) + "d" + std::to_string(j) + " at level " +
                             std::to_string(m) + " simplex " + std::to_string(s));
                }
        }
    }
    for (int m = 1; m + 2 <= n.m_max; ++m) {
        for (std::size_t s = 0; s < n.level[m].size(); ++s)
            for (int j = 0; j <= m; ++j)
                for (int i = 0; i <= j; ++i) {
                    int a = n.degen[m + 1][i][n.degen[m][j][s]];
                    int b = n.degen[m + 1][j + 1][n.degen[m][i][s]];
                    if (a != b)
                        fail("s" + std::to_string(i) + "s" + std::to_string(j) + " at level " +
                             std::to_string(m));
                }
    }
    for (int m = 1; m < n.m_max; ++m) {
        for (std::size_t s = 0; s < n.level[m].size(); ++s)
            for (int j = 0; j <= m; ++j) {
                int up = n.degen[m][j][s];
                for (int i = 0; i <= m + 1; ++i) {
                    int got = n.face[m + 1][i][up];
                    if (i == j || i == j + 1) {
                        if (got != static_cast<int>(s))
                            fail("d_i s_j (identity case) at level " + std::to_string(m));
                    } else if (i < j) {
                        if (m == 1) continue;
                        int expect = n.degen[m - 1][j - 1][n.face[m][i][s]];
                        if (got != expect) fail("d_i s_j (i<j) at level " + std::to_string(m));
                    } else {
                        if (m == 1) continue;
                        int expect = n.degen[m - 1][j][n.face[m][i - 1][s]];
                        if (got != expect) fail("d_i s_j (i>j+1) at level " + std::to_string(m));
                    }
                }
            }
    }
    return out;
}

std::size_t HornReport::unfillable_total() const {
    std::size_t t = 0;
    for (const auto& c : classes) t += c.total - c.fillable;
    return t;
}

HornReport horn_check(const SimplicialTruncation& n, int up_to_dim,
                      std::size_t witness_cap) {
    if (up_to_dim > n.m_max) throw BadParams("horn_check: dim exceeds truncation");
    HornReport rep;
    for (int d = 2; d <= up_to_dim; ++d) {
        for (int missing = 0; missing <= d; ++missing) {
            HornClass cls;
            cls.dim = d;
            cls.index = missing;
            std::vector<int> slots(d + 1, -1);
            std::vector<int> positions;
            for (int j = 0; j <= d; ++j)
                if (j != missing) positions.push_back(j);

            auto faces_compatible = [&](int a, int b) {
                // d_a(sigma_b) == d_{b-1}(sigma_a), faces taken at level d-1
                int sa = slots[a], sb = slots[b];
                return n.face[d - 1][a][sb] == n.face[d - 1][b - 1][sa];
            };

            std::function<void(std::size_t)> rec = [&](std::size_t pi) {
                if (pi == positions.size()) {
                    ++cls.total;
                    bool filled = false;
                    for (std::size_t s = 0; s < n.level[d].size() && !filled; ++s) {
                        bool match = true;
                        for (int j : positions)
                            if (n.face[d][j][s] != slots[j]) {
                                match = false;
                                break;
                            }
                        filled = match;
                    }
                    if (filled) ++cls.fillable;
                    else if (cls.unfillable_witnesses.size() < witness_cap) {
                        std::vector<int> w;
                        for (int j : positions) w.push_back(slots[j]);
                        cls.unfillable_witnesses.push_back(w);
                    }
                    return;
                }
                int j = positions[pi];
                for (std::size_t c = 0; c < n.level[d - 1].size(); ++c) {
                    slots[j] = static_cast<int>(c);
                    bool ok = true;
                    for (std::size_t qi = 0; qi < pi && ok; ++qi) {
                        int a = std::min(positions[qi], j);
                        int b = std::max(positions[qi], j);
                        ok = faces_compatible(a, b);
                    }
                    if (ok) rec(pi + 1);
                }
                slots[j] = -1;
            };
            rec(0);
            rep.classes.push_back(std::move(cls));
        }
    }
    return rep;
}

bool is_global_groupoid(const FiniteLocalGroupoid& g) {
    for (std::size_t a = 0; a < g.num_arrows(); ++a)
        for (std::size_t b = 0; b < g.num_arrows(); ++b) {
            int ga = static_cast<int>(a), gb = static_cast<int>(b);
            if (g.composable(ga, gb) && !g.product(ga, gb)) return false;
        }
    for (std::size_t a = 0; a < g.num_arrows(); ++a)
        if (!g.inverse(static_cast<int>(a))) return false;
    return true;
}

} // namespace locgpd::nerve
