#include "locgpd/coset.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

namespace locgpd {

std::vector<std::vector<std::int64_t>> GroupPresentation::relator_matrix() const {
    std::vector<std::vector<std::int64_t>> m;
    for (const auto& r : relators) {
        std::vector<std::int64_t> row(num_generators, 0);
        for (int letter : r) {
            int g = std::abs(letter) - 1;
            row[g] += letter > 0 ? 1 : -1;
        }
        m.push_back(std::move(row));
    }
    return m;
}

namespace {

int col_of(int letter) {
    int g = std::abs(letter) - 1;
    return 2 * g + (letter > 0 ? 0 : 1);
}

int inv_col(int col) { return col ^ 1; }

/// HLT enumerator. Table entries may go stale after coincidences; all
/// access goes through get/set which resolve through the union-find.
struct Enumerator {
    int ngens;
    int limit;
    std::vector<std::vector<int>> tab;
    std::vector<int> parent;
    std::deque<int> pending;
    bool merged_flag = false;

    Enumerator(int gens, int lim) : ngens(gens), limit(lim) { new_coset(); }

    int rep(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }

    bool alive(int a) { return rep(a) == a; }

    int new_coset() {
        if (static_cast<int>(tab.size()) >= limit)
            throw std::length_error("coset limit exceeded");
        tab.emplace_back(2 * ngens, -1);
        parent.push_back(static_cast<int>(tab.size()) - 1);
        return static_cast<int>(tab.size()) - 1;
    }

    int get(int a, int col) {
        int v = tab[rep(a)][col];
        return v < 0 ? -1 : rep(v);
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        pending.push_back(b);
        merged_flag = true;
    }

    void set(int a, int col, int b) {
        a = rep(a);
        b = rep(b);
        int existing = get(a, col);
        if (existing >= 0) {
            if (existing != b) merge(existing, b);
        } else {
            tab[a][col] = b;
        }
        a = rep(a);
        b = rep(b);
        int back = get(b, inv_col(col));
        if (back >= 0) {
            if (back != a) merge(back, a);
        } else {
            tab[b][inv_col(col)] = a;
        }
    }

    void process_coincidences() {
        while (!pending.empty()) {
            int dead = pending.front();
            pending.pop_front();
            for (int col = 0; col < 2 * ngens; ++col) {
                int v = tab[dead][col];
                if (v < 0) continue;
                tab[dead][col] = -1;
                set(dead, col, v);   // transfers to rep(dead), may merge further
            }
        }
    }

    /// One scan of relator w at alpha; returns false if a coincidence fired
    /// (caller restarts the scan at the surviving representative).
    bool scan_once(int alpha, const std::vector<int>& w) {
        merged_flag = false;
        int f = rep(alpha), b = rep(alpha);
        std::size_t i = 0, j = w.size();
        while (true) {
            while (i < j) {
                int nxt = get(f, col_of(w[i]));
                if (nxt < 0) break;
                f = nxt;
                ++i;
            }
            if (i == j) {
                if (f != b) {
                    merge(f, b);
                    process_coincidences();
                    return false;
                }
                return true;
            }
            while (j > i) {
                int nxt = get(b, inv_col(col_of(w[j - 1])));
                if (nxt < 0) break;
                b = nxt;
                --j;
            }
            if (i == j) {
                if (f != b) {
                    merge(f, b);
                    process_coincidences();
                    return false;
                }
                return true;
            }
            if (i + 1 == j) {
                set(f, col_of(w[i]), b);
                if (merged_flag) {
                    process_coincidences();
                    return false;
                }
                return true;
            }
            int n = new_coset();
            set(f, col_of(w[i]), n);
            if (merged_flag) {
                process_coincidences();
                return false;
            }
            f = n;
            ++i;
        }
    }

    void scan_and_fill(int alpha, const std::vector<int>& w) {
        while (!scan_once(rep(alpha), w)) {
        }
    }
};

} // namespace

CosetTable todd_coxeter(const GroupPresentation& p, int coset_limit) {
    CosetTable out;
    if (p.num_generators == 0) {
        out.completed = true;
        out.index = 1;
        out.table = {{}};
        out.coset_word = {{}};
        return out;
    }
    Enumerator e(p.num_generators, std::max(coset_limit, 2));
    try {
        for (int alpha = 0; alpha < static_cast<int>(e.tab.size()); ++alpha) {
            if (!e.alive(alpha)) continue;
            for (const auto& r : p.relators) {
                if (!e.alive(alpha)) break;
                if (r.empty()) continue;
                e.scan_and_fill(alpha, r);
            }
            if (!e.alive(alpha)) continue;
            for (int col = 0; col < 2 * p.num_generators; ++col) {
                if (!e.alive(alpha)) break;
                if (e.get(alpha, col) < 0) {
                    int n = e.new_coset();
                    e.set(alpha, col, n);
                    if (e.merged_flag) e.process_coincidences();
                }
            }
        }
    } catch (const std::length_error&) {
        out.completed = false;
        return out;
    }

    std::vector<int> label(e.tab.size(), -1);
    int next = 0;
    for (std::size_t a = 0; a < e.tab.size(); ++a)
        if (e.alive(static_cast<int>(a))) label[a] = next++;
    out.index = next;
    out.table.assign(next, std::vector<int>(2 * p.num_generators, -1));
    for (std::size_t a = 0; a < e.tab.size(); ++a) {
        if (label[a] < 0) continue;
        for (int col = 0; col < 2 * p.num_generators; ++col) {
            int d = e.get(static_cast<int>(a), col);
            if (d >= 0) out.table[label[a]][col] = label[d];
        }
    }
    for (const auto& row : out.table)
        for (int v : row)
            if (v < 0) {
                out.completed = false;
                return out;
            }
    out.completed = true;

    out.coset_word.assign(next, {});
    std::vector<bool> seen(next, false);
    std::deque<int> q{0};
    seen[0] = true;
    while (!q.empty()) {
        int c = q.front();
        q.pop_front();
        for (int g = 0; g < p.num_generators; ++g) {
            for (int sgn : {+1, -1}) {
                int col = 2 * g + (sgn > 0 ? 0 : 1);
                int d = out.table[c][col];
                if (d >= 0 && !seen[d]) {
                    seen[d] = true;
                    out.coset_word[d] = out.coset_word[c];
                    out.coset_word[d].push_back(sgn * (g + 1));
                    q.push_back(d);
                }
            }
        }
    }
    return out;
}

int CosetTable::trace(int start, const std::vector<int>& word) const {
    int c = start;
    for (int letter : word) {
        c = table.at(c).at(col_of(letter));
        if (c < 0) throw std::logic_error("trace on incomplete table");
    }
    return c;
}

int CosetTable::multiply(int a, int b) const { return trace(a, coset_word.at(b)); }

int CosetTable::inverse_of(int a) const {
    for (int b = 0; b < index; ++b)
        if (multiply(a, b) == 0) return b;
    throw std::logic_error("no inverse found");
}

} // namespace locgpd
