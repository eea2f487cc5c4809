#pragma once

#include <map>
#include <string>
#include <vector>

#include "locgpd/assoc.hpp"
#include "locgpd/core.hpp"

namespace locgpd::nerve {

/// Truncated nerve: level m holds the m-tuples for which all m-fold
/// products are defined and equal. Level 0 is the object set, level 1 the
/// arrow set; faces and degeneracies are stored as index maps.
struct SimplicialTruncation {
    FiniteLocalGroupoid g;
    int m_max = 0;
    std::vector<std::vector<assoc::Tuple>> level;     // level[m], m >= 1; level[0] unused
    std::vector<std::map<assoc::Tuple, int>> index;   // per level
    // face[m][i][s]: face d_i of simplex s at level m (value at level m-1;
    // for m == 1 the value is an object index)
    std::vector<std::vector<std::vector<int>>> face;
    // degen[m][i][s]: degeneracy s_i of simplex s at level m (value at level
    // m+1); present for m < m_max. degen[0] maps objects to level 1.
    std::vector<std::vector<std::vector<int>>> degen;

    std::size_t level_size(int m) const {
        if (m == 0) return g.num_objects();
        return level[m].size();
    }
    bool degenerate(int m, int s) const;   // contains a unit letter
};

/// Builds levels 1..m_max; m_max <= 6. Throws SearchSpaceTooLarge when a
/// level would exceed the budget.
SimplicialTruncation build_nerve(const FiniteLocalGroupoid& g, int m_max,
                                 std::size_t budget = 2'000'000);

struct IdentityCheck {
    bool ok = true;
    std::string witness;
};

/// Exhaustive simplicial identity check over all stored levels.
IdentityCheck check_simplicial_identities(const SimplicialTruncation& n);

struct HornClass {
    int dim = 0;
    int index = 0;
    std::size_t total = 0;
    std::size_t fillable = 0;
    std::vector<std::vector<int>> unfillable_witnesses;   // face index lists (j != index)
};

struct HornReport {
    std::vector<HornClass> classes;
    std::size_t unfillable_total() const;
};

/// Enumerates all horns Lambda^d_i assembled from stored simplices for
/// 2 <= d <= up_to_dim and tests filler existence.
HornReport horn_check(const SimplicialTruncation& n, int up_to_dim,
                      std::size_t witness_cap = 5);

/// Discrete Kan criterion: mult total on composable pairs and inv total.
bool is_global_groupoid(const FiniteLocalGroupoid& g);

} // namespace locgpd::nerve
