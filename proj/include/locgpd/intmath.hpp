#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace locgpd {

/// Abelian group invariants: Z/d1 x ... x Z/dr x Z^free_rank with
/// 1 < d1 | d2 | ... | dr.
struct AbelianInvariants {
    std::vector<std::int64_t> torsion;
    int free_rank = 0;

    bool trivial() const { return torsion.empty() && free_rank == 0; }
    bool operator==(const AbelianInvariants&) const = default;
    std::string to_string() const;
};

/// Smith normal form diagonal of an integer matrix (rows x cols), as the
/// list of nonzero diagonal entries d1 | d2 | ... Destroys no input.
std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> m);

/// Invariants of Z^cols / rowspace(m).
AbelianInvariants cokernel_invariants(const std::vector<std::vector<std::int64_t>>& m,
                                      int cols);

} // namespace locgpd
