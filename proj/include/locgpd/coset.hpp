#pragma once

#include <optional>
#include <string>
#include <vector>

namespace locgpd {

/// Finite group presentation. Letters in relators are +(g+1) for generator
/// g and -(g+1) for its inverse.
struct GroupPresentation {
    int num_generators = 0;
    std::vector<std::vector<int>> relators;
    std::vector<std::string> generator_names;   // optional, for reports

    /// Exponent-sum matrix of the relators (rows) over generators (cols).
    std::vector<std::vector<std::int64_t>> relator_matrix() const;
};

/// Todd-Coxeter coset enumeration over the trivial subgroup (regular
/// representation). On success the live-coset table is the Cayley table of
/// the group on the generators.
struct CosetTable {
    bool completed = false;
    int index = 0;                               // number of live cosets
    std::vector<std::vector<int>> table;         // index x 2*gens, columns 2g / 2g+1
    std::vector<std::vector<int>> coset_word;    // representative word per coset

    /// Coset reached from `start` by tracing a word (letters as in relators);
    /// only valid on completed tables.
    int trace(int start, const std::vector<int>& word) const;
    /// Group multiplication in the regular representation.
    int multiply(int a, int b) const;
    int inverse_of(int a) const;
};

/// Runs HLT-style enumeration; gives up (completed=false) once more than
/// `coset_limit` cosets would be defined.
CosetTable todd_coxeter(const GroupPresentation& p, int coset_limit);

} // namespace locgpd
