#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "locgpd/assoc.hpp"
#include "locgpd/core.hpp"
#include "locgpd/coset.hpp"
#include "locgpd/intmath.hpp"

namespace locgpd::words {

/// Well-formed word: arrow letters with src(w[i]) == tgt(w[i+1]). The word
/// composes target-first: src(w) = src(back), tgt(w) = tgt(front).
using Word = std::vector<int>;

bool well_formed(const Word& w, const FiniteLocalGroupoid& g);
int word_src(const Word& w, const FiniteLocalGroupoid& g);
int word_tgt(const Word& w, const FiniteLocalGroupoid& g);

struct Move {
    enum class Kind { Contraction, Expansion };
    Kind kind = Kind::Contraction;
    int index = 0;         // position of the pair (contraction) or letter (expansion)
    int left = -1;         // expansion payload: letter -> (left, right)
    int right = -1;
};

/// Applies a move; throws IllegalMove if the pair is outside U or the
/// payload does not multiply back to the letter.
Word apply_move(const Word& w, const Move& m, const FiniteLocalGroupoid& g);
Move inverse_move(const Word& before, const Move& m);

struct MoveTrace {
    Word start;
    std::vector<Move> moves;

    /// Replay from start; throws IllegalMove when the trace is invalid.
    Word replay(const FiniteLocalGroupoid& g) const;
    /// Trace running the moves backwards from the end word.
    MoveTrace reversed(const FiniteLocalGroupoid& g) const;
};

/// All single-step neighbors of w.
std::vector<std::pair<Move, Word>> moves_from(const Word& w, const FiniteLocalGroupoid& g);

struct Bounds {
    int max_len = 12;
    std::size_t max_steps = 1'000'000;
};

struct EquivalenceVerdict {
    enum class Kind { Equivalent, NotWithinBounds, SourceTargetMismatch };
    Kind kind = Kind::NotWithinBounds;
    std::optional<MoveTrace> trace;   // from w1 to w2 when Equivalent
};

/// Bidirectional BFS over moves with canonical word ordering; a returned
/// trace is move-count minimal. NotWithinBounds is a semi-decision.
EquivalenceVerdict equivalent(const Word& w1, const Word& w2,
                              const FiniteLocalGroupoid& g, const Bounds& b = {});

struct AssociatorCertificate {
    int arrow = -1;
    Word upper;            // common expansion w with (x) <= w and (arrow) <= w
    MoveTrace to_unit;     // contraction-only trace: upper -> (unit x)
    MoveTrace to_arrow;    // contraction-only trace: upper -> (arrow)
};

struct AssociatorReport {
    std::vector<AssociatorCertificate> found;   // complete up to the bounds
    bool bounded = true;                        // always a semi-decision
};

/// Associators at x: isotropy arrows a with a common expansion word above
/// both (unit x) and (a).
AssociatorReport associators(const FiniteLocalGroupoid& g, int x, const Bounds& b = {});

/// Spanning-forest reduction of the arrow quiver with one vertex-group
/// presentation per connected component. Generators are the non-tree,
/// non-unit arrows; one relator per U-pair.
struct GroupoidPresentation {
    std::vector<int> component_of_object;
    std::vector<int> base_of_component;
    std::vector<bool> tree_arrow;                  // per arrow
    std::vector<std::vector<int>> rho;             // arrow -> generator letters
    struct VertexGroup {
        int base = -1;
        std::vector<int> gen_arrows;
        GroupPresentation pres;
    };
    std::vector<VertexGroup> groups;
};

GroupoidPresentation presentation(const FiniteLocalGroupoid& g);

struct AcLimits {
    int coset_limit = 20'000;
    int len_limit = 64;        // relator length guard
};

struct AcResult {
    enum class Kind { Finite, InfiniteCertified, NotStabilized };
    Kind kind = Kind::NotStabilized;
    GroupoidPresentation pres;
    std::vector<AbelianInvariants> h1_per_component;
    // Finite only:
    FiniteLocalGroupoid ac;
    std::vector<int> completion_map;               // arrow of g -> arrow of ac
    std::vector<int> vertex_group_order;           // per component
};

/// Associative completion via coset enumeration on the vertex groups;
/// abelianization supplies the infinity certificate. Requires the input to
/// be inversional.
AcResult ac_build(const FiniteLocalGroupoid& g, const AcLimits& limits = {});

struct KernelReport {
    bool exact = false;                 // true when derived from a finite AC
    std::vector<int> arrows;            // mapped to units (or certified associators)
};

KernelReport completion_kernel(const FiniteLocalGroupoid& g, const Bounds& b = {},
                               const AcLimits& limits = {});

/// Image of a word under a morphism.
Word map_word(const Morphism& f, const Word& w);

/// Contraction trace evaluating a tuple along a bracketing (each pair
/// multiplication becomes one contraction move).
MoveTrace bracketing_trace(const assoc::Tuple& tuple, const assoc::Bracketing& b,
                           const FiniteLocalGroupoid& g);

/// Turns an associativity failure into an associator certificate at the
/// tuple's target object: the word (tuple, reversed letter inverses)
/// contracts both to the unit and to a nontrivial isotropy element.
/// Requires the letters to be invertible and the needed partial products
/// to be present in the table; nullopt otherwise.
std::optional<AssociatorCertificate> associator_from_failure(
    const FiniteLocalGroupoid& g, const assoc::AssocFailure& f);

} // namespace locgpd::words
