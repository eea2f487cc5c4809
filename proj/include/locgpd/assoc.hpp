#pragma once

#include <optional>
#include <vector>

#include "locgpd/core.hpp"

namespace locgpd::assoc {

/// Full binary tree over m leaves, canonical enumeration order (split point
/// ascending, left subtree major).
struct Bracketing {
    struct Node {
        int leaf = -1;   // leaf index, or -1 for inner nodes
        int left = -1;
        int right = -1;
    };
    std::vector<Node> nodes;
    int root = -1;
    int leaves = 0;

    std::string render() const;
};

/// All Catalan(m-1) bracketings of an m-fold product, 1 <= m <= 12.
std::vector<Bracketing> bracketings(int m);

/// Word for this module: tuple of arrows, letters[i] composes with
/// letters[i+1] (src(letters[i]) == tgt(letters[i+1])).
using Tuple = std::vector<int>;

/// Bottom-up partial evaluation; nullopt iff some intermediate pair is
/// outside U.
std::optional<int> evaluate(const Tuple& w, const Bracketing& b,
                            const FiniteLocalGroupoid& g);

/// The multiplication pairs used by a successful evaluation, in bottom-up
/// order.
std::vector<std::pair<int, int>> evaluation_pairs(const Tuple& w, const Bracketing& b,
                                                  const FiniteLocalGroupoid& g);

struct AssocFailure {
    Tuple tuple;
    int bracketing_a = -1;
    int bracketing_b = -1;
    int value_a = -1;
    int value_b = -1;
};

struct AssocReport {
    int order_checked = 0;
    std::optional<AssocFailure> failure;   // empty == Pass
    bool pass() const { return !failure.has_value(); }
};

/// Checks all well-formed m-tuples for m in {3..n} against all bracketing
/// pairs; returns the lexicographically first witness on failure. Guarded:
/// throws SearchSpaceTooLarge when the tuple space at some m exceeds the
/// budget.
AssocReport assoc_order(const FiniteLocalGroupoid& g, int n,
                        std::size_t budget = 20'000'000);

/// Greedy restriction deleting non-unit-adjacent pairs implicated in
/// failures until assoc_order(.., n) passes. V is shrunk alongside when a
/// deleted pair breaks an inverse-product axiom.
FiniteLocalGroupoid restrict_to_n_associative(const FiniteLocalGroupoid& g, int n);

} // namespace locgpd::assoc
