#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "locgpd/errors.hpp"

namespace locgpd {

/// An arrow of a finite local groupoid. `src`/`tgt` index into the owning
/// table's object list.
struct Arrow {
    std::string id;
    int src = -1;
    int tgt = -1;
};

/// Finite local groupoid: a table of objects and arrows with a partial
/// multiplication (domain U) and a partial inversion (domain V). Units are
/// explicit arrows, one per object. Immutable by convention after
/// construction; all operations below are pure.
struct FiniteLocalGroupoid {
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;
    std::vector<int> unit_of;                  // object index -> unit arrow index
    std::map<std::pair<int, int>, int> mult;   // (g,h) -> gh on U
    std::map<int, int> inv;                    // g -> g^-1 on V

    int object_index(const std::string& name) const;
    int arrow_index(const std::string& id) const;

    int src(int a) const { return arrows.at(a).src; }
    int tgt(int a) const { return arrows.at(a).tgt; }
    bool is_unit(int a) const;
    bool composable(int g, int h) const { return src(g) == tgt(h); }
    std::optional<int> product(int g, int h) const;
    std::optional<int> inverse(int g) const;

    std::size_t num_objects() const { return objects.size(); }
    std::size_t num_arrows() const { return arrows.size(); }

    /// Arrow indices of isotropy elements at object x (src == tgt == x).
    std::vector<int> isotropy(int x) const;

    /// Connected components of the arrow quiver; entry i is the component
    /// index of object i.
    std::vector<int> components() const;

    /// Structural sanity: ids unique, endpoints exist, mult/inv entries
    /// reference arrows. Throws MalformedTable otherwise.
    void check_well_formed() const;
};

struct AxiomCheck {
    std::string name;
    bool passed = true;
    std::string witness;   // empty when passed
};

struct ValidationReport {
    std::vector<AxiomCheck> axioms;
    bool three_associative = true;
    std::string three_associativity_witness;
    // V x_s,t V subset U holds in full. Reported, not enforced: finite models
    // of interval type keep all elements invertible while U stays partial.
    bool v_pairs_in_u = true;
    std::string v_pairs_witness;

    bool axioms_pass() const;
};

ValidationReport validate(const FiniteLocalGroupoid& g);

/// Restriction: same objects and arrows, smaller U and V. keep_mult must
/// contain all unit-adjacent pairs, keep_inv all units; the result must
/// still satisfy the inverse-pair axioms.
FiniteLocalGroupoid restrict_table(const FiniteLocalGroupoid& g,
                                   const std::set<std::pair<int, int>>& keep_mult,
                                   const std::set<int>& keep_inv);

/// A bracketed product expression over arrows of a table, as a binary tree
/// in a node pool. Leaves carry an arrow index.
struct BracketedProduct {
    struct Node {
        int arrow = -1;     // leaf arrow, or the evaluated product at inner nodes
        int left = -1;
        int right = -1;
    };
    std::vector<Node> nodes;
    int root = -1;

    bool leaf(int n) const { return nodes[n].left < 0; }
    /// Re-evaluate bottom-up against a table; nullopt if a pair leaves U.
    std::optional<int> evaluate(const FiniteLocalGroupoid& g) const;
    std::string render(const FiniteLocalGroupoid& g) const;
};

struct InversionalReport {
    bool inversional = false;
    std::map<int, BracketedProduct> certificates;   // arrow -> product of V-elements
    std::vector<int> unreachable;                   // empty iff inversional
};

InversionalReport is_inversional(const FiniteLocalGroupoid& g);

/// True iff the product closure of `s` (bracketed products, BFS) covers all
/// arrows. Requires units in s.
bool generates(const FiniteLocalGroupoid& g, const std::set<int>& s);

// --- canonical example constructors -------------------------------------

/// {-k..k} subset Z with addition defined iff the sum stays in range.
FiniteLocalGroupoid interval_group(int k);
/// {-k..k} as centered residues mod n; sums reduced mod n, defined iff the
/// centered representative stays in range. Requires 2k+1 <= n.
FiniteLocalGroupoid interval_group(int k, int modulus);
/// Full group table of Z/n.
FiniteLocalGroupoid cyclic(int n);
/// Pair groupoid over the vertices of a graph, with multiplication
/// restricted to pairs where at least one factor is a unit or a graph-edge
/// arrow; V = units + graph-edge arrows.
FiniteLocalGroupoid pair_restriction(int n_vertices,
                                     const std::vector<std::pair<int, int>>& edges);
/// Pair groupoid with total multiplication (complete graph restriction).
FiniteLocalGroupoid pair_groupoid(int n_vertices);

/// Morphism of finite local groupoids (object map + arrow map).
struct Morphism {
    const FiniteLocalGroupoid* dom = nullptr;
    const FiniteLocalGroupoid* cod = nullptr;
    std::vector<int> object_map;
    std::vector<int> arrow_map;

    bool valid() const;   // units, endpoints, U and V compatibility
};

} // namespace locgpd
