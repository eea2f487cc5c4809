#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locgpd/coset.hpp"
#include "locgpd/intmath.hpp"
#include "locgpd/nerve.hpp"

namespace locgpd::homotopy {

/// A 3-truncated simplicial set given by explicit face indices. 1-simplices
/// marked `identity` (degenerate edges) act as identities in all word
/// calculus below.
struct SimplicialData {
    int num_vertices = 0;
    struct Edge {
        int d0 = -1;   // "source" vertex
        int d1 = -1;   // "target" vertex
        bool identity = false;
    };
    std::vector<Edge> edges;
    struct Tri {
        int d0 = -1, d1 = -1, d2 = -1;   // edge indices
    };
    std::vector<Tri> tris;
    struct Tet {
        int d0 = -1, d1 = -1, d2 = -1, d3 = -1;   // tri indices
    };
    std::vector<Tet> tets;
};

SimplicialData from_nerve(const nerve::SimplicialTruncation& n);

/// Reduced word in the free groupoid on the edge quiver. Letters are
/// (edge, +-1) in composition order: s(letters[i]) == t(letters[i+1]).
/// src/tgt are tracked explicitly so empty words stay based.
struct FreeWord {
    std::vector<std::pair<int, int>> letters;
    int src = -1;
    int tgt = -1;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }
    bool operator==(const FreeWord&) const = default;
    bool operator<(const FreeWord& o) const {
        return std::tie(letters, src, tgt) < std::tie(o.letters, o.src, o.tgt);
    }
};

int letter_src(const SimplicialData& x, std::pair<int, int> l);
int letter_tgt(const SimplicialData& x, std::pair<int, int> l);

FreeWord make_word(const SimplicialData& x, const std::vector<std::pair<int, int>>& letters);
FreeWord empty_word(int at);
/// Canonical reduced form: identity edges dropped, adjacent inverses
/// cancelled. Idempotent and length-non-increasing.
FreeWord reduce(const SimplicialData& x, FreeWord w);
/// Composition product a.b (b acts first); requires src(a) == tgt(b).
FreeWord concat(const SimplicialData& x, const FreeWord& a, const FreeWord& b);
FreeWord inverse_word(const SimplicialData& x, const FreeWord& w);

/// Boundary loop of a 2-simplex, based at d0 d1 sigma.
FreeWord boundary2(const SimplicialData& x, int tri);

/// Gamma_2 generator: an approach word w with t(w) = basepoint and
/// s(w) = base of the boundary loop of sigma.
struct Gamma2Gen {
    FreeWord w;
    int tri = -1;
};
using Gamma2Elt = std::vector<std::pair<Gamma2Gen, int>>;   // formal signed product

FreeWord delta2_gen(const SimplicialData& x, const Gamma2Gen& g);
FreeWord delta2(const SimplicialData& x, const Gamma2Elt& e);

/// Gamma_3 generator over a 3-simplex.
struct Gamma3Gen {
    Gamma2Elt xi;
    FreeWord w;
    int tet = -1;
};

Gamma2Elt delta3(const SimplicialData& x, const Gamma3Gen& g);

/// Spanning-tree presentation of pi_1 of the 2-truncation at a basepoint.
struct Pi1Presentation {
    int basepoint = -1;
    std::vector<int> gen_edges;        // non-tree, non-identity edges
    std::vector<int> tree_parent;      // per vertex: edge toward the basepoint
    GroupPresentation pres;
};

/// Throws DisconnectedFromBasepoint if some vertex is unreachable from x
/// (pass allow_disconnected to present just the component of x).
Pi1Presentation pi1_presentation(const SimplicialData& x, int basepoint,
                                 bool allow_disconnected = false);

AbelianInvariants h1(const GroupPresentation& p);

/// H1 of the normalized chain complex of a 2-truncation (independent of the
/// presentation route).
AbelianInvariants chain_h1(const nerve::SimplicialTruncation& n);

struct CrossCheckReport {
    AbelianInvariants h1_ac;
    AbelianInvariants h1_pi1;
    bool h1_equal = false;
    std::optional<int> order_ac;    // vertex group order when enumeration completes
    std::optional<int> order_pi1;
    bool orders_match = false;      // meaningful when both present
};

/// Associative-completion presentation vs Moore-Smith pi_1 of the nerve, at
/// the component of a basepoint object.
CrossCheckReport ac_vs_pi1(const FiniteLocalGroupoid& g, int basepoint_object = 0,
                           int coset_limit = 20'000);

/// Image groupoid U of (t,s), a subgroupoid of the pair groupoid; fills
/// arrow_to_u with the arrow map when requested.
FiniteLocalGroupoid image_groupoid(const FiniteLocalGroupoid& g,
                                   std::vector<int>* arrow_to_u = nullptr);

struct SimplicialMonodromyReport {
    bool exact = false;
    AbelianInvariants invariants;
    std::vector<std::string> generators;   // arrow names generating the group
    std::string note;
};

/// Abelianized K1/delta(K2) at object x. Exact when U is discrete (all
/// arrows isotropic) or when (t,s) is injective on arrows; otherwise an
/// abelianized approximation, flagged as such.
SimplicialMonodromyReport simplicial_monodromy_ab(const FiniteLocalGroupoid& g, int x);

} // namespace locgpd::homotopy
