#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "locgpd/core.hpp"
#include "locgpd/words.hpp"

namespace locgpd::cpx {

using Rational = boost::multiprecision::cpp_rational;

/// Ordered 2-dimensional complex. Vertices carry exact rational positions
/// giving the total order; edges are stored as (u,w) with pos[u] < pos[w],
/// faces as position-ordered triples. Every edge carries at most two faces.
struct OrderedComplex2 {
    std::vector<Rational> pos;                 // by vertex id
    std::set<std::pair<int, int>> edges;
    std::set<std::array<int, 3>> faces;

    int num_vertices() const { return static_cast<int>(pos.size()); }
    bool before(int a, int b) const { return pos[a] < pos[b]; }
    std::pair<int, int> edge_key(int a, int b) const;
    int face_count(int a, int b) const;
    bool boundary_edge(int a, int b) const;    // present with <= 1 face
    std::vector<int> boundary_vertices() const;
    int source() const;                        // minimal boundary vertex
    int target() const;                        // maximal boundary vertex
};

/// The line complex W_k: k+1 vertices at positions 0..k, k edges, no faces.
OrderedComplex2 from_wk(int k);

struct ComplexMove {
    enum class Kind { Expansion, Contraction };
    Kind kind = Kind::Expansion;
    // Expansion: boundary edge {u,w}; inserts a vertex between them.
    // Contraction: boundary edges {u,v},{v,w} with u<v<w, {u,w} absent.
    int u = -1, v = -1, w = -1;
};

/// Applies a move, checking its preconditions and the Euler bookkeeping
/// ((+1,+2,+1) for expansion, (0,+1,+1) for contraction). For expansions
/// the id of the inserted vertex is returned.
int apply_move(OrderedComplex2& s, const ComplexMove& m);

/// All maximal increasing source-to-target paths along boundary edges.
std::vector<std::vector<int>> boundary_paths(const OrderedComplex2& s);

/// Arrow labels: vertices carry objects, edges (u,w) carry arrows with
/// tgt = object(u), src = object(w); each face composes.
struct NerveLabeling {
    std::map<int, int> vertex_object;
    std::map<std::pair<int, int>, int> edge_arrow;
};

/// Word read off a labeled increasing vertex path (letters in composition
/// order, first letter on the lowest edge).
words::Word path_word(const NerveLabeling& lab, const std::vector<int>& path);

struct MoveRecord {
    ComplexMove move;
    int new_vertex = -1;      // expansions
    int arrow_uv = -1;        // labels added by the move
    int arrow_vw = -1;
    int arrow_uw = -1;
};

/// Good-complex certificate for a word equivalence: the complex history
/// from W_k together with a labeling and the two designated boundary paths.
struct Certificate {
    words::Word word1;
    words::Word word2;
    OrderedComplex2 complex;
    NerveLabeling labeling;
    std::vector<MoveRecord> history;
    std::vector<int> path1;   // boundary path carrying word1
    std::vector<int> path2;   // boundary path carrying word2
};

/// Converts a minimal move trace from words::equivalent into a complex
/// certificate; nullopt mirrors NotWithinBounds.
std::optional<Certificate> certify_equivalence(const words::Word& w1, const words::Word& w2,
                                               const FiniteLocalGroupoid& g,
                                               const words::Bounds& b = {});

/// Replays the history, revalidating every move, label composition and the
/// claimed boundary words.
bool verify_certificate(const Certificate& cert, const FiniteLocalGroupoid& g);

} // namespace locgpd::cpx
