// Anderson-Putnam graph complex of a (collared) 1D substitution: cycle
// space, substitution-induced map on it, and the rank of the first Cech
// cohomology of the hull as the eventual rank of that map.

#ifndef RETCOH_APCX_HPP
#define RETCOH_APCX_HPP

#include "retcoh/exactlin.hpp"
#include "retcoh/subst1d.hpp"

namespace retcoh {

struct APGraph {
    std::size_t num_edges = 0;  // one oriented edge per collared letter
    std::size_t num_vertices = 0;
    std::size_t num_components = 0;
    std::vector<int> src, dst;              // per edge
    std::vector<Word> edge_subst;           // edge -> forward edge path
    std::vector<int> vertex_image;          // substitution on vertices
    std::vector<IntVec> cycle_basis;        // integer edge-vectors, ker(boundary)
    std::vector<std::size_t> fundamental_edges;  // defining non-tree edges

    /// Boundary of an integer edge-vector, as a vertex vector.
    IntVec boundary(const IntVec& z) const;

    /// Edge-vector of an oriented edge path.
    IntVec path_vector(const Word& path) const;

    /// Cycle-basis coordinates of a cycle (reads off the fundamental edges).
    IntVec cycle_coords(const IntVec& z) const;

    std::string edge_list(const Substitution& collared) const;
};

APGraph build_ap(const CollaredAlphabet& c);

inline std::size_t cycle_rank(const APGraph& g) {
    return g.num_edges - g.num_vertices + g.num_components;
}

/// Substitution action on the cycle space, in cycle-basis coordinates.
struct InducedMap {
    RatMatrix matrix;  // integer, square, size = cycle rank
};

InducedMap induced_map(const APGraph& g);

/// Eventual rank of the induced map on the radius-collared AP graph.
std::size_t cech_h1_rank(const Substitution& s, std::size_t radius);

}  // namespace retcoh

#endif
