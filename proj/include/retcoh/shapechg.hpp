// One-dimensional shape changes: length assignments as closed 1-cochains
// on the AP graph, cohomology tests, cycle evaluations, the matrix
// prediction of large-patch return-module rank, and the generic
// rank-raising construction.

#ifndef RETCOH_SHAPECHG_HPP
#define RETCOH_SHAPECHG_HPP

#include "retcoh/apcx.hpp"
#include "retcoh/retmod.hpp"

namespace retcoh {

/// In 1D a shape cochain is exactly a length assignment on the AP edges
/// (= collared letters); every 1-cochain is closed.
using ShapeCochain = LengthAssignment;

/// Coboundary of a vertex function: edge |-> f(target) - f(source).
ShapeCochain coboundary(const APGraph& g, const std::vector<FormalReal>& f);

/// Value of a cochain on an integer edge-vector.
FormalReal evaluate(const ShapeCochain& L, const IntVec& edge_vec);

/// L applied to each cycle-basis element.
std::vector<FormalReal> evaluate_on_cycles(const ShapeCochain& L,
                                           const APGraph& g);

/// True iff L1 - L2 vanishes on every cycle (differ by a coboundary).
bool cohomologous(const APGraph& g, const ShapeCochain& l1,
                  const ShapeCochain& l2);

/// Rank of L on a spanning set of image(m^dim) inside the cycle space:
/// the matrix prediction of the limit rank of return modules.
std::size_t predicted_limit_rank(const ShapeCochain& L, const APGraph& g,
                                 const InducedMap& m);

/// Integer edge-functionals dual to the cycle basis (indicators of the
/// fundamental non-tree edges): alpha_i(z_j) = delta_ij.
std::vector<IntVec> cocycle_basis(const APGraph& g);

/// base + sum alpha_i * tau_i with fresh formal symbols tau_i; the
/// first `ell` dual cocycles are used. Requires ell <= cycle rank.
ShapeCochain synth_generic(const APGraph& g, const std::vector<Rat>& base,
                           std::size_t ell);

struct Theorem2Report {
    bool ok = false;
    std::size_t ell = 0;
    std::size_t patches_checked = 0;
    std::size_t min_rank = 0;
    std::size_t max_rank = 0;
    std::string detail;
};

/// Theorem 2 on the radius-collared substitution: with the generic
/// cochain, every legal patch of length <= patch_len_cap has return
/// module of rank >= ell. Requires ell == cech_h1_rank(s, radius).
Theorem2Report check_theorem2(const Substitution& s, std::size_t radius,
                              std::size_t ell, std::size_t patch_len_cap,
                              const RetOptions& opt = {});

}  // namespace retcoh

#endif
