// Rank classifier for return modules of the Hat monotile family with edge
// parameters (alpha, beta), exact over Q(sqrt3, i) + tau*Q(sqrt3, i).

#ifndef RETCOH_HAT_HPP
#define RETCOH_HAT_HPP

#include "retcoh/formal.hpp"

namespace retcoh {

struct HatParams {
    FormalComplex alpha, beta;

    /// Throws if both parameters are zero.
    void validate() const;
    /// No i or i*sqrt3 component in either parameter.
    bool is_real_family() const;

    /// chevron (1,0), hat (sqrt3,1), spectre (1,1), turtle (1,sqrt3),
    /// comet (0,1). Throws on unknown names.
    static HatParams preset(const std::string& name);
    static const std::vector<std::string>& preset_names();
};

/// {(alpha + i beta)(1+xi) u, 2 i beta (1+xi) u : u in {1, xi}}: generators
/// of the return lattice (alpha+i beta)(1+xi)Z[xi] + 2i beta(1+xi)Z[xi].
std::vector<FormalComplex> hat_return_generators(const HatParams& p);

/// Q-rank of the 4x8 real-coordinate matrix of the generators; 2 or 4.
std::size_t hat_rank(const HatParams& p);

/// For real alpha != 0, beta: whether beta*sqrt3/alpha is rational, i.e.
/// the coefficient vectors of beta*sqrt3 and alpha are proportional over Q.
/// Throws if alpha = 0 or the parameters are not real.
bool hat_is_rational_case(const HatParams& p);

/// beta*sqrt3/alpha when it is rational (hat_is_rational_case true).
Rat hat_criterion_value(const HatParams& p);

}  // namespace retcoh

#endif
