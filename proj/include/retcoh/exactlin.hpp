// Exact rational linear algebra over GMP: rank, Smith normal form,
// eventual rank, and finitely generated subgroups of Z^n in Hermite form.

#ifndef RETCOH_EXACTLIN_HPP
#define RETCOH_EXACTLIN_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace retcoh {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;

/// Dense matrix of exact rationals. All arithmetic is exact; there is no
/// floating point anywhere in this library.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
    static RatMatrix from_int_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }

    bool is_square() const { return rows_ == cols_; }
    bool is_integral() const;
    bool is_zero() const;

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const = default;

    /// m - lambda*I (square only).
    RatMatrix shifted(const Rat& lambda) const;

    /// m^k by repeated squaring (square only, k >= 0).
    RatMatrix pow(unsigned long k) const;

    std::string str() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

/// Rank over Q by fraction-exact Gaussian elimination.
std::size_t rank_q(const RatMatrix& m);

/// Exact determinant (square only).
Rat det(const RatMatrix& m);

/// U*m*V = D with U, V unimodular and D diagonal, d1 | d2 | ... .
struct SmithResult {
    RatMatrix u, d, v;
    std::vector<Int> diagonal() const;
};
SmithResult smith_normal_form(const RatMatrix& m);

/// rank(m^dim): the Q-rank of the direct limit of (Q^k, m). Computed by
/// repeated squaring; no eigenvalue computation is involved.
std::size_t eventual_rank(const RatMatrix& m);

/// Finitely generated subgroup of Z^n, stored as a column-style Hermite
/// normal form basis: pivot rows strictly increasing, pivots positive,
/// entries left of a pivot in its row reduced into [0, pivot).
class LatticeZn {
  public:
    LatticeZn() : ambient_(0) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<IntVec>& basis() const { return basis_; }

    /// |det| of the basis matrix when full rank, nullopt otherwise.
    std::optional<Int> index() const;

    bool contains(const IntVec& v) const;
    bool operator==(const LatticeZn& o) const = default;

    /// True iff every basis vector of o is a member (o subgroup of this).
    bool contains_lattice(const LatticeZn& o) const;

    std::string str() const;

    friend LatticeZn lattice_from_generators(std::size_t ambient_dim,
                                             const std::vector<IntVec>& gens);

  private:
    std::size_t ambient_;
    std::vector<IntVec> basis_;       // canonical HNF columns
    std::vector<std::size_t> pivot_;  // pivot row of each basis column
};

LatticeZn lattice_from_generators(std::size_t ambient_dim,
                                  const std::vector<IntVec>& gens);

/// Monic characteristic polynomial det(lambda*I - m), coefficients from
/// the constant term up (Faddeev-LeVerrier; exact).
std::vector<Rat> char_poly(const RatMatrix& m);

/// Rational linear factors of a polynomial, split off by root testing
/// (integral monic input; otherwise everything lands in `remainder`).
struct PolyFactors {
    std::vector<std::pair<Rat, unsigned>> roots;  // (root, multiplicity)
    std::vector<Rat> remainder;                   // rootless cofactor, monic
    std::string str(const std::string& var = "x") const;
};
PolyFactors factor_poly(const std::vector<Rat>& coeffs);

}  // namespace retcoh

#endif
