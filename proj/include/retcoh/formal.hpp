// Exact reals as Q-linear combinations over a declared basis of rationally
// independent symbols, and a fixed 8-dimensional complex algebra
// Q(sqrt3, i) + tau*Q(sqrt3, i) used by the Hat classifier.

#ifndef RETCOH_FORMAL_HPP
#define RETCOH_FORMAL_HPP

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "retcoh/exactlin.hpp"

namespace retcoh {

/// Ordered list of distinct symbol names. Position 0 is always "1", the
/// rational unit; the remaining symbols stand for reals that are assumed
/// rationally independent of each other and of 1.
class FormalBasis {
  public:
    /// Builds the basis {"1"} + extra (extra must not contain "1").
    static std::shared_ptr<const FormalBasis> make(
        const std::vector<std::string>& extra);

    const std::vector<std::string>& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    int index_of(const std::string& name) const;  // -1 if absent

  private:
    std::vector<std::string> symbols_;
};

using BasisPtr = std::shared_ptr<const FormalBasis>;

/// Element of the Q-vector space spanned by a FormalBasis. Closed under
/// addition and rational scaling; products of two non-rational values are
/// deliberately not defined.
class FormalReal {
  public:
    FormalReal() = default;
    explicit FormalReal(BasisPtr basis)
        : basis_(std::move(basis)), c_(basis_->size()) {}

    static FormalReal rational(BasisPtr basis, const Rat& q);
    static FormalReal symbol(BasisPtr basis, const std::string& name);

    const BasisPtr& basis() const { return basis_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat& coeff(std::size_t i) { return c_[i]; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws unless is_rational()

    FormalReal operator+(const FormalReal& o) const;
    FormalReal operator-(const FormalReal& o) const;
    FormalReal operator*(const Rat& q) const;
    bool operator==(const FormalReal& o) const;

    /// Substitutes rationals for symbols. Partial assignments leave the
    /// unassigned symbols in place.
    FormalReal specialize(const std::map<std::string, Rat>& assignment) const;

    std::string str() const;

  private:
    BasisPtr basis_;
    std::vector<Rat> c_;
};

/// Q-dimension of the span of vals. Throws on basis mismatch.
std::size_t rank_of_values(const std::vector<FormalReal>& vals);

/// Parses "3/2 + 1*t1 - t2" over the given basis.
FormalReal parse_formal(const BasisPtr& basis, const std::string& text);

/// Element of Q(sqrt3, i) + tau*Q(sqrt3, i), tau a formal real that is
/// transcendental over Q(sqrt3). Components are indexed over
/// {1, sqrt3, i, i*sqrt3} x {1, tau}.
class FormalComplex {
  public:
    enum Comp { kOne = 0, kSqrt3 = 1, kI = 2, kISqrt3 = 3 };

    FormalComplex() = default;

    static FormalComplex rational(const Rat& q);
    static FormalComplex unit(Comp c, bool tau = false);
    static FormalComplex xi();  // exp(2*pi*i/6) = 1/2 + (1/2) i sqrt3

    const Rat& coeff(bool tau, Comp c) const { return c_[idx(tau, c)]; }
    Rat& coeff(bool tau, Comp c) { return c_[idx(tau, c)]; }

    bool is_zero() const;
    bool has_tau() const;
    /// True iff the value is real: no i or i*sqrt3 component.
    bool is_real() const;

    FormalComplex operator+(const FormalComplex& o) const;
    FormalComplex operator-(const FormalComplex& o) const;
    FormalComplex operator*(const FormalComplex& o) const;  // throws on tau*tau
    FormalComplex operator*(const Rat& q) const;
    bool operator==(const FormalComplex& o) const = default;

    /// Coordinates over the real basis {1, sqrt3, tau, sqrt3*tau} for the
    /// real part followed by the same four for the imaginary part.
    std::array<Rat, 8> real_imag_coords() const;

    std::string str() const;

  private:
    static std::size_t idx(bool tau, Comp c) {
        return (tau ? 4 : 0) + static_cast<std::size_t>(c);
    }
    std::array<Rat, 8> c_{};
};

/// Parses "1/2 + 2*sqrt3 - i*sqrt3 + tau" (factors from {sqrt3, i, tau}).
FormalComplex parse_formal_complex(const std::string& text);

/// Parses "p/q" or "p".
Rat parse_rational(const std::string& text);

}  // namespace retcoh

#endif
