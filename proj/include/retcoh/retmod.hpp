// Return words of a patch in a substitutive or Sturmian sequence, return
// modules under a length assignment, and the theorem-1 / corollary checks.

#ifndef RETCOH_RETMOD_HPP
#define RETCOH_RETMOD_HPP

#include <functional>

#include "retcoh/apcx.hpp"
#include "retcoh/formal.hpp"
#include "retcoh/subst1d.hpp"

namespace retcoh {

/// Letter -> exact length over a shared formal basis.
struct LengthAssignment {
    BasisPtr basis;
    std::vector<FormalReal> len;  // one entry per letter

    static LengthAssignment unit(std::size_t num_letters);
    /// A fresh rationally independent symbol per letter ("<prefix>1", ...).
    static LengthAssignment symbolic(std::size_t num_letters,
                                     const std::string& prefix = "t");
    static LengthAssignment rationals(const std::vector<Rat>& lens);

    FormalReal value_of(const IntVec& abelian) const;
    bool fully_symbolic() const;  // distinct single symbols, none rational
};

struct ScanCertificate {
    std::size_t scan_length = 0;
    bool stabilized = false;
};

struct ReturnModuleReport {
    Word patch;
    std::vector<Word> return_words;  // sorted
    std::vector<IntVec> abelian_vectors;
    LatticeZn module;  // Z-span of the abelian vectors in Z^|alphabet|
    ScanCertificate certificate;
};

struct RetOptions {
    std::size_t max_scan = std::size_t(1) << 22;
    bool require_certified = true;  // throw on non-stabilized scan
};

struct PatchNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotStabilized : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::size_t> occurrences(const Word& text, const Word& patch);

ReturnModuleReport return_words(const Substitution& s, const Word& patch,
                                const RetOptions& opt = {});
ReturnModuleReport return_words(const SturmianSpec& spec, const Word& patch,
                                const RetOptions& opt = {});

std::size_t ret_rank(const ReturnModuleReport& rep, const LengthAssignment& L);
std::size_t ret_rank(const Substitution& s, const Word& patch,
                     const LengthAssignment& L, const RetOptions& opt = {});

Word supertile_patch(const Substitution& s, int letter, unsigned n);

/// Return words of a base-alphabet patch inside the collared sequence:
/// occurrences are matched after forgetting collars, but the return words
/// (and hence the module) are abelianized over the collared letters.
ReturnModuleReport base_patch_return_words(const CollaredAlphabet& c,
                                           const Word& base_patch,
                                           const RetOptions& opt = {});

struct OrderRank {
    unsigned order;
    std::size_t rank;
};

/// ret_rank of supertile patches for each order; the value must agree on
/// the top two orders, else NotStabilized.
std::size_t limit_rank(const Substitution& s, const LengthAssignment& L,
                       unsigned order_lo, unsigned order_hi,
                       const RetOptions& opt = {},
                       std::vector<OrderRank>* trace = nullptr);

struct TheoremReport {
    bool ok = false;
    std::size_t limit_rank = 0;
    std::size_t h1_rank = 0;
    std::string detail;
};

/// Theorem 1: limit rank of large patches <= rank of H^1.
TheoremReport check_theorem1(const Substitution& s, std::size_t radius,
                             const LengthAssignment& L,
                             const RetOptions& opt = {});

/// Corollary: with a fully symbolic assignment the limit rank equals the
/// rank of H^1.
TheoremReport check_corollary(const Substitution& s, std::size_t radius,
                              const LengthAssignment& L,
                              const RetOptions& opt = {});

/// Z-module of the values of a set of formal reals: an integer lattice in
/// symbol coordinates divided by a common denominator, in lowest form.
struct ScaledLattice {
    LatticeZn lattice;
    Int denom = 1;
    bool operator==(const ScaledLattice& o) const = default;
    std::string str() const;
};

ScaledLattice values_module(const std::vector<FormalReal>& values);

/// Values of the module generators of a report under L.
std::vector<FormalReal> module_values(const ReturnModuleReport& rep,
                                      const LengthAssignment& L);

}  // namespace retcoh

#endif
