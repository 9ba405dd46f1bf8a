// One-dimensional substitutions: primitivity, fixed points, factor
// languages, collaring, Sturmian words, periodicity screening.

#ifndef RETCOH_SUBST1D_HPP
#define RETCOH_SUBST1D_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "retcoh/exactlin.hpp"

namespace retcoh {

/// A word over an indexed alphabet; each char holds a letter index.
using Word = std::string;

inline Word word_of(std::initializer_list<int> letters) {
    Word w;
    for (int l : letters) w.push_back(static_cast<char>(l));
    return w;
}

struct Substitution {
    std::vector<std::string> letters;  // display names
    std::vector<Word> rule;            // images, letter indices

    std::size_t size() const { return letters.size(); }
    int index_of(const std::string& name) const;

    /// Entry (i, j) counts letter i in rule(j).
    RatMatrix abelianization() const;

    Word apply(const Word& w) const;
    Word iterate(int letter, unsigned n) const;  // sigma^n(letter)

    /// Shortest legal word of length >= min_len of the form sigma^k(letter 0).
    Word sample(std::size_t min_len) const;

    IntVec abelian_vector(const Word& w) const;

    std::string render(const Word& w, const std::string& sep = "") const;
    Word parse_word(const std::string& text) const;  // names, whitespace ok

    void validate() const;  // nonempty images over the alphabet
};

bool check_primitive(const Substitution& s);

/// Prefix of the one-sided fixed point seeded at `seed`; requires
/// rule(seed) to start with seed.
Word fixed_point_prefix(const Substitution& s, int seed, std::size_t min_len);

/// All length-n factors of the substitution language (primitive s only).
std::set<Word> legal_words(const Substitution& s, std::size_t n);

/// Smallest p <= max_period with w[i] == w[i+p] on the overlap, if any.
/// A screening device, not an aperiodicity proof.
std::optional<std::size_t> periodicity_screen(const Word& w,
                                              std::size_t max_period);

/// Collared alphabet of radius r: one letter per legal (2r+1)-factor,
/// with the substitution lifted to collared letters.
struct CollaredAlphabet {
    std::size_t radius = 0;
    Substitution base;
    Substitution collared;             // letters named "(l)x(r)"
    std::vector<int> forget;           // collared letter -> base letter
    std::vector<Word> window;          // collared letter -> its (2r+1)-window
    std::set<std::pair<int, int>> legal_pairs;  // adjacent collared letters
};

CollaredAlphabet collar(const Substitution& s, std::size_t radius);

/// Sturmian parameters: alpha = (p + q*sqrt(d))/r, irrational, 0 < alpha < 1.
struct SturmianSpec {
    Int d, p, q, r;
    Rat rho;
    void validate() const;
};

/// floor((a + b*sqrt(d)) / c) with c > 0 and d not a perfect square,
/// computed with integer square roots only.
Int floor_surd(const Int& a, const Int& b, const Int& c, const Int& d);

/// First n letters (0 = a, 1 = b) of the coding
/// s_k = b iff floor((k+1)*alpha + rho) > floor(k*alpha + rho).
Word sturmian_prefix(const SturmianSpec& spec, std::size_t n);

}  // namespace retcoh

#endif
