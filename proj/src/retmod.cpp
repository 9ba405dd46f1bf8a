#include "retcoh/retmod.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace retcoh {

LengthAssignment LengthAssignment::unit(std::size_t num_letters) {
    LengthAssignment a;
    a.basis = FormalBasis::make({});
    a.len.assign(num_letters, FormalReal::rational(a.basis, 1));
    return a;
}

LengthAssignment LengthAssignment::symbolic(std::size_t num_letters,
                                            const std::string& prefix) {
    std::vector<std::string> syms;
    for (std::size_t i = 0; i < num_letters; ++i)
        syms.push_back(prefix + std::to_string(i + 1));
    LengthAssignment a;
    a.basis = FormalBasis::make(syms);
    for (const auto& s : syms) a.len.push_back(FormalReal::symbol(a.basis, s));
    return a;
}

LengthAssignment LengthAssignment::rationals(const std::vector<Rat>& lens) {
    LengthAssignment a;
    a.basis = FormalBasis::make({});
    for (const Rat& q : lens) a.len.push_back(FormalReal::rational(a.basis, q));
    return a;
}

FormalReal LengthAssignment::value_of(const IntVec& abelian) const {
    if (abelian.size() != len.size())
        throw std::invalid_argument("value_of: dimension mismatch");
    FormalReal v(basis);
    for (std::size_t i = 0; i < len.size(); ++i)
        if (abelian[i] != 0) v = v + len[i] * Rat(abelian[i]);
    return v;
}

bool LengthAssignment::fully_symbolic() const {
    std::set<std::size_t> used;
    for (const auto& v : len) {
        std::size_t nonzero = 0, where = 0;
        for (std::size_t i = 0; i < v.coeffs().size(); ++i)
            if (v.coeffs()[i] != 0) {
                ++nonzero;
                where = i;
            }
        if (nonzero != 1 || where == 0) return false;
        if (!used.insert(where).second) return false;
    }
    return true;
}

std::vector<std::size_t> occurrences(const Word& text, const Word& patch) {
    std::vector<std::size_t> out;
    if (patch.empty() || patch.size() > text.size()) return out;
    auto searcher = std::boyer_moore_horspool_searcher(patch.begin(), patch.end());
    auto it = text.begin();
    while (true) {
        it = std::search(it, text.end(), searcher);
        if (it == text.end()) break;
        out.push_back(static_cast<std::size_t>(it - text.begin()));
        ++it;
    }
    return out;
}

namespace {

// Shared scan: `grow(n)` returns a legal word of length >= n whose
// prefixes are legal. Return words are collected over doubling windows
// until the set is identical over three consecutive windows.
ReturnModuleReport scan_return_words(
    const std::function<const Word&(std::size_t)>& grow,
    std::size_t alphabet_size, const Word& patch,
    const std::function<std::vector<std::size_t>(const Word&)>& find_occ,
    const RetOptions& opt) {
    if (patch.empty()) throw std::invalid_argument("empty patch");
    ReturnModuleReport rep;
    rep.patch = patch;

    std::set<Word> words, prev;
    int stable = 0;
    bool seen_any = false;
    std::size_t window = std::max<std::size_t>(64, 4 * patch.size());
    for (; window <= opt.max_scan; window *= 2) {
        const Word& text = grow(window);
        Word view = text.substr(0, std::min(window, text.size()));
        auto occ = find_occ(view);
        if (!occ.empty()) seen_any = true;
        std::set<Word> cur;
        for (std::size_t i = 0; i + 1 < occ.size(); ++i)
            cur.insert(view.substr(occ[i], occ[i + 1] - occ[i]));
        if (!cur.empty() && cur == prev)
            ++stable;
        else
            stable = 1;
        prev = cur;
        rep.certificate.scan_length = view.size();
        if (stable >= 3) {
            rep.certificate.stabilized = true;
            words = cur;
            break;
        }
        words = cur;
    }
    if (!seen_any)
        throw PatchNotFound("patch not found in scanned language sample");

    rep.return_words.assign(words.begin(), words.end());
    std::set<IntVec> vecs;
    for (const Word& w : rep.return_words) {
        IntVec v(alphabet_size, 0);
        for (char ch : w) v[static_cast<std::size_t>(ch)] += 1;
        vecs.insert(std::move(v));
    }
    rep.abelian_vectors.assign(vecs.begin(), vecs.end());
    rep.module = lattice_from_generators(alphabet_size, rep.abelian_vectors);
    return rep;
}

}  // namespace

ReturnModuleReport return_words(const Substitution& s, const Word& patch,
                                const RetOptions& opt) {
    Word cache;
    auto grow = [&](std::size_t n) -> const Word& {
        if (cache.empty()) cache = Word(1, char(0));
        while (cache.size() < n) {
            Word next = s.apply(cache);
            if (next.size() == cache.size())
                throw std::runtime_error("substitution does not grow");
            cache = std::move(next);
        }
        return cache;
    };
    auto find_occ = [&](const Word& v) { return occurrences(v, patch); };
    return scan_return_words(grow, s.size(), patch, find_occ, opt);
}

ReturnModuleReport return_words(const SturmianSpec& spec, const Word& patch,
                                const RetOptions& opt) {
    Word cache;
    auto grow = [&](std::size_t n) -> const Word& {
        if (cache.size() < n) cache = sturmian_prefix(spec, n);
        return cache;
    };
    auto find_occ = [&](const Word& v) { return occurrences(v, patch); };
    return scan_return_words(grow, 2, patch, find_occ, opt);
}

ReturnModuleReport base_patch_return_words(const CollaredAlphabet& c,
                                           const Word& base_patch,
                                           const RetOptions& opt) {
    const Substitution& s = c.collared;
    Word cache;
    auto grow = [&](std::size_t n) -> const Word& {
        if (cache.empty()) cache = Word(1, char(0));
        while (cache.size() < n) {
            Word next = s.apply(cache);
            if (next.size() == cache.size())
                throw std::runtime_error("substitution does not grow");
            cache = std::move(next);
        }
        return cache;
    };
    auto find_occ = [&](const Word& v) {
        Word forgotten(v.size(), char(0));
        for (std::size_t i = 0; i < v.size(); ++i)
            forgotten[i] =
                static_cast<char>(c.forget[static_cast<std::size_t>(v[i])]);
        return occurrences(forgotten, base_patch);
    };
    return scan_return_words(grow, s.size(), base_patch, find_occ, opt);
}

std::vector<FormalReal> module_values(const ReturnModuleReport& rep,
                                      const LengthAssignment& L) {
    std::vector<FormalReal> vals;
    for (const IntVec& b : rep.module.basis()) vals.push_back(L.value_of(b));
    return vals;
}

std::size_t ret_rank(const ReturnModuleReport& rep, const LengthAssignment& L) {
    return rank_of_values(module_values(rep, L));
}

std::size_t ret_rank(const Substitution& s, const Word& patch,
                     const LengthAssignment& L, const RetOptions& opt) {
    ReturnModuleReport rep = return_words(s, patch, opt);
    if (opt.require_certified && !rep.certificate.stabilized)
        throw NotStabilized("return-word scan did not stabilize for patch " +
                            s.render(patch));
    return ret_rank(rep, L);
}

Word supertile_patch(const Substitution& s, int letter, unsigned n) {
    if (letter < 0 || static_cast<std::size_t>(letter) >= s.size())
        throw std::invalid_argument("supertile_patch: letter out of range");
    return s.iterate(letter, n);
}

std::size_t limit_rank(const Substitution& s, const LengthAssignment& L,
                       unsigned order_lo, unsigned order_hi,
                       const RetOptions& opt, std::vector<OrderRank>* trace) {
    if (order_hi < order_lo || order_hi - order_lo < 1)
        throw std::invalid_argument("limit_rank: need at least two orders");
    std::size_t last = 0, second_last = 0;
    for (unsigned n = order_lo; n <= order_hi; ++n) {
        Word p = supertile_patch(s, 0, n);
        std::size_t r = ret_rank(s, p, L, opt);
        if (trace) trace->push_back({n, r});
        second_last = last;
        last = r;
        if (n == order_lo) second_last = r + 1;  // force a second sample
    }
    if (last != second_last)
        throw NotStabilized("limit_rank: ranks did not stabilize over the top "
                            "two supertile orders");
    return last;
}

TheoremReport check_theorem1(const Substitution& s, std::size_t radius,
                             const LengthAssignment& L, const RetOptions& opt) {
    CollaredAlphabet c = collar(s, radius);
    if (L.len.size() != c.collared.size())
        throw std::invalid_argument(
            "check_theorem1: assignment size does not match collared alphabet");
    TheoremReport rep;
    std::vector<OrderRank> trace;
    rep.limit_rank = limit_rank(c.collared, L, 1, 6, opt, &trace);
    rep.h1_rank = cech_h1_rank(s, radius);
    rep.ok = rep.limit_rank <= rep.h1_rank;
    std::ostringstream os;
    os << "limit_rank " << rep.limit_rank << " <= h1_rank " << rep.h1_rank
       << (rep.ok ? " : ok" : " : VIOLATION");
    rep.detail = os.str();
    return rep;
}

TheoremReport check_corollary(const Substitution& s, std::size_t radius,
                              const LengthAssignment& L,
                              const RetOptions& opt) {
    if (!L.fully_symbolic())
        throw std::invalid_argument(
            "check_corollary: assignment must give each letter a fresh symbol");
    CollaredAlphabet c = collar(s, radius);
    if (L.len.size() != c.collared.size())
        throw std::invalid_argument(
            "check_corollary: assignment size does not match collared alphabet");
    TheoremReport rep;
    rep.limit_rank = limit_rank(c.collared, L, 1, 6, opt);
    rep.h1_rank = cech_h1_rank(s, radius);
    rep.ok = rep.limit_rank == rep.h1_rank;
    std::ostringstream os;
    os << "limit_rank " << rep.limit_rank << " == h1_rank " << rep.h1_rank
       << (rep.ok ? " : ok" : " : VIOLATION");
    rep.detail = os.str();
    return rep;
}

ScaledLattice values_module(const std::vector<FormalReal>& values) {
    ScaledLattice out;
    if (values.empty()) return out;
    std::size_t dim = values[0].coeffs().size();
    Int d = 1;
    for (const auto& v : values)
        for (const Rat& c : v.coeffs()) {
            Int den = c.get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
            d = d / g * den;
        }
    std::vector<IntVec> gens;
    Int content = 0;
    for (const auto& v : values) {
        IntVec g(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            Rat scaled = v.coeffs()[i] * Rat(d);
            g[i] = scaled.get_num();
            Int a;
            mpz_gcd(a.get_mpz_t(), content.get_mpz_t(), g[i].get_mpz_t());
            content = a;
        }
        gens.push_back(std::move(g));
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), content.get_mpz_t());
    if (g > 1) {
        d /= g;
        for (auto& v : gens)
            for (auto& x : v) x /= g;
    }
    out.denom = d;
    out.lattice = lattice_from_generators(dim, gens);
    return out;
}

std::string ScaledLattice::str() const {
    std::string s = lattice.str();
    if (denom != 1) s += " / " + denom.get_str();
    return s;
}

}  // namespace retcoh
