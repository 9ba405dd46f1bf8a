#include "retcoh/formal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace retcoh {

std::shared_ptr<const FormalBasis> FormalBasis::make(
    const std::vector<std::string>& extra) {
    auto b = std::make_shared<FormalBasis>();
    b->symbols_.push_back("1");
    for (const auto& s : extra) {
        if (s == "1" || s.empty())
            throw std::invalid_argument("FormalBasis: bad symbol name");
        if (std::find(b->symbols_.begin(), b->symbols_.end(), s) !=
            b->symbols_.end())
            throw std::invalid_argument("FormalBasis: duplicate symbol " + s);
        b->symbols_.push_back(s);
    }
    return b;
}

int FormalBasis::index_of(const std::string& name) const {
    auto it = std::find(symbols_.begin(), symbols_.end(), name);
    return it == symbols_.end() ? -1 : static_cast<int>(it - symbols_.begin());
}

FormalReal FormalReal::rational(BasisPtr basis, const Rat& q) {
    FormalReal v(std::move(basis));
    v.c_[0] = q;
    return v;
}

FormalReal FormalReal::symbol(BasisPtr basis, const std::string& name) {
    int i = basis->index_of(name);
    if (i < 0) throw std::invalid_argument("unknown symbol " + name);
    FormalReal v(std::move(basis));
    v.c_[static_cast<std::size_t>(i)] = 1;
    return v;
}

bool FormalReal::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

bool FormalReal::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat FormalReal::rational_value() const {
    if (!is_rational())
        throw std::domain_error("FormalReal: not a rational value");
    return c_.empty() ? Rat(0) : c_[0];
}

namespace {
void check_same_basis(const BasisPtr& a, const BasisPtr& b) {
    if (a == b) return;
    if (a && b && a->symbols() == b->symbols()) return;
    throw std::invalid_argument("FormalReal: basis mismatch");
}
}  // namespace

FormalReal FormalReal::operator+(const FormalReal& o) const {
    check_same_basis(basis_, o.basis_);
    FormalReal r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

FormalReal FormalReal::operator-(const FormalReal& o) const {
    check_same_basis(basis_, o.basis_);
    FormalReal r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

FormalReal FormalReal::operator*(const Rat& q) const {
    FormalReal r = *this;
    for (auto& x : r.c_) x *= q;
    return r;
}

bool FormalReal::operator==(const FormalReal& o) const {
    check_same_basis(basis_, o.basis_);
    return c_ == o.c_;
}

FormalReal FormalReal::specialize(
    const std::map<std::string, Rat>& assignment) const {
    FormalReal r = *this;
    const auto& syms = basis_->symbols();
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (r.c_[i] == 0) continue;
        auto it = assignment.find(syms[i]);
        if (it == assignment.end()) continue;
        r.c_[0] += r.c_[i] * it->second;
        r.c_[i] = 0;
    }
    return r;
}

std::string FormalReal::str() const {
    std::ostringstream os;
    bool first = true;
    const auto& syms = basis_->symbols();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat x = c_[i];
        if (!first) os << (x < 0 ? " - " : " + ");
        else if (x < 0) os << "-";
        first = false;
        Rat ax = abs(x);
        if (i == 0) {
            os << ax.get_str();
        } else {
            if (ax != 1) os << ax.get_str() << "*";
            os << syms[i];
        }
    }
    if (first) os << "0";
    return os.str();
}

std::size_t rank_of_values(const std::vector<FormalReal>& vals) {
    if (vals.empty()) return 0;
    const BasisPtr& b = vals[0].basis();
    for (const auto& v : vals) check_same_basis(b, v.basis());
    RatMatrix m(vals.size(), b->size());
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = 0; j < b->size(); ++j)
            m.at(i, j) = vals[i].coeffs()[j];
    return rank_q(m);
}

Rat parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty rational");
    try {
        Rat q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational: " + text);
    }
}

namespace {

// Splits "a + b - c" into signed terms at top level.
std::vector<std::pair<int, std::string>> signed_terms(const std::string& text) {
    std::vector<std::pair<int, std::string>> terms;
    int sign = 1;
    std::string cur;
    bool at_term_start = true;
    for (char ch : text) {
        if (ch == '+' || ch == '-') {
            if (at_term_start && cur.empty()) {
                if (ch == '-') sign = -sign;
                continue;
            }
            terms.emplace_back(sign, cur);
            cur.clear();
            sign = ch == '-' ? -1 : 1;
            at_term_start = true;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(ch))) at_term_start = false;
        cur += ch;
    }
    terms.emplace_back(sign, cur);
    return terms;
}

std::vector<std::string> split_factors(const std::string& term) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : term) {
        if (ch == '*') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

bool looks_numeric(const std::string& s) {
    return !s.empty() &&
           (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-');
}

}  // namespace

FormalReal parse_formal(const BasisPtr& basis, const std::string& text) {
    FormalReal acc(basis);
    for (const auto& [sign, term] : signed_terms(text)) {
        Rat coef = sign;
        std::string sym;
        for (const auto& f : split_factors(term)) {
            if (f.empty()) throw std::invalid_argument("bad term: " + term);
            if (looks_numeric(f)) {
                coef *= parse_rational(f);
            } else {
                if (!sym.empty())
                    throw std::invalid_argument(
                        "formal reals are linear; product of symbols in: " + term);
                sym = f;
            }
        }
        if (sym.empty())
            acc = acc + FormalReal::rational(basis, coef);
        else
            acc = acc + FormalReal::symbol(basis, sym) * coef;
    }
    return acc;
}

FormalComplex FormalComplex::rational(const Rat& q) {
    FormalComplex v;
    v.c_[idx(false, kOne)] = q;
    return v;
}

FormalComplex FormalComplex::unit(Comp c, bool tau) {
    FormalComplex v;
    v.c_[idx(tau, c)] = 1;
    return v;
}

FormalComplex FormalComplex::xi() {
    FormalComplex v;
    v.c_[idx(false, kOne)] = Rat(1, 2);
    v.c_[idx(false, kISqrt3)] = Rat(1, 2);
    return v;
}

bool FormalComplex::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

bool FormalComplex::has_tau() const {
    for (std::size_t k = 4; k < 8; ++k)
        if (c_[k] != 0) return true;
    return false;
}

bool FormalComplex::is_real() const {
    return c_[idx(false, kI)] == 0 && c_[idx(false, kISqrt3)] == 0 &&
           c_[idx(true, kI)] == 0 && c_[idx(true, kISqrt3)] == 0;
}

FormalComplex FormalComplex::operator+(const FormalComplex& o) const {
    FormalComplex r = *this;
    for (std::size_t k = 0; k < 8; ++k) r.c_[k] += o.c_[k];
    return r;
}

FormalComplex FormalComplex::operator-(const FormalComplex& o) const {
    FormalComplex r = *this;
    for (std::size_t k = 0; k < 8; ++k) r.c_[k] -= o.c_[k];
    return r;
}

FormalComplex FormalComplex::operator*(const Rat& q) const {
    FormalComplex r = *this;
    for (auto& x : r.c_) x *= q;
    return r;
}

namespace {

// Product in Q(sqrt3, i), components (1, sqrt3, i, i*sqrt3).
std::array<Rat, 4> mul4(const std::array<Rat, 4>& x, const std::array<Rat, 4>& y) {
    // x = a + b*s + c*i + d*i*s with s^2 = 3, i^2 = -1.
    const Rat &a = x[0], &b = x[1], &c = x[2], &d = x[3];
    const Rat &e = y[0], &f = y[1], &g = y[2], &h = y[3];
    std::array<Rat, 4> r;
    r[0] = a * e + 3 * b * f - c * g - 3 * d * h;
    r[1] = a * f + b * e - c * h - d * g;
    r[2] = a * g + 3 * b * h + c * e + 3 * d * f;
    r[3] = a * h + b * g + c * f + d * e;
    return r;
}

}  // namespace

FormalComplex FormalComplex::operator*(const FormalComplex& o) const {
    if (has_tau() && o.has_tau())
        throw std::domain_error("FormalComplex: tau*tau is not representable");
    std::array<Rat, 4> x0, x1, y0, y1;
    for (std::size_t k = 0; k < 4; ++k) {
        x0[k] = c_[k];
        x1[k] = c_[4 + k];
        y0[k] = o.c_[k];
        y1[k] = o.c_[4 + k];
    }
    auto p00 = mul4(x0, y0);
    auto p01 = mul4(x0, y1);
    auto p10 = mul4(x1, y0);
    FormalComplex r;
    for (std::size_t k = 0; k < 4; ++k) {
        r.c_[k] = p00[k];
        r.c_[4 + k] = p01[k] + p10[k];
    }
    return r;
}

std::array<Rat, 8> FormalComplex::real_imag_coords() const {
    // (re 1, re sqrt3, re tau, re sqrt3*tau, im 1, im sqrt3, im tau, im sqrt3*tau)
    return {c_[idx(false, kOne)],  c_[idx(false, kSqrt3)],
            c_[idx(true, kOne)],   c_[idx(true, kSqrt3)],
            c_[idx(false, kI)],    c_[idx(false, kISqrt3)],
            c_[idx(true, kI)],     c_[idx(true, kISqrt3)]};
}

std::string FormalComplex::str() const {
    static const char* names[8] = {"1",     "sqrt3",     "i",     "i*sqrt3",
                                   "tau",   "sqrt3*tau", "i*tau", "i*sqrt3*tau"};
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < 8; ++k) {
        if (c_[k] == 0) continue;
        Rat x = c_[k];
        if (!first) os << (x < 0 ? " - " : " + ");
        else if (x < 0) os << "-";
        first = false;
        Rat ax = abs(x);
        if (k == 0)
            os << ax.get_str();
        else {
            if (ax != 1) os << ax.get_str() << "*";
            os << names[k];
        }
    }
    if (first) os << "0";
    return os.str();
}

FormalComplex parse_formal_complex(const std::string& text) {
    FormalComplex acc;
    for (const auto& [sign, term] : signed_terms(text)) {
        Rat coef = sign;
        bool sqrt3 = false, im = false, tau = false;
        for (const auto& f : split_factors(term)) {
            if (f.empty()) throw std::invalid_argument("bad term: " + term);
            if (looks_numeric(f)) {
                coef *= parse_rational(f);
            } else if (f == "sqrt3") {
                if (sqrt3) coef *= 3, sqrt3 = false;
                else sqrt3 = true;
            } else if (f == "i") {
                if (im) coef *= -1, im = false;
                else im = true;
            } else if (f == "tau") {
                if (tau)
                    throw std::domain_error("tau*tau is not representable");
                tau = true;
            } else {
                throw std::invalid_argument("unknown factor " + f +
                                            " (expected sqrt3, i, tau)");
            }
        }
        auto comp = im ? (sqrt3 ? FormalComplex::kISqrt3 : FormalComplex::kI)
                       : (sqrt3 ? FormalComplex::kSqrt3 : FormalComplex::kOne);
        acc = acc + FormalComplex::unit(comp, tau) * coef;
    }
    return acc;
}

}  // namespace retcoh
