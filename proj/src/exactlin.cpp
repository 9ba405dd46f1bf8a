#include "retcoh/exactlin.hpp"

#include <algorithm>
#include <sstream>

namespace retcoh {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("from_int_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool RatMatrix::is_integral() const {
    for (const Rat& x : e_)
        if (x.get_den() != 1) return false;
    return true;
}

bool RatMatrix::is_zero() const {
    for (const Rat& x : e_)
        if (x != 0) return false;
    return true;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix mul: shape");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix add: shape");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sub: shape");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

RatMatrix RatMatrix::shifted(const Rat& lambda) const {
    if (!is_square()) throw std::invalid_argument("shifted: not square");
    RatMatrix r = *this;
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, i) -= lambda;
    return r;
}

RatMatrix RatMatrix::pow(unsigned long k) const {
    if (!is_square()) throw std::invalid_argument("pow: not square");
    RatMatrix result = identity(rows_);
    RatMatrix base = *this;
    while (k) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

std::size_t rank_q(const RatMatrix& m) {
    RatMatrix a = m;
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t j = col; j < a.cols(); ++j)
            std::swap(a.at(row, j), a.at(piv, j));
        Rat inv = a.at(row, col);
        for (std::size_t i = row + 1; i < a.rows(); ++i) {
            if (a.at(i, col) == 0) continue;
            Rat f = a.at(i, col) / inv;
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) -= f * a.at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

Rat det(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: not square");
    RatMatrix a = m;
    Rat d = 1;
    std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j)
                std::swap(a.at(col, j), a.at(piv, j));
            d = -d;
        }
        d *= a.at(col, col);
        Rat inv = a.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col) == 0) continue;
            Rat f = a.at(i, col) / inv;
            for (std::size_t j = col; j < n; ++j)
                a.at(i, j) -= f * a.at(col, j);
        }
    }
    return d;
}

std::vector<Int> SmithResult::diagonal() const {
    std::vector<Int> out;
    std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i).get_num());
    return out;
}

namespace {

// Integer matrix view used by SNF / HNF internals.
struct IMat {
    std::size_t rows, cols;
    std::vector<Int> e;
    IMat(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c) {}
    Int& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const {
        return e[i * cols + j];
    }
    static IMat ident(std::size_t n) {
        IMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, a), at(i, b));
    }
    // row a += f * row b
    void add_row(std::size_t a, std::size_t b, const Int& f) {
        for (std::size_t j = 0; j < cols; ++j) at(a, j) += f * at(b, j);
    }
    void add_col(std::size_t a, std::size_t b, const Int& f) {
        for (std::size_t i = 0; i < rows; ++i) at(i, a) += f * at(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols; ++j) at(a, j) = -at(a, j);
    }
    void negate_col(std::size_t a) {
        for (std::size_t i = 0; i < rows; ++i) at(i, a) = -at(i, a);
    }
};

RatMatrix to_rat(const IMat& m) {
    RatMatrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r.at(i, j) = m.at(i, j);
    return r;
}

}  // namespace

SmithResult smith_normal_form(const RatMatrix& m) {
    if (!m.is_integral())
        throw std::invalid_argument("smith_normal_form: non-integer entries");
    std::size_t rows = m.rows(), cols = m.cols();
    IMat a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a.at(i, j) = m.at(i, j).get_num();
    IMat u = IMat::ident(rows);
    IMat v = IMat::ident(cols);

    std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        // Find a nonzero pivot in the remaining block.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows && !found; ++i)
            for (std::size_t j = t; j < cols && !found; ++j)
                if (a.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        if (pi != t) {
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
        }
        if (pj != t) {
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);
        }
        // Clear row and column t; restart whenever a remainder shrinks
        // the pivot, which terminates since |pivot| strictly decreases.
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(),
                           a.at(t, t).get_mpz_t());
                a.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (a.at(i, t) != 0) {
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(),
                           a.at(t, t).get_mpz_t());
                a.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (a.at(t, j) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (!dirty) {
                // Divisibility: pivot must divide every remaining entry.
                for (std::size_t i = t + 1; i < rows && !dirty; ++i)
                    for (std::size_t j = t + 1; j < cols && !dirty; ++j)
                        if (a.at(i, j) % a.at(t, t) != 0) {
                            a.add_row(t, i, 1);
                            u.add_row(t, i, 1);
                            dirty = true;
                        }
            }
        }
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithResult r;
    r.u = to_rat(u);
    r.d = to_rat(a);
    r.v = to_rat(v);
    return r;
}

std::size_t eventual_rank(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("eventual_rank: not square");
    std::size_t dim = m.rows();
    if (dim == 0) return 0;
    RatMatrix b = m;
    unsigned long k = 1;
    while (k < dim) {
        b = b * b;
        k *= 2;
    }
    return rank_q(b);
}

namespace {

// In-place column HNF. Returns pivot rows per surviving column.
std::vector<std::size_t> column_hnf(std::size_t n,
                                    std::vector<IntVec>& cols) {
    std::vector<std::size_t> pivots;
    std::size_t c = 0;  // next column slot to fill
    for (std::size_t r = 0; r < n && c < cols.size(); ++r) {
        // Reduce entries of row r among columns >= c to a single gcd.
        while (true) {
            std::size_t best = cols.size();
            for (std::size_t j = c; j < cols.size(); ++j)
                if (cols[j][r] != 0 &&
                    (best == cols.size() ||
                     cmp(abs(cols[j][r]), abs(cols[best][r])) < 0))
                    best = j;
            if (best == cols.size()) break;  // row r all zero
            std::swap(cols[c], cols[best]);
            bool nonzero_left = false;
            for (std::size_t j = c + 1; j < cols.size(); ++j) {
                if (cols[j][r] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), cols[j][r].get_mpz_t(),
                           cols[c][r].get_mpz_t());
                for (std::size_t i = 0; i < n; ++i)
                    cols[j][i] -= q * cols[c][i];
                if (cols[j][r] != 0) nonzero_left = true;
            }
            if (!nonzero_left) break;
        }
        if (cols[c][r] != 0) {
            if (cols[c][r] < 0)
                for (std::size_t i = 0; i < n; ++i) cols[c][i] = -cols[c][i];
            pivots.push_back(r);
            ++c;
        }
    }
    cols.resize(c);
    // Normalize: entries in a pivot row, in columns left of that pivot,
    // reduced into [0, pivot).
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::size_t r = pivots[j];
        for (std::size_t j2 = 0; j2 < j; ++j2) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), cols[j2][r].get_mpz_t(),
                       cols[j][r].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t i = 0; i < n; ++i)
                cols[j2][i] -= q * cols[j][i];
        }
    }
    return pivots;
}

}  // namespace

LatticeZn lattice_from_generators(std::size_t ambient_dim,
                                  const std::vector<IntVec>& gens) {
    for (const auto& g : gens)
        if (g.size() != ambient_dim)
            throw std::invalid_argument("lattice: generator dimension mismatch");
    LatticeZn lat;
    lat.ambient_ = ambient_dim;
    lat.basis_ = gens;
    lat.basis_.erase(
        std::remove_if(lat.basis_.begin(), lat.basis_.end(),
                       [](const IntVec& v) {
                           return std::all_of(v.begin(), v.end(),
                                              [](const Int& x) { return x == 0; });
                       }),
        lat.basis_.end());
    lat.pivot_ = column_hnf(ambient_dim, lat.basis_);
    return lat;
}

std::optional<Int> LatticeZn::index() const {
    if (rank() < ambient_) return std::nullopt;
    Int idx = 1;
    for (std::size_t j = 0; j < basis_.size(); ++j) idx *= basis_[j][pivot_[j]];
    return idx;
}

bool LatticeZn::contains(const IntVec& v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("lattice membership: dimension mismatch");
    IntVec w = v;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        std::size_t r = pivot_[j];
        if (w[r] % basis_[j][r] != 0) return false;
        Int q = w[r] / basis_[j][r];
        if (q != 0)
            for (std::size_t i = 0; i < ambient_; ++i)
                w[i] -= q * basis_[j][i];
    }
    return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

bool LatticeZn::contains_lattice(const LatticeZn& o) const {
    if (o.ambient_ != ambient_) return false;
    for (const auto& b : o.basis_)
        if (!contains(b)) return false;
    return true;
}

std::string LatticeZn::str() const {
    std::ostringstream os;
    os << "rank " << rank();
    if (auto ix = index())
        os << " index " << ix->get_str();
    else
        os << " index infinite";
    os << " basis";
    if (basis_.empty()) os << " {}";
    for (const auto& b : basis_) {
        os << " (";
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) os << ',';
            os << b[i].get_str();
        }
        os << ")";
    }
    return os.str();
}

std::vector<Rat> char_poly(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: square only");
    std::size_t n = m.rows();
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    // Faddeev-LeVerrier: M_1 = m, c_{n-k} = -tr(m M_k)/k with
    // M_{k+1} = m M_k + c_{n-k} I.
    RatMatrix mk = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        c[n - k] = -tr / Rat(static_cast<long>(k));
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += c[n - k];
    }
    return c;
}

namespace {

// p(r) by Horner.
Rat poly_eval(const std::vector<Rat>& p, const Rat& r) {
    Rat v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * r + p[i];
    return v;
}

// p / (x - r), exact (r must be a root).
std::vector<Rat> poly_deflate(const std::vector<Rat>& p, const Rat& r) {
    std::vector<Rat> q(p.size() - 1);
    Rat carry = 0;
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    return q;
}

}  // namespace

PolyFactors factor_poly(const std::vector<Rat>& coeffs) {
    PolyFactors f;
    std::vector<Rat> p = coeffs;
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    if (p.size() <= 1) {
        f.remainder = p;
        return f;
    }
    bool monic_integral = p.back() == 1;
    for (const Rat& c : p)
        if (c.get_den() != 1) monic_integral = false;
    if (!monic_integral) {
        f.remainder = p;
        return f;
    }
    // Rational roots of a monic integer polynomial are integer divisors of
    // the constant term.
    auto take_root = [&](const Rat& r) {
        unsigned mult = 0;
        while (p.size() > 1 && poly_eval(p, r) == 0) {
            p = poly_deflate(p, r);
            ++mult;
        }
        if (mult) f.roots.push_back({r, mult});
    };
    take_root(Rat(0));
    if (p.size() > 1 && p[0] != 0) {
        Int a0 = abs(p[0].get_num());
        for (Int dpos = 1; dpos * dpos <= a0; ++dpos) {
            if (a0 % dpos != 0) continue;
            for (const Int& dv : {Int(dpos), Int(a0 / dpos)}) {
                take_root(Rat(dv));
                take_root(Rat(-dv));
            }
        }
    }
    f.remainder = p;
    return f;
}

std::string PolyFactors::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " * ";
        first = false;
    };
    std::vector<std::pair<Rat, unsigned>> rs = roots;
    std::sort(rs.begin(), rs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [r, mult] : rs) {
        sep();
        os << "(" << var;
        if (r > 0)
            os << " - " << r.get_str();
        else if (r < 0)
            os << " + " << Rat(-r).get_str();
        os << ")";
        if (mult > 1) os << "^" << mult;
    }
    if (remainder.size() > 1 || first) {
        sep();
        os << "(";
        bool any = false;
        for (std::size_t i = remainder.size(); i-- > 0;) {
            const Rat& c = remainder[i];
            if (c == 0 && remainder.size() > 1) continue;
            if (any) os << (c >= 0 ? " + " : " - ");
            Rat a = (any && c < 0) ? Rat(-c) : c;
            bool show_coeff = (i == 0) || a != 1;
            if (show_coeff) os << a.get_str();
            if (i > 0) {
                if (show_coeff) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
            any = true;
        }
        os << ")";
    }
    return os.str();
}

}  // namespace retcoh
