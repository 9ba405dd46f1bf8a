#include "retcoh/shapechg.hpp"

#include <sstream>

namespace retcoh {

ShapeCochain coboundary(const APGraph& g, const std::vector<FormalReal>& f) {
    if (f.size() != g.num_vertices)
        throw std::invalid_argument("coboundary: need one value per vertex");
    ShapeCochain L;
    L.basis = f.empty() ? FormalBasis::make({}) : f[0].basis();
    for (std::size_t e = 0; e < g.num_edges; ++e)
        L.len.push_back(f[static_cast<std::size_t>(g.dst[e])] -
                        f[static_cast<std::size_t>(g.src[e])]);
    return L;
}

FormalReal evaluate(const ShapeCochain& L, const IntVec& edge_vec) {
    if (edge_vec.size() != L.len.size())
        throw std::invalid_argument("evaluate: dimension mismatch");
    FormalReal v(L.basis);
    for (std::size_t e = 0; e < edge_vec.size(); ++e)
        if (edge_vec[e] != 0) v = v + L.len[e] * Rat(edge_vec[e]);
    return v;
}

std::vector<FormalReal> evaluate_on_cycles(const ShapeCochain& L,
                                           const APGraph& g) {
    std::vector<FormalReal> out;
    for (const IntVec& z : g.cycle_basis) out.push_back(evaluate(L, z));
    return out;
}

bool cohomologous(const APGraph& g, const ShapeCochain& l1,
                  const ShapeCochain& l2) {
    if (l1.len.size() != g.num_edges || l2.len.size() != g.num_edges)
        throw std::invalid_argument("cohomologous: cochain size mismatch");
    for (const IntVec& z : g.cycle_basis) {
        FormalReal diff = evaluate(l1, z) - evaluate(l2, z);
        if (!diff.is_zero()) return false;
    }
    return true;
}

std::size_t predicted_limit_rank(const ShapeCochain& L, const APGraph& g,
                                 const InducedMap& m) {
    std::size_t k = g.cycle_basis.size();
    if (k == 0) return 0;
    RatMatrix img = m.matrix.pow(k);
    std::vector<FormalReal> on_cycles = evaluate_on_cycles(L, g);
    std::vector<FormalReal> vals;
    for (std::size_t col = 0; col < k; ++col) {
        FormalReal v(L.basis);
        for (std::size_t j = 0; j < k; ++j)
            if (img.at(j, col) != 0) v = v + on_cycles[j] * img.at(j, col);
        vals.push_back(std::move(v));
    }
    return rank_of_values(vals);
}

std::vector<IntVec> cocycle_basis(const APGraph& g) {
    std::vector<IntVec> out;
    for (std::size_t e : g.fundamental_edges) {
        IntVec a(g.num_edges, 0);
        a[e] = 1;
        out.push_back(std::move(a));
    }
    return out;
}

ShapeCochain synth_generic(const APGraph& g, const std::vector<Rat>& base,
                           std::size_t ell) {
    if (base.size() != g.num_edges)
        throw std::invalid_argument("synth_generic: base size mismatch");
    for (const Rat& q : base)
        if (q <= 0)
            throw std::invalid_argument(
                "synth_generic: base lengths must be positive rationals");
    std::size_t k = g.cycle_basis.size();
    if (ell > k)
        throw std::invalid_argument("synth_generic: ell exceeds cycle rank");
    // The chosen dual cocycles must stay independent in the direct limit:
    // their restrictions to image(m^k) are the rows of m^k, so pick a set
    // of rows of full rank ell greedily.
    std::vector<std::size_t> chosen;
    if (ell > 0) {
        RatMatrix img = induced_map(g).matrix.pow(k);
        std::vector<std::vector<Rat>> rows;
        for (std::size_t j = 0; j < k && chosen.size() < ell; ++j) {
            std::vector<Rat> row;
            for (std::size_t col = 0; col < k; ++col)
                row.push_back(img.at(j, col));
            rows.push_back(row);
            if (rank_q(RatMatrix::from_rows(rows)) == rows.size())
                chosen.push_back(j);
            else
                rows.pop_back();
        }
        if (chosen.size() < ell)
            throw std::invalid_argument(
                "synth_generic: ell exceeds the eventual rank");
    }
    std::vector<std::string> syms;
    for (std::size_t i = 0; i < ell; ++i)
        syms.push_back("tau" + std::to_string(i + 1));
    ShapeCochain L;
    L.basis = FormalBasis::make(syms);
    for (std::size_t e = 0; e < g.num_edges; ++e)
        L.len.push_back(FormalReal::rational(L.basis, base[e]));
    for (std::size_t i = 0; i < ell; ++i) {
        std::size_t e = g.fundamental_edges[chosen[i]];
        L.len[e] = L.len[e] + FormalReal::symbol(L.basis, syms[i]);
    }
    return L;
}

Theorem2Report check_theorem2(const Substitution& s, std::size_t radius,
                              std::size_t ell, std::size_t patch_len_cap,
                              const RetOptions& opt) {
    std::size_t h1 = cech_h1_rank(s, radius);
    if (ell != h1)
        throw std::invalid_argument("check_theorem2: ell must equal the H1 rank");
    CollaredAlphabet c = collar(s, radius);
    APGraph g = build_ap(c);
    ShapeCochain L =
        synth_generic(g, std::vector<Rat>(g.num_edges, Rat(1)), ell);

    Theorem2Report rep;
    rep.ell = ell;
    bool first = true;
    for (std::size_t n = 1; n <= patch_len_cap; ++n) {
        for (const Word& p : legal_words(c.collared, n)) {
            std::size_t r = ret_rank(c.collared, p, L, opt);
            ++rep.patches_checked;
            if (first) {
                rep.min_rank = rep.max_rank = r;
                first = false;
            } else {
                rep.min_rank = std::min(rep.min_rank, r);
                rep.max_rank = std::max(rep.max_rank, r);
            }
        }
    }
    rep.ok = !first && rep.min_rank >= ell;
    std::ostringstream os;
    os << "checked " << rep.patches_checked << " patches up to length "
       << patch_len_cap << "; ranks in [" << rep.min_rank << ", "
       << rep.max_rank << "], required >= " << ell
       << (rep.ok ? " : ok" : " : VIOLATION");
    rep.detail = os.str();
    return rep;
}

}  // namespace retcoh
