#include "retcoh/hat.hpp"

#include <stdexcept>

namespace retcoh {

void HatParams::validate() const {
    if (alpha.is_zero() && beta.is_zero())
        throw std::invalid_argument("hat: alpha and beta must not both be zero");
}

bool HatParams::is_real_family() const {
    return alpha.is_real() && beta.is_real();
}

const std::vector<std::string>& HatParams::preset_names() {
    static const std::vector<std::string> names = {"chevron", "hat", "spectre",
                                                   "turtle", "comet"};
    return names;
}

HatParams HatParams::preset(const std::string& name) {
    HatParams p;
    auto one = FormalComplex::rational(1);
    auto sqrt3 = FormalComplex::unit(FormalComplex::kSqrt3);
    if (name == "chevron") {
        p.alpha = one;
    } else if (name == "hat") {
        p.alpha = sqrt3;
        p.beta = one;
    } else if (name == "spectre") {
        p.alpha = one;
        p.beta = one;
    } else if (name == "turtle") {
        p.alpha = one;
        p.beta = sqrt3;
    } else if (name == "comet") {
        p.beta = one;
    } else {
        throw std::invalid_argument("unknown hat preset " + name);
    }
    return p;
}

std::vector<FormalComplex> hat_return_generators(const HatParams& p) {
    p.validate();
    FormalComplex i = FormalComplex::unit(FormalComplex::kI);
    FormalComplex xi = FormalComplex::xi();
    FormalComplex one_plus_xi = FormalComplex::rational(1) + xi;
    FormalComplex g1 = (p.alpha + i * p.beta) * one_plus_xi;
    FormalComplex g2 = i * p.beta * one_plus_xi * Rat(2);
    return {g1, g1 * xi, g2, g2 * xi};
}

std::size_t hat_rank(const HatParams& p) {
    auto gens = hat_return_generators(p);
    std::vector<std::vector<Rat>> rows;
    for (const auto& g : gens) {
        auto c = g.real_imag_coords();
        rows.emplace_back(c.begin(), c.end());
    }
    return rank_q(RatMatrix::from_rows(rows));
}

namespace {

// The 4 real coordinates {1, sqrt3, tau, sqrt3*tau} of a real value.
std::array<Rat, 4> real_coords(const FormalComplex& v) {
    auto c = v.real_imag_coords();
    return {c[0], c[1], c[2], c[3]};
}

}  // namespace

bool hat_is_rational_case(const HatParams& p) {
    if (!p.is_real_family())
        throw std::invalid_argument("hat_is_rational_case: parameters not real");
    if (p.alpha.is_zero())
        throw std::invalid_argument("hat_is_rational_case: alpha = 0");
    FormalComplex num = p.beta * FormalComplex::unit(FormalComplex::kSqrt3);
    auto a = real_coords(p.alpha);
    auto n = real_coords(num);
    // n = q*a for some rational q iff the two vectors are proportional.
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (n[i] * a[j] != n[j] * a[i]) return false;
    return true;
}

Rat hat_criterion_value(const HatParams& p) {
    if (!hat_is_rational_case(p))
        throw std::invalid_argument("hat_criterion_value: not the rational case");
    FormalComplex num = p.beta * FormalComplex::unit(FormalComplex::kSqrt3);
    auto a = real_coords(p.alpha);
    auto n = real_coords(num);
    for (std::size_t i = 0; i < 4; ++i)
        if (a[i] != 0) return n[i] / a[i];
    throw std::logic_error("hat_criterion_value: alpha = 0");
}

}  // namespace retcoh
