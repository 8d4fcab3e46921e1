#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdc/bignum.hpp"
#include "sdc/weight_enum.hpp"

namespace sdc {

// dense polynomial in y, index = degree
using Poly = std::vector<BigRat>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(Poly a, size_t e);

// invariant-ring generators, dehomogenized at x = 1:
//   g1 = 1 + y^2
//   g2 = y^2 (1 - y^2)^2
//   g3 = 1 + 759y^8 + 2576y^12 + 759y^16 + y^24
//   theta = 1 + 14y^4 + y^8     (length-8 extended Hamming enumerator)
//   xi = y^4 (1 - y^4)^4        (satisfies g3 = theta^3 - 42 xi)
const Poly& poly_g1();
const Poly& poly_g2();
const Poly& poly_g3();
const Poly& poly_theta();
const Poly& poly_xi();

enum class GleasonBasis { even, doubly_even };

// coefficients of W over the chosen basis:
//   even:        W = sum_j a_j g1^(n/2-4j) g2^j,     j = 0..n/8
//   doubly_even: W = sum_j a_j theta^(n/8-3j) g3^j,  j = 0..n/24
// entries may be unset when the constraints did not reach them
struct GleasonCoeffs {
    GleasonBasis basis = GleasonBasis::even;
    size_t n = 0;
    std::vector<std::optional<BigRat>> a;

    static size_t coeff_count(GleasonBasis basis, size_t n);
    bool complete() const;
    BigRat coeff_sum() const;  // requires complete; equals 1 for genuine enumerators
};

// expand a fully determined coefficient vector to the enumerator
WeightEnum gleason_expand(const GleasonCoeffs& gc);

// pin A_i = value pairs and solve by forward substitution; each constraint may
// introduce at most one new unknown (the systems here are triangular), later
// constraints with no new unknown act as exact consistency checks
GleasonCoeffs solve_gleason(size_t n, GleasonBasis basis,
                            const std::vector<std::pair<size_t, BigRat>>& constraints);

// convenience: solve against a complete distribution
GleasonCoeffs solve_gleason(const WeightEnum& w, GleasonBasis basis);

// shadow enumerator sum_j (-1)^j a_j 2^(n/2-6j) y^(n/2-4j) (1-y^4)^(2j)
// from an even-basis coefficient vector
WeightEnum shadow_enum(const GleasonCoeffs& gc);

// the j-th shadow basis term above, as a standalone polynomial of length n
WeightEnum shadow_basis_term(size_t n, size_t j);

struct ShadowCheck {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// structural conditions on a shadow enumerator of a putative [n, n/2, d] code:
// symmetry B_i = B_(n-i); support only on i = n/2 (mod 4); B_0 = 0;
// B_i <= 1 below d/2; at most one nonzero B_i below (d+4)/2
ShadowCheck check_shadow_constraints(const WeightEnum& ws, size_t n, size_t d);

}  // namespace sdc
