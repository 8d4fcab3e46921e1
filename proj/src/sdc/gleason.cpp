#include "sdc/gleason.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sdc {

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

Poly poly_pow(Poly a, size_t e) {
    Poly r{BigRat(1)};
    while (e) {
        if (e & 1) r = poly_mul(r, a);
        a = poly_mul(a, a);
        e >>= 1;
    }
    return r;
}

namespace {
Poly make_g2() {
    return poly_mul({0, 0, 1}, poly_pow({1, 0, -1}, 2));
}
Poly make_xi() {
    return poly_mul({0, 0, 0, 0, 1}, poly_pow({1, 0, 0, 0, -1}, 4));
}
Poly make_g3() {
    Poly g3 = poly_pow(poly_theta(), 3);
    const Poly& xi = poly_xi();
    for (size_t i = 0; i < xi.size(); ++i) g3[i] -= 42 * xi[i];
    return g3;
}
}  // namespace

const Poly& poly_g1() { static const Poly p{1, 0, 1}; return p; }
const Poly& poly_g2() { static const Poly p = make_g2(); return p; }
const Poly& poly_theta() { static const Poly p{1, 0, 0, 0, 14, 0, 0, 0, 1}; return p; }
const Poly& poly_xi() { static const Poly p = make_xi(); return p; }
const Poly& poly_g3() { static const Poly p = make_g3(); return p; }

size_t GleasonCoeffs::coeff_count(GleasonBasis basis, size_t n) {
    return (basis == GleasonBasis::even ? n / 8 : n / 24) + 1;
}

bool GleasonCoeffs::complete() const {
    return std::all_of(a.begin(), a.end(), [](const auto& x) { return x.has_value(); });
}

BigRat GleasonCoeffs::coeff_sum() const {
    BigRat s = 0;
    for (const auto& x : a) {
        if (!x) throw std::logic_error("coeff_sum: unset coefficient");
        s += *x;
    }
    return s;
}

namespace {

void check_compatible(GleasonBasis basis, size_t n) {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("length must be even and positive");
    if (basis == GleasonBasis::doubly_even && n % 8 != 0)
        throw std::invalid_argument("doubly even basis needs 8 | n");
}

std::vector<Poly> basis_polys(GleasonBasis basis, size_t n) {
    const size_t m = GleasonCoeffs::coeff_count(basis, n) - 1;
    std::vector<Poly> ps;
    ps.reserve(m + 1);
    for (size_t j = 0; j <= m; ++j)
        ps.push_back(basis == GleasonBasis::even
                         ? poly_mul(poly_pow(poly_g1(), n / 2 - 4 * j), poly_pow(poly_g2(), j))
                         : poly_mul(poly_pow(poly_theta(), n / 8 - 3 * j),
                                    poly_pow(poly_g3(), j)));
    return ps;
}

// the lower-triangular companion used for solving the doubly even case: the
// j-th element has lowest term y^(4j), unlike the g3 powers which all start
// at y^0
std::vector<Poly> xi_polys(size_t n) {
    const size_t m = n / 24;
    std::vector<Poly> ps;
    for (size_t j = 0; j <= m; ++j)
        ps.push_back(poly_mul(poly_pow(poly_theta(), n / 8 - 3 * j), poly_pow(poly_xi(), j)));
    return ps;
}

BigRat coeff_at(const Poly& p, size_t i) { return i < p.size() ? p[i] : BigRat(0); }

// forward substitution: each constraint either determines exactly one new
// unknown or must already hold
std::vector<std::optional<BigRat>> triangular_solve(
    const std::vector<Poly>& ps, const std::vector<std::pair<size_t, BigRat>>& constraints) {
    std::map<size_t, BigRat> sorted;
    for (const auto& [i, v] : constraints) {
        if (!sorted.emplace(i, v).second)
            throw std::invalid_argument("duplicate constraint at weight " + std::to_string(i));
    }
    std::vector<std::optional<BigRat>> a(ps.size());
    for (const auto& [i, target] : sorted) {
        BigRat residual = target;
        std::optional<size_t> fresh;
        bool ambiguous = false;
        for (size_t j = 0; j < ps.size(); ++j) {
            BigRat c = coeff_at(ps[j], i);
            if (c == 0) continue;
            if (a[j]) {
                residual -= c * *a[j];
            } else if (!fresh) {
                fresh = j;
            } else {
                ambiguous = true;
            }
        }
        if (ambiguous)
            throw std::invalid_argument("constraint at weight " + std::to_string(i) +
                                        " involves several undetermined coefficients");
        if (fresh) {
            a[*fresh] = residual / coeff_at(ps[*fresh], i);
        } else if (residual != 0) {
            throw std::invalid_argument("inconsistent constraint at weight " + std::to_string(i) +
                                        ": residual " + rat_str(residual));
        }
    }
    return a;
}

}  // namespace

WeightEnum gleason_expand(const GleasonCoeffs& gc) {
    check_compatible(gc.basis, gc.n);
    if (gc.a.size() != GleasonCoeffs::coeff_count(gc.basis, gc.n))
        throw std::invalid_argument("coefficient count does not match length");
    if (!gc.complete()) throw std::invalid_argument("expand: unset coefficients present");
    const auto ps = basis_polys(gc.basis, gc.n);
    WeightEnum w(gc.n);
    for (size_t j = 0; j < ps.size(); ++j) {
        if (*gc.a[j] == 0) continue;
        for (size_t i = 0; i < ps[j].size() && i <= gc.n; ++i) w.a[i] += *gc.a[j] * ps[j][i];
    }
    return w;
}

GleasonCoeffs solve_gleason(size_t n, GleasonBasis basis,
                            const std::vector<std::pair<size_t, BigRat>>& constraints) {
    check_compatible(basis, n);
    for (const auto& [i, v] : constraints) {
        (void)v;
        if (i > n) throw std::invalid_argument("constraint weight exceeds length");
    }
    GleasonCoeffs gc;
    gc.basis = basis;
    gc.n = n;
    if (basis == GleasonBasis::even) {
        gc.a = triangular_solve(basis_polys(basis, n), constraints);
        return gc;
    }
    // solve against the triangular companion, then rewrite using
    // xi^i = ((theta^3 - g3)/42)^i expanded binomially
    auto ax = triangular_solve(xi_polys(n), constraints);
    const size_t m = ax.size() - 1;
    for (const auto& x : ax)
        if (!x)
            throw std::invalid_argument(
                "doubly even basis requires constraints determining every coefficient");
    std::vector<std::optional<BigRat>> ag(m + 1, BigRat(0));
    for (size_t i = 0; i <= m; ++i) {
        BigRat p42 = 1;
        for (size_t t = 0; t < i; ++t) p42 *= 42;
        for (size_t j = 0; j <= i; ++j) {
            BigRat term = *ax[i] * BigRat(binomial(i, j)) / p42;
            *ag[j] += (j % 2 ? -term : term);
        }
    }
    gc.a = std::move(ag);
    return gc;
}

GleasonCoeffs solve_gleason(const WeightEnum& w, GleasonBasis basis) {
    std::vector<std::pair<size_t, BigRat>> cs;
    cs.reserve(w.n + 1);
    for (size_t i = 0; i <= w.n; ++i) cs.emplace_back(i, w.a[i]);
    return solve_gleason(w.n, basis, cs);
}

WeightEnum shadow_basis_term(size_t n, size_t j) {
    if (n % 2 != 0 || j > n / 8) throw std::invalid_argument("shadow term out of range");
    // y^(n/2-4j) (1-y^4)^(2j), scaled by (-1)^j 2^(n/2-6j)
    Poly shifted(n / 2 - 4 * j + 1, 0);
    shifted.back() = 1;
    Poly full = poly_mul(shifted, poly_pow({1, 0, 0, 0, -1}, 2 * j));
    BigRat c = pow2(static_cast<long>(n / 2) - 6 * static_cast<long>(j));
    if (j % 2) c = -c;
    WeightEnum w(n);
    for (size_t i = 0; i < full.size() && i <= n; ++i) w.a[i] = full[i] * c;
    return w;
}

WeightEnum shadow_enum(const GleasonCoeffs& gc) {
    if (gc.basis != GleasonBasis::even)
        throw std::invalid_argument("shadow expansion is defined over the even basis");
    if (!gc.complete()) throw std::invalid_argument("shadow: unset coefficients present");
    WeightEnum w(gc.n);
    for (size_t j = 0; j < gc.a.size(); ++j) {
        if (*gc.a[j] == 0) continue;
        w = add(w, scale(shadow_basis_term(gc.n, j), *gc.a[j]));
    }
    return w;
}

ShadowCheck check_shadow_constraints(const WeightEnum& ws, size_t n, size_t d) {
    ShadowCheck r;
    if (ws.n != n) {
        r.violations.push_back("enumerator length mismatch");
        return r;
    }
    for (size_t i = 0; i <= n / 2; ++i)
        if (ws.a[i] != ws.a[n - i]) {
            r.violations.push_back("B_" + std::to_string(i) + " != B_" + std::to_string(n - i));
            break;
        }
    for (size_t i = 0; i <= n; ++i)
        if (ws.a[i] != 0 && i % 4 != (n / 2) % 4) {
            r.violations.push_back("B_" + std::to_string(i) + " nonzero but " + std::to_string(i) +
                                   " != n/2 (mod 4)");
            break;
        }
    if (ws.a[0] != 0) r.violations.push_back("B_0 nonzero");
    for (size_t i = 1; 2 * i < d; ++i)
        if (ws.a[i] > 1)
            r.violations.push_back("B_" + std::to_string(i) + " = " + rat_str(ws.a[i]) +
                                   " exceeds 1 below d/2");
    size_t low_nonzero = 0;
    for (size_t i = 1; 2 * i < d + 4; ++i)
        if (ws.a[i] != 0) ++low_nonzero;
    if (low_nonzero > 1)
        r.violations.push_back(std::to_string(low_nonzero) +
                               " nonzero coefficients below (d+4)/2, at most one allowed");
    return r;
}

}  // namespace sdc
