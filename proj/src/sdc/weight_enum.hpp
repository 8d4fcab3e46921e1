#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdc/bignum.hpp"

namespace sdc {

// weight enumerator W(y) = sum a_i y^i with exact rational coefficients;
// code-derived instances carry nonnegative integers summing to 2^k
struct WeightEnum {
    size_t n = 0;
    std::vector<BigRat> a;

    WeightEnum() : a(1) {}
    explicit WeightEnum(size_t len) : n(len), a(len + 1) {}

    static WeightEnum from_distribution(const std::vector<uint64_t>& hist);

    BigRat sum() const;                  // W(1)
    size_t min_positive_weight() const;  // n+1 when no positive-weight term
    bool integral() const;
    bool nonnegative() const;

    bool operator==(const WeightEnum&) const = default;
};

WeightEnum add(const WeightEnum& x, const WeightEnum& y);
WeightEnum scale(const WeightEnum& x, const BigRat& c);

// keep only terms with i = r (mod m)
WeightEnum restrict_residue(const WeightEnum& w, size_t r, size_t m);

// W0 + y(W1 + W2) + y^2 W3, the enumerator of the two-tag coset extension;
// result has length n + 2
WeightEnum combine_coset_enumerators(const WeightEnum& w0, const WeightEnum& w1,
                                     const WeightEnum& w2, const WeightEnum& w3);

// coefficient-wise congruence mod p (integral coefficients required)
bool congruent_mod(const WeightEnum& x, const WeightEnum& y, const BigInt& p);

// dual enumerator (1/W(1)) sum a_i (1+y)^(n-i) (1-y)^i
WeightEnum macwilliams(const WeightEnum& w);

bool is_formally_self_dual(const WeightEnum& w);

// {"n": ..., "coeffs": {"i": "decimal or p/q", ...}}, zero terms omitted,
// keys in increasing weight order
std::string enum_to_json(const WeightEnum& w);

// plain text: one "i count" line per nonzero term, increasing i
std::string enum_to_text(const WeightEnum& w);

}  // namespace sdc
