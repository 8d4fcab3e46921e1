#include "sdc/weight_enum.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace sdc {

WeightEnum WeightEnum::from_distribution(const std::vector<uint64_t>& hist) {
    if (hist.empty()) throw std::invalid_argument("empty distribution");
    WeightEnum w(hist.size() - 1);
    for (size_t i = 0; i < hist.size(); ++i) w.a[i] = hist[i];
    return w;
}

BigRat WeightEnum::sum() const {
    BigRat s = 0;
    for (const auto& x : a) s += x;
    return s;
}

size_t WeightEnum::min_positive_weight() const {
    for (size_t i = 1; i <= n; ++i)
        if (a[i] != 0) return i;
    return n + 1;
}

bool WeightEnum::integral() const {
    for (const auto& x : a)
        if (!is_integer(x)) return false;
    return true;
}

bool WeightEnum::nonnegative() const {
    for (const auto& x : a)
        if (x < 0) return false;
    return true;
}

WeightEnum add(const WeightEnum& x, const WeightEnum& y) {
    if (x.n != y.n) throw std::invalid_argument("add: length mismatch");
    WeightEnum r(x.n);
    for (size_t i = 0; i <= x.n; ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

WeightEnum scale(const WeightEnum& x, const BigRat& c) {
    WeightEnum r(x.n);
    for (size_t i = 0; i <= x.n; ++i) r.a[i] = x.a[i] * c;
    return r;
}

WeightEnum restrict_residue(const WeightEnum& w, size_t r, size_t m) {
    if (m == 0) throw std::invalid_argument("restrict_residue: zero modulus");
    WeightEnum out(w.n);
    for (size_t i = 0; i <= w.n; ++i)
        if (i % m == r % m) out.a[i] = w.a[i];
    return out;
}

WeightEnum combine_coset_enumerators(const WeightEnum& w0, const WeightEnum& w1,
                                     const WeightEnum& w2, const WeightEnum& w3) {
    const size_t n = w0.n;
    if (w1.n != n || w2.n != n || w3.n != n)
        throw std::invalid_argument("combine: length mismatch");
    WeightEnum r(n + 2);
    for (size_t i = 0; i <= n; ++i) {
        r.a[i] += w0.a[i];
        r.a[i + 1] += w1.a[i] + w2.a[i];
        r.a[i + 2] += w3.a[i];
    }
    return r;
}

bool congruent_mod(const WeightEnum& x, const WeightEnum& y, const BigInt& p) {
    if (x.n != y.n) throw std::invalid_argument("congruent_mod: length mismatch");
    if (p <= 0) throw std::invalid_argument("congruent_mod: modulus must be positive");
    for (size_t i = 0; i <= x.n; ++i) {
        BigRat d = x.a[i] - y.a[i];
        if (!is_integer(d)) return false;
        if (to_integer(d) % p != 0) return false;
    }
    return true;
}

WeightEnum macwilliams(const WeightEnum& w) {
    BigRat total = w.sum();
    if (total == 0) throw std::invalid_argument("macwilliams: W(1) = 0");
    WeightEnum r(w.n);
    // expand (1+y)^(n-i) (1-y)^i term by term via the double binomial sum
    for (size_t i = 0; i <= w.n; ++i) {
        if (w.a[i] == 0) continue;
        std::vector<BigRat> plus(w.n - i + 1), minus(i + 1);
        for (size_t s = 0; s <= w.n - i; ++s) plus[s] = BigRat(binomial(w.n - i, s));
        for (size_t s = 0; s <= i; ++s)
            minus[s] = (s % 2 ? BigRat(-binomial(i, s)) : BigRat(binomial(i, s)));
        for (size_t s = 0; s < plus.size(); ++s)
            for (size_t t = 0; t < minus.size(); ++t)
                r.a[s + t] += w.a[i] * plus[s] * minus[t];
    }
    return scale(r, BigRat(1) / total);
}

bool is_formally_self_dual(const WeightEnum& w) { return macwilliams(w) == w; }

std::string enum_to_json(const WeightEnum& w) {
    nlohmann::ordered_json j;
    j["n"] = w.n;
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (size_t i = 0; i <= w.n; ++i)
        if (w.a[i] != 0) coeffs[std::to_string(i)] = rat_str(w.a[i]);
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

std::string enum_to_text(const WeightEnum& w) {
    std::ostringstream out;
    for (size_t i = 0; i <= w.n; ++i)
        if (w.a[i] != 0) out << i << ' ' << rat_str(w.a[i]) << '\n';
    return out.str();
}

}  // namespace sdc
