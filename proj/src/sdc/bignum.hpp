#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace sdc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r /= BigInt(i);
    }
    return r;
}

// 2^e as an exact rational, negative exponents welcome
inline BigRat pow2(long e) {
    BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? BigRat(1, p) : BigRat(p);
}

inline bool is_integer(const BigRat& r) { return boost::multiprecision::denominator(r) == 1; }

inline BigInt to_integer(const BigRat& r) {
    if (!is_integer(r)) throw std::runtime_error("rational is not an integer: " + r.str());
    return boost::multiprecision::numerator(r);
}

// decimal for integers, "p/q" otherwise
inline std::string rat_str(const BigRat& r) {
    if (is_integer(r)) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline BigRat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(s));
    return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace sdc
