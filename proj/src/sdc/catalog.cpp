#include "sdc/catalog.hpp"

#include <stdexcept>

#include "sdc/constructions.hpp"
#include "sdc/enumerate.hpp"

namespace sdc {

namespace {

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return r;
}

}  // namespace

LinearCode extended_qr(uint64_t p) {
    if (p < 3 || p % 8 != 7)
        throw std::invalid_argument("construction needs a prime p = 8m + 7");
    for (uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) throw std::invalid_argument("p must be prime");
    // nonzero squares mod p
    std::vector<bool> residue(p, false);
    for (uint64_t x = 1; x < p; ++x) residue[x * x % p] = true;
    BitVector idem(p);
    for (uint64_t r = 1; r < p; ++r)
        if (residue[r]) idem.set(r, true);
    std::vector<BitVector> rows;
    for (uint64_t s = 0; s < p; ++s) {
        BitVector shifted(p);
        for (uint64_t i = 0; i < p; ++i)
            if (idem.get(i)) shifted.set((i + s) % p, true);
        rows.push_back(shifted);
    }
    LinearCode cyclic = LinearCode::from_rows(p, rows);
    if (cyclic.k() == (p - 1) / 2) {
        rows.push_back(all_ones(p));
        cyclic = LinearCode::from_rows(p, rows);
    }
    std::vector<BitVector> extended;
    for (size_t i = 0; i < cyclic.k(); ++i) {
        const BitVector& r = cyclic.rows[i];
        BitVector e(p + 1);
        for (uint64_t j = 0; j < p; ++j) e.set(j, r.get(j));
        e.set(p, r.weight() % 2 != 0);
        extended.push_back(e);
    }
    return LinearCode::from_rows(p + 1, extended);
}

LinearCode golay24() {
    static const LinearCode c = extended_qr(23);
    return c;
}

LinearCode e8() {
    static const LinearCode c = extended_qr(7);
    return c;
}

LinearCode e8_cubed() {
    static const LinearCode c = direct_sum(direct_sum(e8(), e8()), e8());
    return c;
}

LinearCode b12() {
    std::vector<BitVector> rows;
    for (size_t i = 0; i < 6; ++i) {
        BitVector r(12);
        r.set(i, true);
        for (size_t j = 0; j < 6; ++j)
            if (j != i) r.set(6 + j, true);
        rows.push_back(r);
    }
    return LinearCode::from_rows(12, rows);
}

LinearCode tenfive2() {
    std::vector<BitVector> rows;
    for (size_t i = 0; i < 5; ++i) {
        BitVector r(10);
        r.set(i, true);
        r.set(5 + i, true);
        rows.push_back(r);
    }
    return LinearCode::from_rows(10, rows);
}

LinearCode i2() { return i_n(2); }

LinearCode i_n(size_t n) {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("length must be even");
    std::vector<BitVector> rows;
    for (size_t i = 0; i < n / 2; ++i) {
        BitVector r(n);
        r.set(2 * i, true);
        r.set(2 * i + 1, true);
        rows.push_back(r);
    }
    return LinearCode::from_rows(n, rows);
}

LinearCode golay_child() {
    static const LinearCode c = child(golay24(), 22, 23);
    return c;
}

Permutation mobius_perm(uint64_t p, uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
    size_t inf = p;
    std::vector<size_t> img(p + 1);
    for (uint64_t z = 0; z < p; ++z) {
        uint64_t num = (a * z + b) % p;
        uint64_t den = (c * z + d) % p;
        img[z] = den == 0 ? inf : size_t(num * mod_pow(den, p - 2, p) % p);
    }
    img[inf] = c == 0 ? inf : size_t(a * mod_pow(c, p - 2, p) % p);
    return Permutation{img};
}

Permutation g24_translation() {
    return mobius_perm(23, 1, 1, 0, 1);
}

Permutation g24_order3() {
    // z -> 1/(1 - z); z^2 - z + 1 has no root mod 23, so no fixed points
    return mobius_perm(23, 0, 1, 22, 1);
}

Permutation g24_order6() {
    static const Permutation found = [] {
        LinearCode g = golay24();
        for (uint64_t a = 0; a < 23; ++a)
            for (uint64_t b = 0; b < 23; ++b)
                for (uint64_t c = 0; c < 23; ++c)
                    for (uint64_t d = 0; d < 23; ++d) {
                        if ((a * d + 23 * 23 - b * c) % 23 != 1) continue;
                        Permutation s = mobius_perm(23, a, b, c, d);
                        if (s.order() != 6) continue;
                        AutType t = aut_type(s);
                        if (t.kind != AutType::Kind::uniform_composite ||
                            t.p != 6 || t.c != 4 || t.f != 0)
                            continue;
                        if (!is_automorphism(g, s)) continue;
                        return s;
                    }
        throw std::logic_error("no order 6 map found");
    }();
    return found;
}

Permutation e8_cubed_translation() {
    std::vector<size_t> img(24);
    for (size_t blk = 0; blk < 3; ++blk) {
        for (size_t z = 0; z < 7; ++z) img[blk * 8 + z] = blk * 8 + (z + 1) % 7;
        img[blk * 8 + 7] = blk * 8 + 7;
    }
    return Permutation{img};
}

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> list = [] {
        std::vector<CatalogEntry> out;
        out.push_back({"golay24",
                       golay24(),
                       24,
                       12,
                       8,
                       CodeType::type2,
                       {{"translation", g24_translation(), "23-(1;1)"},
                        {"order3", g24_order3(), "3-(8;0)"},
                        {"order6", g24_order6(), "6-(4;0)"}}});
        out.push_back({"e8", e8(), 8, 4, 4, CodeType::type2, {}});
        out.push_back({"e8_cubed",
                       e8_cubed(),
                       24,
                       12,
                       4,
                       CodeType::type2,
                       {{"translation", e8_cubed_translation(), "7-(3;3)"}}});
        out.push_back({"b12", b12(), 12, 6, 4, CodeType::type1, {}});
        out.push_back({"tenfive2", tenfive2(), 10, 5, 2, CodeType::type1, {}});
        out.push_back({"i2", i2(), 2, 1, 2, CodeType::type1, {}});
        out.push_back({"golay_child", golay_child(), 22, 11, 6, CodeType::type1, {}});
        return out;
    }();
    return list;
}

}  // namespace sdc
