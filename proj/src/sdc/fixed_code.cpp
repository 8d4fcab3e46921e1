#include "sdc/fixed_code.hpp"

#include <stdexcept>

#include "sdc/enumerate.hpp"

namespace sdc {

LinearCode fixed_code(const LinearCode& c, const Permutation& s) {
    if (s.n() != c.n)
        throw std::invalid_argument("permutation degree does not match code length");
    if (!is_automorphism(c, s))
        throw std::invalid_argument("permutation is not an automorphism of the code");
    size_t k = c.k();
    // left kernel of the matrix with rows r_i + s(r_i), tracked on an identity
    // block; kernel combinations applied to the original rows are exactly the
    // invariant words
    std::vector<BitVector> b, track;
    for (size_t i = 0; i < k; ++i) {
        BitVector row = c.rows[i] ^ apply(s, c.rows[i]);
        b.push_back(row);
        BitVector t(k);
        t.set(i, true);
        track.push_back(t);
    }
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t col = 0; col < c.n && r < k; ++col) {
        size_t sel = r;
        while (sel < k && !b[sel].get(col)) ++sel;
        if (sel == k) continue;
        std::swap(b[sel], b[r]);
        std::swap(track[sel], track[r]);
        for (size_t i = 0; i < k; ++i) {
            if (i != r && b[i].get(col)) {
                b[i] ^= b[r];
                track[i] ^= track[r];
            }
        }
        pivots.push_back(col);
        ++r;
    }
    std::vector<BitVector> fixed_rows;
    for (size_t i = r; i < k; ++i) {
        BitVector v(c.n);
        for (size_t j = 0; j < k; ++j)
            if (track[i].get(j)) v ^= c.rows[j];
        fixed_rows.push_back(v);
    }
    return LinearCode::from_rows(c.n, fixed_rows);
}

LinearCode even_part(const LinearCode& c, const Permutation& s) {
    if (s.n() != c.n)
        throw std::invalid_argument("permutation degree does not match code length");
    if (!is_automorphism(c, s))
        throw std::invalid_argument("permutation is not an automorphism of the code");
    CycleLayout layout = cycle_layout(s);
    // indicator of every cell, fixed points as singletons: intersecting with
    // the dual span forces even weight on cycles and zero on fixed points
    std::vector<BitVector> indicators;
    for (const auto& cyc : layout.cycles) {
        BitVector ind(c.n);
        for (size_t i : cyc) ind.set(i, true);
        indicators.push_back(ind);
    }
    for (size_t i : layout.fixed) {
        BitVector ind(c.n);
        ind.set(i, true);
        indicators.push_back(ind);
    }
    LinearCode span = LinearCode::from_rows(c.n, indicators);
    return intersect(c, dual(span));
}

BitVector project(const BitVector& v, const CycleLayout& layout) {
    for (const auto& cyc : layout.cycles) {
        bool first = v.get(cyc[0]);
        for (size_t i : cyc)
            if (v.get(i) != first)
                throw std::invalid_argument("vector is not constant on a cycle");
    }
    BitVector out(layout.cycles.size() + layout.fixed.size());
    size_t pos = 0;
    for (const auto& cyc : layout.cycles) out.set(pos++, v.get(cyc[0]));
    for (size_t i : layout.fixed) out.set(pos++, v.get(i));
    return out;
}

LinearCode project(const LinearCode& f, const CycleLayout& layout) {
    if (f.n != layout.n)
        throw std::invalid_argument("layout degree does not match code length");
    std::vector<BitVector> rows;
    for (size_t i = 0; i < f.k(); ++i) rows.push_back(project(f.rows[i], layout));
    return LinearCode::from_rows(layout.cycles.size() + layout.fixed.size(), rows);
}

BitVector lift(const BitVector& v, const CycleLayout& layout) {
    if (v.n != layout.cycles.size() + layout.fixed.size())
        throw std::invalid_argument("vector length does not match layout cell count");
    BitVector out(layout.n);
    size_t pos = 0;
    for (const auto& cyc : layout.cycles) {
        if (v.get(pos++))
            for (size_t i : cyc) out.set(i, true);
    }
    for (size_t i : layout.fixed) out.set(i, v.get(pos++));
    return out;
}

LinearCode lift(const LinearCode& d, const CycleLayout& layout) {
    std::vector<BitVector> rows;
    for (size_t i = 0; i < d.k(); ++i) rows.push_back(lift(d.rows[i], layout));
    return LinearCode::from_rows(layout.n, rows);
}

MaschkeReport maschke_verify(const LinearCode& c, const Permutation& s) {
    uint64_t ord = s.order();
    if (ord % 2 == 0 || ord == 1)
        throw std::invalid_argument("automorphism order must be an odd prime");
    for (uint64_t q = 3; q * q <= ord; q += 2)
        if (ord % q == 0)
            throw std::invalid_argument("automorphism order must be an odd prime");
    CycleLayout layout = cycle_layout(s);
    MaschkeReport rep;
    rep.p = ord;
    rep.c = layout.cycles.size();
    rep.f = layout.fixed.size();
    LinearCode f = fixed_code(c, s);
    LinearCode e = even_part(c, s);
    rep.dim_fixed = f.k();
    rep.dim_even = e.k();
    rep.expected_dim_even = (ord - 1) * rep.c / 2;
    rep.trivial_intersection = intersect(f, e).k() == 0;
    rep.spans = sum_code(f, e) == c;
    return rep;
}

BigInt coeff_mod(const WeightEnum& w, size_t i, const BigInt& p) {
    BigRat a = w.a.at(i);
    if (!is_integer(a)) throw std::invalid_argument("coefficient is not an integer");
    BigInt r = to_integer(a) % p;
    if (r < 0) r += p;
    return r;
}

CongruenceReport enum_congruence(const WeightEnum& w, const BigInt& p,
                                 const std::vector<std::pair<size_t, BigInt>>& residues) {
    CongruenceReport rep;
    rep.p = p;
    for (const auto& [i, r] : residues) {
        BigInt want = r % p;
        if (want < 0) want += p;
        if (coeff_mod(w, i, p) != want) rep.failing_weights.push_back(i);
    }
    rep.ok = rep.failing_weights.empty();
    return rep;
}

CongruenceReport fixed_code_congruence(const LinearCode& c, const Permutation& s,
                                       const BigInt& p) {
    LinearCode f = fixed_code(c, s);
    WeightEnum wc = WeightEnum::from_distribution(weight_distribution(c));
    WeightEnum wf = WeightEnum::from_distribution(weight_distribution(f));
    CongruenceReport rep;
    rep.p = p;
    for (size_t i = 0; i <= c.n; ++i) {
        if (coeff_mod(wc, i, p) != coeff_mod(wf, i, p))
            rep.failing_weights.push_back(i);
    }
    rep.ok = rep.failing_weights.empty();
    return rep;
}

}  // namespace sdc
