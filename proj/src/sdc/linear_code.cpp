#include "sdc/linear_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdc {
namespace {

// in-place reduced row echelon form; returns pivot columns
std::vector<size_t> rref(std::vector<BitVector>& rows, size_t n) {
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t col = 0; col < n && r < rows.size(); ++col) {
        size_t sel = r;
        while (sel < rows.size() && !rows[sel].get(col)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
        piv.push_back(col);
        ++r;
    }
    rows.resize(r);
    return piv;
}

}  // namespace

LinearCode LinearCode::from_rows(size_t n, std::vector<BitVector> gens) {
    for (const auto& g : gens)
        if (g.n != n) throw std::invalid_argument("generator length mismatch");
    LinearCode c(n);
    c.pivots = rref(gens, n);
    c.rows = std::move(gens);
    return c;
}

BitVector LinearCode::reduce(BitVector v) const {
    if (v.n != n) throw std::invalid_argument("reduce: length mismatch");
    for (size_t i = 0; i < rows.size(); ++i)
        if (v.get(pivots[i])) v ^= rows[i];
    return v;
}

bool LinearCode::contains(const BitVector& v) const {
    return reduce(v).is_zero();
}

BitVector LinearCode::codeword(uint64_t mask) const {
    BitVector v(n);
    for (size_t i = 0; i < rows.size(); ++i)
        if ((mask >> i) & 1u) v ^= rows[i];
    return v;
}

LinearCode dual(const LinearCode& c) {
    // free columns give the standard nullspace basis of an rref matrix
    std::vector<bool> is_piv(c.n, false);
    for (size_t p : c.pivots) is_piv[p] = true;
    std::vector<BitVector> gens;
    gens.reserve(c.n - c.k());
    for (size_t f = 0; f < c.n; ++f) {
        if (is_piv[f]) continue;
        BitVector v(c.n);
        v.set(f, true);
        for (size_t i = 0; i < c.rows.size(); ++i)
            if (c.rows[i].get(f)) v.set(c.pivots[i], true);
        gens.push_back(std::move(v));
    }
    return LinearCode::from_rows(c.n, std::move(gens));
}

LinearCode sum_code(const LinearCode& a, const LinearCode& b) {
    if (a.n != b.n) throw std::invalid_argument("sum: length mismatch");
    std::vector<BitVector> gens = a.rows;
    gens.insert(gens.end(), b.rows.begin(), b.rows.end());
    return LinearCode::from_rows(a.n, std::move(gens));
}

LinearCode intersect(const LinearCode& a, const LinearCode& b) {
    return dual(sum_code(dual(a), dual(b)));
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
    std::vector<BitVector> gens;
    for (const auto& r : a.rows) {
        BitVector v(a.n + b.n);
        for (size_t i = 0; i < a.n; ++i) if (r.get(i)) v.set(i, true);
        gens.push_back(std::move(v));
    }
    for (const auto& r : b.rows) {
        BitVector v(a.n + b.n);
        for (size_t i = 0; i < b.n; ++i) if (r.get(i)) v.set(a.n + i, true);
        gens.push_back(std::move(v));
    }
    return LinearCode::from_rows(a.n + b.n, std::move(gens));
}

LinearCode puncture(const LinearCode& c, const std::vector<size_t>& coords) {
    std::vector<bool> drop(c.n, false);
    for (size_t p : coords) {
        if (p >= c.n) throw std::invalid_argument("puncture: coordinate out of range");
        drop[p] = true;
    }
    size_t keep = 0;
    for (size_t i = 0; i < c.n; ++i) if (!drop[i]) ++keep;
    std::vector<BitVector> gens;
    for (const auto& r : c.rows) {
        BitVector v(keep);
        size_t j = 0;
        for (size_t i = 0; i < c.n; ++i)
            if (!drop[i]) { if (r.get(i)) v.set(j, true); ++j; }
        gens.push_back(std::move(v));
    }
    return LinearCode::from_rows(keep, std::move(gens));
}

LinearCode shorten(const LinearCode& c, const std::vector<size_t>& coords) {
    // keep only codewords vanishing on coords, then delete those columns
    std::vector<BitVector> gens = c.rows;
    for (size_t p : coords) {
        if (p >= c.n) throw std::invalid_argument("shorten: coordinate out of range");
        std::optional<size_t> lead;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (!gens[i].get(p)) continue;
            if (!lead) lead = i;
            else gens[i] ^= gens[*lead];
        }
        if (lead) gens.erase(gens.begin() + static_cast<ptrdiff_t>(*lead));
    }
    return puncture(LinearCode::from_rows(c.n, std::move(gens)), coords);
}

bool is_self_orthogonal(const LinearCode& c) {
    for (size_t i = 0; i < c.rows.size(); ++i)
        for (size_t j = i; j < c.rows.size(); ++j)
            if (c.rows[i].dot(c.rows[j])) return false;
    return true;
}

bool is_self_dual(const LinearCode& c) {
    return 2 * c.k() == c.n && is_self_orthogonal(c);
}

bool is_doubly_even(const LinearCode& c) {
    // all basis weights divisible by 4 plus pairwise orthogonality is enough:
    // wt(a+b) = wt(a)+wt(b)-2|a&b| and |a&b| even keeps divisibility by 4
    for (const auto& r : c.rows)
        if (r.weight() % 4 != 0) return false;
    return is_self_orthogonal(c);
}

CodeType code_type(const LinearCode& c) {
    if (!is_self_dual(c)) return CodeType::not_self_dual;
    return is_doubly_even(c) ? CodeType::type2 : CodeType::type1;
}

LinearCode doubly_even_subcode(const LinearCode& c) {
    if (!is_self_dual(c)) throw std::invalid_argument("doubly_even_subcode: input not self-dual");
    // wt/2 mod 2 is linear on a self-orthogonal even code
    std::vector<BitVector> even, odd;
    for (const auto& r : c.rows)
        (r.weight() % 4 == 0 ? even : odd).push_back(r);
    if (!odd.empty())
        for (size_t i = 1; i < odd.size(); ++i) even.push_back(odd[0] ^ odd[i]);
    return LinearCode::from_rows(c.n, std::move(even));
}

BitVector all_ones(size_t n) {
    BitVector v(n);
    for (size_t i = 0; i < n; ++i) v.set(i, true);
    return v;
}

}  // namespace sdc
