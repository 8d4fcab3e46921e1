#include "sdc/constructions.hpp"

#include <stdexcept>

#include "sdc/enumerate.hpp"

namespace sdc {

LinearCode child(const LinearCode& c, size_t pos_i, size_t pos_j) {
    if (!is_self_dual(c)) throw std::invalid_argument("child: input not self-dual");
    if (pos_i == pos_j) throw std::invalid_argument("child: positions must differ");
    if (pos_i >= c.n || pos_j >= c.n) throw std::invalid_argument("child: position out of range");
    if (distance_below(c, 3)) throw std::invalid_argument("child: minimum distance must exceed 2");
    // rows with unequal values at the two positions are folded into one
    std::vector<BitVector> rows = c.rows;
    size_t lead = rows.size();
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].get(pos_i) == rows[i].get(pos_j)) continue;
        if (lead == rows.size()) lead = i;
        else rows[i] ^= rows[lead];
    }
    if (lead != rows.size()) rows.erase(rows.begin() + static_cast<ptrdiff_t>(lead));
    return puncture(LinearCode::from_rows(c.n, std::move(rows)), {pos_i, pos_j});
}

LinearCode shadow_extend(const LinearCode& c) {
    if (c.n % 4 != 2) throw std::invalid_argument("shadow_extend: length must be 2 (mod 4)");
    CosetSplit cs = coset_split(c);
    if (cs.degenerate) throw std::invalid_argument("shadow_extend: input must be type I");
    auto tagged = [&](bool t0, bool t1, const BitVector& v) {
        BitVector out(c.n + 2);
        out.set(0, t0);
        out.set(1, t1);
        for (size_t i = 0; i < c.n; ++i)
            if (v.get(i)) out.set(i + 2, true);
        return out;
    };
    std::vector<BitVector> gens;
    for (const auto& r : cs.c0.rows) gens.push_back(tagged(false, false, r));
    gens.push_back(tagged(true, true, cs.r2));
    gens.push_back(tagged(true, false, cs.r1));
    gens.push_back(tagged(false, true, cs.r3));
    return LinearCode::from_rows(c.n + 2, std::move(gens));
}

LinearCode neighbor_through(const LinearCode& c, const BitVector& u) {
    if (u.n != c.n) throw std::invalid_argument("neighbor: length mismatch");
    if (!is_self_dual(c)) throw std::invalid_argument("neighbor: input not self-dual");
    if (c.contains(u)) throw std::invalid_argument("neighbor: vector already in the code");
    if (u.weight() % 2 != 0) throw std::invalid_argument("neighbor: vector weight must be even");
    std::vector<BitVector> rows = c.rows;
    size_t lead = rows.size();
    for (size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].dot(u)) continue;
        if (lead == rows.size()) lead = i;
        else rows[i] ^= rows[lead];
    }
    if (lead != rows.size()) rows.erase(rows.begin() + static_cast<ptrdiff_t>(lead));
    rows.push_back(u);
    return LinearCode::from_rows(c.n, std::move(rows));
}

bool are_neighbors(const LinearCode& a, const LinearCode& b) {
    if (a.n != b.n) throw std::invalid_argument("are_neighbors: length mismatch");
    if (!is_self_dual(a) || !is_self_dual(b))
        throw std::invalid_argument("are_neighbors: both codes must be self-dual");
    return intersect(a, b).k() == a.n / 2 - 1;
}

}  // namespace sdc
