#include "sdc/cosets.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "sdc/enumerate.hpp"
#include "sdc/gf2_io.hpp"

namespace sdc {

CosetSplit coset_split(const LinearCode& c) {
    if (!is_self_dual(c)) throw std::invalid_argument("coset_split: input not self-dual");
    CosetSplit cs;
    cs.c0 = doubly_even_subcode(c);
    cs.r2 = BitVector(c.n);
    cs.r1 = BitVector(c.n);
    cs.r3 = BitVector(c.n);
    if (cs.c0.k() == c.k()) {
        cs.degenerate = true;
        return cs;
    }
    for (const auto& r : c.rows)
        if (r.weight() % 4 != 0) {
            cs.r2 = cs.c0.reduce(r);
            break;
        }
    LinearCode c0_dual = dual(cs.c0);
    for (const auto& r : c0_dual.rows)
        if (!c.contains(r)) {
            cs.r1 = cs.c0.reduce(r);
            break;
        }
    cs.r3 = cs.c0.reduce(cs.r1 ^ cs.r2);
    // canonical representatives are coset-wise lexicographic minima, so this
    // comparison picks the coset holding the smallest shadow vector
    if (cs.r3.lex_less(cs.r1)) std::swap(cs.r1, cs.r3);
    return cs;
}

namespace {

// walk rep + C0 in gray order, feeding weights and vectors to the callback
template <class F>
void scan_coset(const LinearCode& c0, const BitVector& rep, F&& visit) {
    BitVector cur = rep;
    visit(cur);
    for (uint64_t g = 1; g < (uint64_t{1} << c0.k()); ++g) {
        cur ^= c0.rows[static_cast<size_t>(std::countr_zero(g))];
        visit(cur);
    }
}

}  // namespace

ShadowResult shadow(const LinearCode& c, size_t witness_cap) {
    CosetSplit cs = coset_split(c);
    ShadowResult r;
    if (cs.degenerate) {
        if (c.k() > 24) throw std::invalid_argument("shadow: dimension above enumeration limit");
        r.enumerator = WeightEnum::from_distribution(weight_distribution(c));
        r.min_weight = r.enumerator.min_positive_weight();
        scan_coset(c, BitVector(c.n), [&](const BitVector& v) {
            if (!v.is_zero() && v.weight() == r.min_weight && r.witnesses.size() < witness_cap)
                r.witnesses.push_back(v);
        });
        return r;
    }
    if (cs.c0.k() > 24) throw std::invalid_argument("shadow: dimension above enumeration limit");
    std::vector<uint64_t> hist(c.n + 1, 0);
    for (const BitVector* rep : {&cs.r1, &cs.r3})
        scan_coset(cs.c0, *rep, [&](const BitVector& v) { ++hist[v.weight()]; });
    r.enumerator = WeightEnum::from_distribution(hist);
    r.min_weight = r.enumerator.min_positive_weight();
    for (const BitVector* rep : {&cs.r1, &cs.r3})
        scan_coset(cs.c0, *rep, [&](const BitVector& v) {
            if (v.weight() == r.min_weight && r.witnesses.size() < witness_cap)
                r.witnesses.push_back(v);
        });
    return r;
}

void write_coset_split(std::ostream& out, const CosetSplit& cs) {
    out << "# doubly even part and representatives r0 r2 r1 r3\n";
    write_code(out, cs.c0);
    write_vector(out, BitVector(cs.c0.n));
    write_vector(out, cs.r2);
    write_vector(out, cs.r1);
    write_vector(out, cs.r3);
}

CosetSplit read_coset_split(std::istream& in) {
    CosetSplit cs;
    cs.c0 = read_code(in);
    BitVector r0 = read_vector(in);
    if (!r0.is_zero() || r0.n != cs.c0.n)
        throw std::runtime_error("coset split: first representative must be zero");
    cs.r2 = read_vector(in);
    cs.r1 = read_vector(in);
    cs.r3 = read_vector(in);
    if (cs.r2.n != cs.c0.n || cs.r1.n != cs.c0.n || cs.r3.n != cs.c0.n)
        throw std::runtime_error("coset split: representative length mismatch");
    cs.degenerate = cs.r2.is_zero() && cs.r1.is_zero() && cs.r3.is_zero();
    return cs;
}

}  // namespace sdc
