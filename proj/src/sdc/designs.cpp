#include "sdc/designs.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sdc/enumerate.hpp"
#include "sdc/gf2_io.hpp"

namespace sdc {

DesignParams lambda_vector(size_t t, size_t v, size_t k, const BigInt& lambda) {
    if (t > k || k > v) throw std::invalid_argument("need t <= k <= v");
    if (lambda < 1) throw std::invalid_argument("lambda must be positive");
    DesignParams p;
    p.t = t;
    p.v = v;
    p.k = k;
    p.lambda = lambda;
    for (size_t i = 0; i <= t; ++i) {
        BigRat li = BigRat(lambda) * BigRat(binomial(v - i, t - i)) /
                    BigRat(binomial(k - i, t - i));
        if (!is_integer(li)) p.all_integral = false;
        p.lambda_vec.push_back(li);
    }
    return p;
}

Design make_design(size_t v, std::vector<BitVector> blocks) {
    for (const auto& b : blocks) {
        if (b.n != v)
            throw std::invalid_argument("block length does not match point count");
        if (!blocks.empty() && b.weight() != blocks.front().weight())
            throw std::invalid_argument("blocks have unequal sizes");
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const BitVector& a, const BitVector& b) { return a.lex_less(b); });
    for (size_t i = 1; i < blocks.size(); ++i)
        if (blocks[i] == blocks[i - 1])
            throw std::invalid_argument("duplicate block");
    Design d;
    d.v = v;
    d.blocks = std::move(blocks);
    return d;
}

Design design_from_codewords(const LinearCode& c, size_t w) {
    if (w == 0 || w > c.n)
        throw std::invalid_argument("block size out of range");
    if (c.k() > 24) throw std::invalid_argument("dimension too large to enumerate");
    std::vector<BitVector> blocks;
    BitVector cur(c.n);
    uint64_t total = uint64_t(1) << c.k();
    for (uint64_t i = 1; i < total; ++i) {
        uint64_t gray_bit = __builtin_ctzll(i);
        cur ^= c.rows[gray_bit];
        if (cur.weight() == w) blocks.push_back(cur);
    }
    if (blocks.empty()) throw std::invalid_argument("no codewords of that weight");
    return make_design(c.n, std::move(blocks));
}

namespace {

// colex rank of {c_0 < ... < c_{t-1}} is sum of C(c_i, i+1)
uint64_t colex_rank(const std::vector<size_t>& subset) {
    uint64_t r = 0;
    for (size_t i = 0; i < subset.size(); ++i)
        r += binomial(subset[i], i + 1).convert_to<uint64_t>();
    return r;
}

BitVector colex_unrank(uint64_t rank, size_t t, size_t v) {
    BitVector out(v);
    for (size_t i = t; i-- > 0;) {
        size_t c = i;  // smallest candidate with C(c, i+1) = 0 contribution
        while (c + 1 < v &&
               binomial(c + 1, i + 1).convert_to<uint64_t>() <= rank)
            ++c;
        out.set(c, true);
        rank -= binomial(c, i + 1).convert_to<uint64_t>();
    }
    return out;
}

}  // namespace

DesignCheck verify_t_design(const Design& d, size_t t) {
    if (t > d.k() || t > d.v) throw std::invalid_argument("t exceeds block size");
    BigInt space = binomial(d.v, t);
    if (space > 1000000)
        throw std::invalid_argument("too many t-subsets for the exhaustive check");
    size_t nsub = space.convert_to<size_t>();
    std::vector<uint32_t> counts(nsub, 0);

    std::vector<size_t> support, pick(t);
    for (const auto& block : d.blocks) {
        support.clear();
        for (size_t i = 0; i < d.v; ++i)
            if (block.get(i)) support.push_back(i);
        // walk all t-subsets of the support in lexicographic order
        std::vector<size_t> idx(t);
        for (size_t i = 0; i < t; ++i) idx[i] = i;
        bool done = false;
        while (!done) {
            for (size_t i = 0; i < t; ++i) pick[i] = support[idx[i]];
            ++counts[colex_rank(pick)];
            bool advanced = false;
            size_t i = t;
            while (i-- > 0) {
                if (idx[i] + (t - i) < support.size()) {
                    ++idx[i];
                    for (size_t j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            done = !advanced;
        }
    }

    auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
    DesignCheck res;
    if (*lo == *hi) {
        res.ok = true;
        res.lambda = *lo;
        return res;
    }
    res.count_a = *lo;
    res.count_b = *hi;
    res.subset_a = colex_unrank(uint64_t(lo - counts.begin()), t, d.v);
    res.subset_b = colex_unrank(uint64_t(hi - counts.begin()), t, d.v);
    return res;
}

DesignCheck verify_t_design(const Design& d, size_t t, const SampleMode& mode) {
    if (t > d.k() || t > d.v) throw std::invalid_argument("t exceeds block size");
    if (mode.trials == 0) throw std::invalid_argument("need at least one trial");
    std::mt19937_64 gen(mode.seed);
    std::vector<size_t> idx(d.v);
    DesignCheck res;
    bool have_first = false;
    BitVector first;
    uint64_t first_count = 0;
    for (uint64_t trial = 0; trial < mode.trials; ++trial) {
        for (size_t i = 0; i < d.v; ++i) idx[i] = i;
        BitVector subset(d.v);
        // gen() % m keeps the draw deterministic across library versions
        for (size_t i = 0; i < t; ++i) {
            size_t j = i + size_t(gen() % (d.v - i));
            std::swap(idx[i], idx[j]);
            subset.set(idx[i], true);
        }
        uint64_t count = 0;
        for (const auto& block : d.blocks)
            if ((subset & block) == subset) ++count;
        if (!have_first) {
            have_first = true;
            first = subset;
            first_count = count;
        } else if (count != first_count) {
            res.subset_a = first;
            res.subset_b = subset;
            res.count_a = first_count;
            res.count_b = count;
            return res;
        }
    }
    res.ok = true;
    res.lambda = first_count;
    return res;
}

std::vector<BitVector> incidence_matrix(const Design& d) { return d.blocks; }

LinearCode code_of_design(const Design& d) {
    return LinearCode::from_rows(d.v, d.blocks);
}

AmReport assmus_mattson(const WeightEnum& w, const WeightEnum& w_dual, size_t t) {
    if (w.n != w_dual.n) throw std::invalid_argument("enumerator lengths differ");
    AmReport rep;
    rep.t = t;
    rep.d = w.min_positive_weight();
    rep.d_dual = w_dual.min_positive_weight();
    for (size_t i = 1; i + t <= w.n; ++i)
        if (w_dual.a[i] != 0) ++rep.s;
    rep.applicable = t < rep.d && rep.s + t <= rep.d;
    if (!rep.applicable) return rep;
    for (size_t i = rep.d; i <= w.n; ++i)
        if (w.a[i] != 0) rep.weights_primal.push_back(i);
    for (size_t i = rep.d_dual; i + t <= w.n; ++i)
        if (w_dual.a[i] != 0) rep.weights_dual.push_back(i);
    return rep;
}

AmReport assmus_mattson(const LinearCode& c, size_t t) {
    WeightEnum w = WeightEnum::from_distribution(weight_distribution(c));
    return assmus_mattson(w, macwilliams(w), t);
}

DivisibilityReport shadow_divisibility(const WeightEnum& ws, size_t v, size_t t) {
    DivisibilityReport rep;
    rep.v = v;
    rep.t = t;
    for (size_t k = 0; k <= ws.n; ++k) {
        if (ws.a[k] == 0) continue;
        DivisibilityRow row;
        row.k = k;
        BigRat li = ws.a[k];
        for (size_t i = 0; i <= t; ++i) {
            if (i > 0) li = li * BigRat(int64_t(k) - int64_t(i) + 1) /
                            BigRat(int64_t(v) - int64_t(i) + 1);
            if (!is_integer(li) || li < 0) row.integral = false;
            row.lambda.push_back(li);
        }
        if (!row.integral) rep.ok = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

Design read_design(std::istream& in) {
    LineReader rd{in};
    std::string s;
    if (!rd.next(s)) throw ParseError(rd.line, "missing design header");
    std::istringstream hs(s);
    size_t v = 0, b = 0, k = 0;
    if (!(hs >> v >> b >> k)) throw ParseError(rd.line, "bad design header");
    std::vector<BitVector> blocks;
    for (size_t i = 0; i < b; ++i) {
        if (!rd.next(s)) throw ParseError(rd.line, "missing block line");
        BitVector block = BitVector::from_string(s);
        if (block.n != v || block.weight() != k)
            throw ParseError(rd.line, "block does not match header");
        blocks.push_back(block);
    }
    return make_design(v, std::move(blocks));
}

void write_design(std::ostream& out, const Design& d) {
    out << d.v << ' ' << d.b() << ' ' << d.k() << '\n';
    for (const auto& block : d.blocks) out << block.to_string() << '\n';
}

Design read_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_design(in);
}

void write_design_file(const std::string& path, const Design& d) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_design(out, d);
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace sdc
