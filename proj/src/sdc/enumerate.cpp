#include "sdc/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <functional>
#include <stdexcept>

#include "sdc/kernels.hpp"

namespace sdc {
namespace {

constexpr size_t max_low_rows = 8;

size_t word_count(const LinearCode& c) { return (c.n + 63) / 64; }

// walks all 2^k codewords in blocks: low rows are expanded into an xor table
// once, high rows follow a gray path so each block shifts by one row xor.
// stop when the callback returns true; it gets the block's weights plus enough
// to rebuild any word in it.
template <class Block>
void scan_blocks(const LinearCode& c, Block&& block) {
    const size_t k = c.k();
    const size_t wpc = word_count(c);
    const size_t k_lo = std::min(k, max_low_rows);
    const size_t k_hi = k - k_lo;
    const size_t count = size_t{1} << k_lo;

    std::vector<uint64_t> table(count * wpc, 0);
    for (size_t idx = 1; idx < count; ++idx) {
        const size_t prev = idx & (idx - 1);
        const auto& row = c.rows[static_cast<size_t>(std::countr_zero(idx))].w;
        for (size_t j = 0; j < wpc; ++j)
            table[idx * wpc + j] = table[prev * wpc + j] ^ row[j];
    }

    std::vector<uint64_t> base(wpc, 0);
    std::vector<uint16_t> weights(count);
    const auto& ops = kern::active_ops();
    uint64_t hi_mask = 0;
    for (uint64_t g = 0;; ++g) {
        if (g > 0) {
            const size_t flip = static_cast<size_t>(std::countr_zero(g));
            hi_mask ^= uint64_t{1} << flip;
            ops.xor_into(base.data(), c.rows[k_lo + flip].w.data(), wpc);
        }
        ops.xored_weights(base.data(), table.data(), count, wpc, weights.data());
        if (block(weights.data(), count, base.data(), table.data(), wpc, hi_mask))
            return;
        if (g + 1 >= (uint64_t{1} << k_hi)) return;
    }
}

BitVector rebuild(const LinearCode& c, const uint64_t* base, const uint64_t* table,
                  size_t wpc, size_t idx) {
    BitVector v(c.n);
    for (size_t j = 0; j < wpc; ++j) v.w[j] = base[j] ^ table[idx * wpc + j];
    return v;
}

// generators rewritten so pivots avoid the given columns; empty when the
// remaining columns no longer carry full rank
std::optional<LinearCode> repivot(const LinearCode& c, const std::vector<bool>& used) {
    std::vector<BitVector> rows = c.rows;
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t col = 0; col < c.n && r < rows.size(); ++col) {
        if (used[col]) continue;
        size_t sel = r;
        while (sel < rows.size() && !rows[sel].get(col)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
        piv.push_back(col);
        ++r;
    }
    if (r < c.k()) return std::nullopt;
    LinearCode out(c.n);
    out.rows = std::move(rows);
    out.pivots = std::move(piv);
    return out;
}

// every xor of exactly r distinct generators of c; stop early on true
bool for_each_combination(const LinearCode& c, size_t r,
                          const std::function<bool(const BitVector&)>& visit) {
    const size_t k = c.k();
    if (r > k) return false;
    std::vector<size_t> idx(r);
    std::vector<BitVector> acc(r + 1, BitVector(c.n));
    size_t depth = 0;
    size_t start = 0;
    while (true) {
        if (depth == r) {
            if (visit(acc[r])) return true;
            if (r == 0) return false;
            start = idx[--depth] + 1;
            continue;
        }
        if (start + (r - depth) > k) {
            if (depth == 0) return false;
            start = idx[--depth] + 1;
            continue;
        }
        idx[depth] = start;
        acc[depth + 1] = acc[depth] ^ c.rows[start];
        ++depth;
        ++start;
    }
}

}  // namespace

std::vector<uint64_t> weight_distribution(const LinearCode& c) {
    if (c.k() > 30)
        throw std::invalid_argument("weight_distribution: dimension too large to enumerate");
    std::vector<uint64_t> hist(c.n + 1, 0);
    if (c.k() == 0) {
        hist[0] = 1;
        return hist;
    }
    scan_blocks(c, [&](const uint16_t* w, size_t count, const uint64_t*, const uint64_t*,
                       size_t, uint64_t) {
        for (size_t i = 0; i < count; ++i) ++hist[w[i]];
        return false;
    });
    return hist;
}

std::vector<LinearCode> systematic_forms(const LinearCode& c) {
    std::vector<LinearCode> forms;
    if (c.k() == 0) return forms;
    std::vector<bool> used(c.n, false);
    while (true) {
        auto form = repivot(c, used);
        if (!form) break;
        for (size_t p : form->pivots) used[p] = true;
        forms.push_back(std::move(*form));
    }
    return forms;
}

size_t min_distance(const LinearCode& c) {
    const size_t k = c.k();
    if (k == 0) return 0;
    if (k <= 24) {
        size_t best = c.n + 1;
        scan_blocks(c, [&](const uint16_t* w, size_t count, const uint64_t*, const uint64_t*,
                           size_t, uint64_t hi_mask) {
            for (size_t i = 0; i < count; ++i) {
                if (w[i] == 0) continue;
                best = std::min(best, static_cast<size_t>(w[i]));
            }
            (void)hi_mask;
            return false;
        });
        return best;
    }
    // radius-by-radius search over disjoint information sets: a word missed
    // through radius r restricts to more than r positions on every set
    const auto forms = systematic_forms(c);
    const size_t s = forms.size();
    size_t best = c.n + 1;
    for (const auto& row : c.rows) best = std::min(best, row.weight());
    for (size_t r = 1; r <= k; ++r) {
        for (const auto& f : forms) {
            for_each_combination(f, r, [&](const BitVector& v) {
                const size_t wt = v.weight();
                if (wt > 0) best = std::min(best, wt);
                return false;
            });
        }
        if (s * (r + 1) >= best) break;
    }
    return best;
}

std::optional<BitVector> distance_below(const LinearCode& c, size_t bound) {
    const size_t k = c.k();
    if (k == 0 || bound <= 1) return std::nullopt;
    if (k <= 24) {
        std::optional<BitVector> hit;
        scan_blocks(c, [&](const uint16_t* w, size_t count, const uint64_t* base,
                           const uint64_t* table, size_t wpc, uint64_t) {
            for (size_t i = 0; i < count; ++i) {
                if (w[i] == 0 || w[i] >= bound) continue;
                hit = rebuild(c, base, table, wpc, i);
                return true;
            }
            return false;
        });
        return hit;
    }
    const auto forms = systematic_forms(c);
    const size_t s = std::max<size_t>(forms.size(), 1);
    // a word of weight w restricts to at most w/s positions on its lightest set
    const size_t radius = (bound - 1) / s;
    std::optional<BitVector> hit;
    for (size_t r = 1; r <= radius && !hit; ++r) {
        for (const auto& f : forms) {
            if (for_each_combination(f, r, [&](const BitVector& v) {
                    const size_t wt = v.weight();
                    if (wt == 0 || wt >= bound) return false;
                    hit = v;
                    return true;
                }))
                break;
        }
    }
    return hit;
}

}  // namespace sdc
