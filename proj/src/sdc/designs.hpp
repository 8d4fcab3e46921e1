#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdc/bignum.hpp"
#include "sdc/linear_code.hpp"
#include "sdc/weight_enum.hpp"

namespace sdc {

struct DesignParams {
    size_t t = 0, v = 0, k = 0;
    BigInt lambda;                   // = lambda_vec[t]
    std::vector<BigRat> lambda_vec;  // λ_0..λ_t
    bool all_integral = true;
};

// λ_i = λ C(v-i, t-i) / C(k-i, t-i), computed exactly
DesignParams lambda_vector(size_t t, size_t v, size_t k, const BigInt& lambda);

struct Design {
    size_t v = 0;
    std::vector<BitVector> blocks;  // lex sorted, distinct, uniform size
    size_t b() const { return blocks.size(); }
    size_t k() const { return blocks.empty() ? 0 : blocks.front().weight(); }
};

// validates and normalizes: uniform block size, no duplicates, lex order
Design make_design(size_t v, std::vector<BitVector> blocks);

// supports of all weight-w codewords; k must be small enough to enumerate
Design design_from_codewords(const LinearCode& c, size_t w);

struct DesignCheck {
    bool ok = false;
    uint64_t lambda = 0;  // common covering count when ok
    // two t-subsets covered by different numbers of blocks otherwise
    BitVector subset_a, subset_b;
    uint64_t count_a = 0, count_b = 0;
};

// exhaustive check over all C(v, t) subsets; C(v, t) must stay at most 10^6
DesignCheck verify_t_design(const Design& d, size_t t);

struct SampleMode {
    uint64_t trials = 0;
    uint64_t seed = 0;
};

// reproducible spot check on pseudo-random t-subsets
DesignCheck verify_t_design(const Design& d, size_t t, const SampleMode& mode);

std::vector<BitVector> incidence_matrix(const Design& d);
LinearCode code_of_design(const Design& d);

struct AmReport {
    size_t t = 0;
    size_t d = 0, d_dual = 0;
    size_t s = 0;  // nonzero dual weights in [1, n-t]
    bool applicable = false;
    std::vector<size_t> weights_primal;  // A_i != 0 and d <= i <= n
    std::vector<size_t> weights_dual;    // A*_i != 0 and d* <= i <= n-t
};

// applicability of the weight-distribution design criterion, given both
// enumerators or a code (dual enumerator via the transform)
AmReport assmus_mattson(const WeightEnum& w, const WeightEnum& w_dual, size_t t);
AmReport assmus_mattson(const LinearCode& c, size_t t);

struct DivisibilityRow {
    size_t k = 0;
    std::vector<BigRat> lambda;  // λ_0..λ_t
    bool integral = true;
};

struct DivisibilityReport {
    size_t v = 0, t = 0;
    std::vector<DivisibilityRow> rows;  // ascending k over nonzero B_k
    bool ok = true;
};

// necessary condition on a shadow enumerator: each nonzero B_k must give
// integral λ_i = B_k (k-0)...(k-i+1) / ((v-0)...(v-i+1)) for i <= t
DivisibilityReport shadow_divisibility(const WeightEnum& ws, size_t v, size_t t);

// file format: "v b k" header, then b indicator lines of length v
Design read_design(std::istream& in);
void write_design(std::ostream& out, const Design& d);
Design read_design_file(const std::string& path);
void write_design_file(const std::string& path, const Design& d);

}  // namespace sdc
