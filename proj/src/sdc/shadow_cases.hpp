#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdc/gleason.hpp"
#include "sdc/weight_enum.hpp"

namespace sdc {

enum class LowWeightValue { zero, one, at_least_one };

struct ShadowCasePattern {
    // assignment for every admissible shadow weight below (d+4)/2, ascending
    std::vector<std::pair<size_t, LowWeightValue>> assigned;
    std::string label() const;
};

struct ShadowCase {
    ShadowCasePattern pattern;
    // tail coefficients fixed by the low-weight equations, in binding order
    std::vector<std::pair<size_t, BigRat>> bound;
    bool consistent = false;

    // contradiction data: the named nonnegativity (or lower-bound) violation,
    // evaluated at the corner assignment listed alongside
    size_t violated_weight = 0;
    BigRat violated_value = 0;
    std::vector<std::pair<size_t, BigRat>> corner;
    std::string certificate;

    // consistency data: coefficients pinned by the inequality system, and the
    // full enumerators once no freedom remains
    std::vector<std::pair<size_t, BigRat>> forced;
    std::optional<WeightEnum> enumerator;
    std::optional<WeightEnum> shadow;
};

struct CaseReport {
    size_t m = 0;  // family index: length 24m-2, dimension 12m-1, distance 4m+2
    size_t n = 0;
    size_t d = 0;
    GleasonCoeffs prefix;  // a_0..a_2m determined, the rest left unset
    std::vector<ShadowCase> cases;

    size_t consistent_count() const;
};

// case analysis for the putative [24m-2, 12m-1, 4m+2] code of type I: solve
// the coefficient prefix forced by the minimum distance, enumerate the
// admissible patterns of low shadow coefficients, bind tail coefficients per
// pattern, and settle each case exactly against B_w >= 0
CaseReport resolve_shadow_cases(size_t m);

std::string case_report_text(const CaseReport& r);
std::string case_report_json(const CaseReport& r);

}  // namespace sdc
