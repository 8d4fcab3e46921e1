#pragma once

#include "sdc/designs.hpp"
#include "sdc/shadow_cases.hpp"
#include "sdc/weight_enum.hpp"

namespace sdc {

// all of these are computed from first principles on each first use and
// cached; nothing below is a pasted table

// extremal doubly-even enumerator at length 120 (A_4 = ... = A_20 = 0)
const WeightEnum& table_eq1();

// the unique surviving enumerator of a [118, 59, 22] type I code
const WeightEnum& table_t1();

// its shadow
const WeightEnum& table_t2();

// 3-design parameters for every shadow weight
const DivisibilityReport& table_t3();

// enumerator of the two-tag extension, a formally self-dual [120, 60, 23]
const WeightEnum& table_t4();

// doubly-even [120, 60, 4] neighbor enumerator (A_4 = 1, A_20 = 51359)
const WeightEnum& table_t5();

// the case analysis behind tables 1 and 2
const CaseReport& shadow_case_report_118();

}  // namespace sdc
