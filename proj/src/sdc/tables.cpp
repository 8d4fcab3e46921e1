#include "sdc/tables.hpp"

#include <stdexcept>

#include "sdc/gleason.hpp"

namespace sdc {

const CaseReport& shadow_case_report_118() {
    static const CaseReport report = resolve_shadow_cases(5);
    return report;
}

namespace {

const ShadowCase& surviving_case() {
    for (const ShadowCase& c : shadow_case_report_118().cases)
        if (c.consistent) {
            if (!c.enumerator || !c.shadow)
                throw std::logic_error("surviving case left freedom unresolved");
            return c;
        }
    throw std::logic_error("no consistent case at length 118");
}

}  // namespace

const WeightEnum& table_t1() {
    static const WeightEnum w = surviving_case().enumerator.value();
    return w;
}

const WeightEnum& table_t2() {
    static const WeightEnum w = surviving_case().shadow.value();
    return w;
}

const DivisibilityReport& table_t3() {
    static const DivisibilityReport rep = shadow_divisibility(table_t2(), 118, 3);
    return rep;
}

const WeightEnum& table_t4() {
    static const WeightEnum w = [] {
        WeightEnum half_shadow = scale(table_t2(), BigRat(1, 2));
        return combine_coset_enumerators(restrict_residue(table_t1(), 0, 4),
                                         half_shadow,
                                         restrict_residue(table_t1(), 2, 4),
                                         half_shadow);
    }();
    return w;
}

const WeightEnum& table_eq1() {
    static const WeightEnum w = [] {
        std::vector<std::pair<size_t, BigRat>> pins{{0, 1}};
        for (size_t i = 4; i <= 20; i += 4) pins.emplace_back(i, 0);
        return gleason_expand(solve_gleason(120, GleasonBasis::doubly_even, pins));
    }();
    return w;
}

const WeightEnum& table_t5() {
    static const WeightEnum w = [] {
        std::vector<std::pair<size_t, BigRat>> pins{
            {0, 1}, {4, 1}, {8, 0}, {12, 0}, {16, 0}, {20, 51359}};
        return gleason_expand(solve_gleason(120, GleasonBasis::doubly_even, pins));
    }();
    return w;
}

}  // namespace sdc
