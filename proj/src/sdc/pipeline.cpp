#include "sdc/pipeline.hpp"

#include <stdexcept>

#include "sdc/enumerate.hpp"

namespace sdc {

PipelineResult exclusion_pipeline(const CycleLayout& layout_p,
                                  const std::vector<LinearCode>& candidates_d,
                                  const CycleLayout& layout_q,
                                  const std::vector<LinearCode>& candidates_e,
                                  size_t threshold) {
    if (layout_p.n != layout_q.n)
        throw std::invalid_argument("layouts act on different lengths");
    size_t cells_p = layout_p.cycles.size() + layout_p.fixed.size();
    size_t cells_q = layout_q.cycles.size() + layout_q.fixed.size();
    for (const auto& d : candidates_d)
        if (d.n != cells_p)
            throw std::invalid_argument("candidate length does not match first layout");
    for (const auto& e : candidates_e)
        if (e.n != cells_q)
            throw std::invalid_argument("candidate length does not match second layout");

    PipelineResult result;
    std::vector<LinearCode> lifted_d, lifted_e;
    for (const auto& d : candidates_d) lifted_d.push_back(lift(d, layout_p));
    for (const auto& e : candidates_e) lifted_e.push_back(lift(e, layout_q));

    bool all_witnessed = true;
    for (size_t i = 0; i < lifted_d.size(); ++i) {
        for (size_t j = 0; j < lifted_e.size(); ++j) {
            LinearCode sum = sum_code(lifted_d[i], lifted_e[j]);
            PairVerdict v;
            v.d_index = i;
            v.e_index = j;
            if (auto w = distance_below(sum, threshold)) {
                v.witness_found = true;
                v.witness = *w;
            } else {
                all_witnessed = false;
            }
            result.pairs.push_back(std::move(v));
        }
    }
    result.vacuous = result.pairs.empty();
    result.excluded = all_witnessed;  // vacuously true on an empty list
    return result;
}

}  // namespace sdc
