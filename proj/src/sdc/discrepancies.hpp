#pragma once

#include <string>
#include <vector>

namespace sdc {

// places where the published source document disagrees with exact
// recomputation; "computed" is derived live, never pasted
struct Discrepancy {
    std::string location;
    std::string printed;
    std::string computed;
    std::string note;
};

const std::vector<Discrepancy>& discrepancies();

}  // namespace sdc
