#ifndef CROSSCAP_TESTS_ORACLES_HPP
#define CROSSCAP_TESTS_ORACLES_HPP

// Slow, independent reference implementations used only by tests.

#include "crosscap/diagram.hpp"
#include "crosscap/harness.hpp"
#include "crosscap/laurent.hpp"
#include "crosscap/surfaces.hpp"

#include <string>
#include <vector>

namespace crosscap::oracle {

// Skein recursion on the first crossing down to crossing-free diagrams.
LaurentPoly skein_bracket(const Diagram& d);

// Orient every state circle so each strand passes straight through its
// crossing; solvable iff the state surface is orientable.
bool parity_orientable(const Diagram& d, const KauffmanState& state);

struct BruteForceSurface {
    int max_chi = 0;
    bool nonorientable_at_max = false;
    bool orientable_at_max = false;
    int orientable_states = 0;  // over all 2^c states
};

BruteForceSurface brute_force_surfaces(const Diagram& d);

// Bundled census rows.
const std::vector<CensusRecord>& census();
const CensusRecord& census_row(const std::string& name);
Diagram census_diagram(const std::string& name);

}  // namespace crosscap::oracle

#endif  // CROSSCAP_TESTS_ORACLES_HPP
