#ifndef FC_ACCEPTANCE_HPP
#define FC_ACCEPTANCE_HPP

// End-to-end acceptance suite: twelve checks covering class groups,
// local identities, the lifted Fourier coefficient pipeline, central
// value ratios, desk-scale coefficient statistics, the twisted first
// moment, and determinism. One line per check; returns the number of
// failures.

#include <ostream>

namespace fc {

int run_acceptance(std::ostream& out, int threads = 1);

}  // namespace fc

#endif
