#pragma once

#include "cqsec/cq/state.hpp"
#include "cqsec/det_rng.hpp"

namespace cqsec::cq {

// Full-rank random cq-state: every classical assignment gets weight from a
// normalized exponential and a Wishart-style random PSD quantum block. Used
// by the lemma/property suites.
CqState random_cq_state(DetRng& rng, const std::vector<Register>& regs);

// Random state over X,Y,Z classical bits/trits and one quantum register,
// register names fixed to "X","Y","Z","E". Sizes sampled within the caps.
CqState random_xyze_state(DetRng& rng, int max_cls, int max_qdim);

}  // namespace cqsec::cq
