#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "cqsec/cq/state.hpp"

namespace cqsec::cq {

// Total boolean predicate on assignments of a chosen subset of classical
// registers. The callback receives the digits of `regs` in the given order.
struct Event {
    std::vector<std::string> regs;
    std::function<bool(const std::vector<int>&)> pred;

    static Event always() { return Event{{}, [](const std::vector<int>&) { return true; }}; }
    static Event equals(std::string reg, int value) {
        return Event{{std::move(reg)}, [value](const std::vector<int>& a) { return a[0] == value; }};
    }
};

struct Conditioned {
    double probability;
    CqState state;
};

// Marginal state on the kept registers: classical registers are marginalized
// by summing blocks, quantum registers by partial trace. Kept registers stay
// in their original order.
CqState partial_trace(const CqState& rho, const std::vector<std::string>& keep);

// (Pr[ev], rho conditioned on ev). Throws ZeroProbabilityEvent when the event
// probability is below kPruneTol.
Conditioned condition_on_event(const CqState& rho, const Event& ev);

// delta(rho, sigma) = 1/2 tr|rho - sigma|, computed blockwise by Hermitian
// eigendecomposition. Layouts must match exactly.
double trace_distance(const CqState& rho, const CqState& sigma);

// rho_{X<->Y<->E} = sum_{x,y} P_XY(x,y) |x><x| (x) |y><y| (x) rho_E^y.
// X and Y registers must be classical; the three sets must partition the
// register list. Register order of the output equals the input's.
CqState markov_project(const CqState& rho,
                       const std::vector<std::string>& x_regs,
                       const std::vector<std::string>& y_regs,
                       const std::vector<std::string>& e_regs);

// Convenience: E = all registers not in x_regs or y_regs.
CqState markov_project_rest(const CqState& rho,
                            const std::vector<std::string>& x_regs,
                            const std::vector<std::string>& y_regs);

// Appends a classical register deterministically equal to f(args). The
// marginal on the existing registers is unchanged.
CqState extend_with_function(const CqState& rho,
                             const std::vector<std::string>& args,
                             const Register& out,
                             const std::function<int(const std::vector<int>&)>& f);

// Appends classical registers sampled from kernel(args): the callback returns
// a dense distribution over the joint alphabet of `outs` (mixed-radix order).
// The new registers are conditionally independent of everything else given
// the argument registers, so quantum blocks are only rescaled.
CqState extend_with_kernel(const CqState& rho,
                           const std::vector<std::string>& args,
                           const std::vector<Register>& outs,
                           const std::function<std::vector<double>(const std::vector<int>&)>& kernel);

// Tensor product; register names must be disjoint.
CqState tensor(const CqState& a, const CqState& b);

// Permutes registers into the given order (must be a permutation of the
// existing names).
CqState reorder(const CqState& rho, const std::vector<std::string>& order);

CqState rename_register(const CqState& rho, std::string_view old_name, std::string new_name);

// Convex combination; all states must share one layout. Weights must be
// nonnegative and sum to 1 within kNormTol.
CqState mix(const std::vector<std::pair<double, CqState>>& parts);

// Dense probability table over the named classical registers (mixed-radix
// order of the names as given).
std::vector<double> classical_marginal(const CqState& rho, const std::vector<std::string>& regs);

// Uniform classical state on one register.
CqState uniform_classical(const std::string& name, int alphabet);

// Maximally mixed state on one quantum register.
CqState maximally_mixed(const std::string& name, int dim);

// Lemma-3 split: requires Pr[ev | Y=y] in {0,1} for every y with positive
// probability (else EventNotDetermined). Degenerate probabilities yield a
// single branch.
struct DeterminedSplit {
    double probability;  // Pr[ev]
    std::optional<CqState> if_true;
    std::optional<CqState> if_false;
};
DeterminedSplit decompose_by_determined_event(const CqState& rho,
                                              const std::vector<std::string>& x_regs,
                                              const std::vector<std::string>& y_regs,
                                              const std::vector<std::string>& e_regs,
                                              const Event& ev);

// Gap report for the three trace-distance closure claims:
//   claim 1: eps1 = delta(rho, rho_{X<->Y<->ZE}), eps2 = delta(rho, rho_{X<->YZ<->E}),
//            eps2 <= 2*eps1
//   claim 2: eps_prod = delta(rho, rho_X (x) rho_{YZE}) vs the same Markov
//            distance, factor 2
//   claim 3: eps_unif = delta(rho, I/|X| (x) rho_{YZE}) vs Markov, factor 4
// Claims 2 and 3 treat YZ jointly as the pivot (Y empty recovers the
// tripartite statements literally).
struct Lemma1Gaps {
    double eps1 = 0, eps2 = 0;
    double eps_prod = 0, eps_markov = 0;
    double eps_unif = 0, eps_markov_unif = 0;

    bool claim1_holds(double tol = kCompareTol) const { return eps2 <= 2 * eps1 + tol; }
    bool claim2_holds(double tol = kCompareTol) const { return eps_markov <= 2 * eps_prod + tol; }
    bool claim3_holds(double tol = kCompareTol) const { return eps_markov_unif <= 4 * eps_unif + tol; }
};
Lemma1Gaps lemma1_gaps(const CqState& rho,
                       const std::vector<std::string>& x_regs,
                       const std::vector<std::string>& y_regs,
                       const std::vector<std::string>& z_regs);

}  // namespace cqsec::cq
