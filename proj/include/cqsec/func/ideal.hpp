#pragma once

#include <functional>
#include <optional>

#include "cqsec/func/functionality.hpp"

namespace cqsec::func {

enum class Side { alice, bob };

inline const char* side_name(Side s) { return s == Side::alice ? "alice" : "bob"; }

// Dishonest party in the ideal-life protocol. It has no input; it may toss
// explicit coins (which become part of the transcript), derives its
// functionality input from them, receives the reply, and may prepare a final
// quantum state from (coins, input, reply). Everything classical it ever
// sees or samples is materialized in the transcript registers.
struct IdealAdversary {
    std::vector<cq::Register> coins;  // classical; empty = deterministic
    std::vector<double> coin_dist;    // dense joint over the coin space
    std::vector<int> choice;          // coin assignment -> extended input code
    int quantum_dim = 1;              // >1 adds a prepared quantum register Q
    std::function<cq::Matrix(const std::vector<int>& coins, int input, int reply)> prepare;

    static IdealAdversary fixed_input(int code) {
        IdealAdversary a;
        a.choice = {code};
        return a;
    }
    static IdealAdversary random_input(const std::vector<int>& codes, std::string coin_name = "R_coin0");
};

// Register-name contract for execution outputs. Honest input/output keep
// their functionality-side names; the dishonest party's classical record is
// R_choice (its functionality input) and R_reply (what the functionality
// returned), plus its declared coins; Q is its prepared quantum register.
struct ExecutionNames {
    std::string honest_in;   // "U" or "V"
    std::string honest_out;  // "X" or "Y"
    std::string choice = "R_choice";
    std::string reply = "R_reply";
    std::string quantum = "Q";
};

// Honest-honest ideal life: identical to eval_functionality (state over
// U, V, X, Y).
cq::CqState ideal_life_execute(const Functionality& f, const InputDist& inputs);

// One dishonest party with no input. honest_marginal is the honest party's
// input distribution over its extended space (support inside the honest
// domain). Output registers, for dishonest Bob:
//   U (honest input, kept), X (honest output), coins..., R_choice, R_reply, [Q]
// and symmetrically for dishonest Alice.
cq::CqState ideal_life_execute(const Functionality& f, const std::vector<double>& honest_marginal,
                               Side dishonest, const IdealAdversary& adversary);

}  // namespace cqsec::func
