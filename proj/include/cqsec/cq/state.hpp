#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cqsec/errors.hpp"

namespace cqsec::cq {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

// Default tolerances. tau_psd/tau_norm absorb double-precision eigensolve
// noise; tau_compare is the comparison tolerance used by checkers; blocks
// below tau_prune are dropped so conditional normalization never divides
// by ~0.
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kNormTol = 1e-9;
inline constexpr double kCompareTol = 1e-7;
inline constexpr double kPruneTol = 1e-12;

// Desk-scale caps: joint quantum dimension and per-register classical
// alphabet. Scenario loading enforces them; the algebra itself only checks
// the quantum cap (classical products are bounded by construction).
inline constexpr int kMaxQuantumDim = 64;
inline constexpr int kMaxClassicalAlphabet = 8;

struct Register {
    enum class Kind { classical, quantum };
    std::string name;
    Kind kind = Kind::classical;
    int size = 1;  // alphabet size (classical) or dimension (quantum)

    static Register classical(std::string name, int alphabet) {
        return Register{std::move(name), Kind::classical, alphabet};
    }
    static Register quantum(std::string name, int dim) {
        return Register{std::move(name), Kind::quantum, dim};
    }
    bool operator==(const Register&) const = default;
};

// Mixed-radix coding over an ordered list of alphabet sizes. First register
// is the most significant digit.
struct ClassicalLayout {
    std::vector<int> sizes;
    std::vector<std::uint64_t> strides;
    std::uint64_t space = 1;

    ClassicalLayout() = default;
    explicit ClassicalLayout(std::vector<int> s);

    std::uint64_t encode(const std::vector<int>& digits) const;
    std::vector<int> decode(std::uint64_t key) const;
};

// Hybrid classical-quantum state over named registers.
//
//   rho = sum_a  |a><a| (x) B_a
//
// where a ranges over joint assignments of the classical registers and each
// block B_a is a PSD operator on the tensor product of the quantum
// registers. Trace of B_a is the probability of assignment a; the normalized
// block is the conditional quantum state. States are immutable after
// construction; all operations are pure functions.
class CqState {
public:
    using Key = std::uint64_t;
    using BlockMap = std::map<Key, Matrix>;

    // Validating constructor: Hermitian PSD blocks (within kPsdTol), correct
    // dimensions, total trace 1 +- kNormTol. Trace is rescaled to exactly 1
    // afterwards; blocks with trace < kPruneTol are pruned.
    static CqState make(std::vector<Register> regs, BlockMap blocks);

    // Fast path for algebra-internal results that preserve the invariants by
    // construction. Only prunes tiny blocks.
    static CqState trusted(std::vector<Register> regs, BlockMap blocks);

    // Purely classical state from a dense probability table over the given
    // classical registers (assignment order = mixed-radix order).
    static CqState classical(std::vector<Register> regs, const std::vector<double>& probs);

    // Point mass on a single classical assignment.
    static CqState point_mass(std::vector<Register> regs, const std::vector<int>& assignment);

    const std::vector<Register>& registers() const { return regs_; }
    const BlockMap& blocks() const { return blocks_; }
    const ClassicalLayout& classical_layout() const { return cls_; }

    int reg_index(std::string_view name) const;      // throws UnknownRegister
    bool has_register(std::string_view name) const;
    const Register& reg(std::string_view name) const { return regs_[reg_index(name)]; }

    // indices of classical (resp. quantum) registers within registers()
    const std::vector<int>& classical_regs() const { return cls_idx_; }
    const std::vector<int>& quantum_regs() const { return q_idx_; }
    std::vector<int> quantum_dims() const;

    bool is_classical() const { return q_idx_.empty(); }
    int quantum_dim() const { return qdim_; }
    std::uint64_t classical_space() const { return cls_.space; }

    double total_trace() const;

    // digits for the classical registers only, in register order
    std::vector<int> decode(Key key) const { return cls_.decode(key); }
    Key encode(const std::vector<int>& digits) const { return cls_.encode(digits); }

    // probability of one classical assignment (trace of its block)
    double probability(Key key) const;

    bool same_layout(const CqState& other) const { return regs_ == other.regs_; }

private:
    CqState() = default;
    void init_derived();

    std::vector<Register> regs_;
    ClassicalLayout cls_;       // over classical registers in order
    std::vector<int> cls_idx_;  // positions of classical registers
    std::vector<int> q_idx_;    // positions of quantum registers
    int qdim_ = 1;
    BlockMap blocks_;
};

}  // namespace cqsec::cq
