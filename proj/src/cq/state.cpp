#include "cqsec/cq/state.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <set>

namespace cqsec::cq {

ClassicalLayout::ClassicalLayout(std::vector<int> s) : sizes(std::move(s)) {
    strides.assign(sizes.size(), 1);
    for (int i = static_cast<int>(sizes.size()) - 2; i >= 0; --i) {
        strides[i] = strides[i + 1] * static_cast<std::uint64_t>(sizes[i + 1]);
    }
    space = 1;
    for (int sz : sizes) space *= static_cast<std::uint64_t>(sz);
}

std::uint64_t ClassicalLayout::encode(const std::vector<int>& digits) const {
    if (digits.size() != sizes.size())
        throw DimensionMismatch("assignment has " + std::to_string(digits.size()) +
                                " digits, layout has " + std::to_string(sizes.size()));
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= sizes[i])
            throw DimensionMismatch("digit " + std::to_string(i) + " out of range");
        key += strides[i] * static_cast<std::uint64_t>(digits[i]);
    }
    return key;
}

std::vector<int> ClassicalLayout::decode(std::uint64_t key) const {
    std::vector<int> digits(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        digits[i] = static_cast<int>(key / strides[i]);
        key %= strides[i];
    }
    return digits;
}

void CqState::init_derived() {
    std::set<std::string> names;
    std::vector<int> cls_sizes;
    cls_idx_.clear();
    q_idx_.clear();
    qdim_ = 1;
    for (int i = 0; i < static_cast<int>(regs_.size()); ++i) {
        const Register& r = regs_[i];
        if (r.size < 1) throw DimensionMismatch("register " + r.name + " has size < 1");
        if (!names.insert(r.name).second) throw NameCollision("duplicate register " + r.name);
        if (r.kind == Register::Kind::classical) {
            cls_idx_.push_back(i);
            cls_sizes.push_back(r.size);
        } else {
            q_idx_.push_back(i);
            qdim_ *= r.size;
        }
    }
    if (qdim_ > kMaxQuantumDim)
        throw DimensionMismatch("joint quantum dimension " + std::to_string(qdim_) +
                                " exceeds cap " + std::to_string(kMaxQuantumDim));
    cls_ = ClassicalLayout(cls_sizes);
}

CqState CqState::trusted(std::vector<Register> regs, BlockMap blocks) {
    CqState st;
    st.regs_ = std::move(regs);
    st.init_derived();
    for (auto it = blocks.begin(); it != blocks.end();) {
        if (it->first >= st.cls_.space)
            throw DimensionMismatch("block key out of classical space");
        if (it->second.rows() != st.qdim_ || it->second.cols() != st.qdim_)
            throw DimensionMismatch("block is " + std::to_string(it->second.rows()) + "x" +
                                    std::to_string(it->second.cols()) + ", expected dim " +
                                    std::to_string(st.qdim_));
        if (it->second.trace().real() < kPruneTol)
            it = blocks.erase(it);
        else
            ++it;
    }
    st.blocks_ = std::move(blocks);
    return st;
}

CqState CqState::make(std::vector<Register> regs, BlockMap blocks) {
    CqState st = trusted(std::move(regs), std::move(blocks));
    double total = 0.0;
    for (auto& [key, m] : st.blocks_) {
        double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
        if (asym > kPsdTol)
            throw NonPsdBlock("block " + std::to_string(key) + " is not Hermitian (asym " +
                              std::to_string(asym) + ")");
        if (st.qdim_ == 1) {
            if (m(0, 0).real() < -kPsdTol)
                throw NonPsdBlock("negative probability in block " + std::to_string(key));
        } else {
            Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
            if (es.eigenvalues().minCoeff() < -kPsdTol)
                throw NonPsdBlock("block " + std::to_string(key) + " has eigenvalue " +
                                  std::to_string(es.eigenvalues().minCoeff()));
        }
        total += m.trace().real();
    }
    if (std::abs(total - 1.0) > kNormTol)
        throw NormalizationError("total trace " + std::to_string(total));
    if (total > 0.0) {
        for (auto& [key, m] : st.blocks_) m /= total;
    }
    return st;
}

CqState CqState::classical(std::vector<Register> regs, const std::vector<double>& probs) {
    for (const auto& r : regs)
        if (r.kind != Register::Kind::classical)
            throw DimensionMismatch("classical() requires classical registers");
    BlockMap blocks;
    for (std::uint64_t k = 0; k < probs.size(); ++k) {
        if (probs[k] < -kPsdTol) throw NonPsdBlock("negative probability");
        if (probs[k] >= kPruneTol) blocks[k] = Matrix::Constant(1, 1, probs[k]);
    }
    return make(std::move(regs), std::move(blocks));
}

CqState CqState::point_mass(std::vector<Register> regs, const std::vector<int>& assignment) {
    CqState st;
    st.regs_ = regs;
    st.init_derived();
    BlockMap blocks;
    blocks[st.cls_.encode(assignment)] = Matrix::Constant(1, 1, 1.0);
    return trusted(std::move(regs), std::move(blocks));
}

int CqState::reg_index(std::string_view name) const {
    for (int i = 0; i < static_cast<int>(regs_.size()); ++i)
        if (regs_[i].name == name) return i;
    throw UnknownRegister(std::string(name));
}

bool CqState::has_register(std::string_view name) const {
    for (const auto& r : regs_)
        if (r.name == name) return true;
    return false;
}

std::vector<int> CqState::quantum_dims() const {
    std::vector<int> dims;
    dims.reserve(q_idx_.size());
    for (int i : q_idx_) dims.push_back(regs_[i].size);
    return dims;
}

double CqState::total_trace() const {
    double t = 0.0;
    for (const auto& [key, m] : blocks_) t += m.trace().real();
    return t;
}

double CqState::probability(Key key) const {
    auto it = blocks_.find(key);
    return it == blocks_.end() ? 0.0 : it->second.trace().real();
}

}  // namespace cqsec::cq
