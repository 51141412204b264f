#include "cqsec/func/ideal.hpp"

#include <cmath>

namespace cqsec::func {

IdealAdversary IdealAdversary::random_input(const std::vector<int>& codes, std::string coin_name) {
    IdealAdversary a;
    a.coins = {cq::Register::classical(std::move(coin_name), static_cast<int>(codes.size()))};
    a.coin_dist.assign(codes.size(), 1.0 / codes.size());
    a.choice = codes;
    return a;
}

cq::CqState ideal_life_execute(const Functionality& f, const InputDist& inputs) {
    return eval_functionality(f, inputs);
}

cq::CqState ideal_life_execute(const Functionality& f, const std::vector<double>& honest_marginal,
                               Side dishonest, const IdealAdversary& adv) {
    const bool bob_dishonest = (dishonest == Side::bob);
    const int honest_space = bob_dishonest ? f.u_space() : f.v_space();
    const int honest_out_space = bob_dishonest ? f.x_space() : f.y_space();
    const int choice_space = bob_dishonest ? f.v_space() : f.u_space();
    const int reply_space = bob_dishonest ? f.y_space() : f.x_space();

    if (static_cast<int>(honest_marginal.size()) != honest_space)
        throw DomainViolation("honest marginal sized wrong for " + f.name);

    std::uint64_t coin_space = 1;
    for (const auto& c : adv.coins) coin_space *= static_cast<std::uint64_t>(c.size);
    if (adv.coins.empty()) {
        if (!adv.coin_dist.empty() && adv.coin_dist.size() != 1)
            throw StrategyProtocolMismatch("coin distribution without coin registers");
    } else if (adv.coin_dist.size() != coin_space) {
        throw StrategyProtocolMismatch("coin distribution sized wrong");
    }
    if (adv.choice.size() != coin_space)
        throw StrategyProtocolMismatch("choice table sized wrong");
    for (int code : adv.choice)
        if (code < 0 || code >= choice_space)
            throw DomainViolation("adversary input " + std::to_string(code) +
                                  " outside extended domain of " + f.name);
    if (adv.quantum_dim > 1 && !adv.prepare)
        throw StrategyProtocolMismatch("quantum output declared but no prepare map");

    ExecutionNames names;
    names.honest_in = bob_dishonest ? "U" : "V";
    names.honest_out = bob_dishonest ? "X" : "Y";

    std::vector<cq::Register> regs;
    regs.push_back(cq::Register::classical(names.honest_in, honest_space));
    regs.push_back(cq::Register::classical(names.honest_out, honest_out_space));
    for (const auto& c : adv.coins) regs.push_back(c);
    regs.push_back(cq::Register::classical(names.choice, choice_space));
    regs.push_back(cq::Register::classical(names.reply, reply_space));
    if (adv.quantum_dim > 1) regs.push_back(cq::Register::quantum(names.quantum, adv.quantum_dim));

    cq::ClassicalLayout coin_layout = [&] {
        std::vector<int> sizes;
        for (const auto& c : adv.coins) sizes.push_back(c.size);
        return cq::ClassicalLayout(sizes);
    }();

    cq::CqState::BlockMap blocks;
    auto block_key = [&](int hin, int hout, std::uint64_t coin, int choice, int reply) {
        std::uint64_t key = static_cast<std::uint64_t>(hin);
        key = key * honest_out_space + hout;
        key = key * coin_space + coin;
        key = key * choice_space + choice;
        key = key * reply_space + reply;
        return key;
    };

    for (int hin = 0; hin < honest_space; ++hin) {
        double ph = honest_marginal[hin];
        if (ph < cq::kPruneTol) continue;
        bool honest_ok = bob_dishonest ? f.honest_u(hin) : f.honest_v(hin);
        if (!honest_ok) throw DomainViolation("honest input support outside honest domain");
        for (std::uint64_t coin = 0; coin < coin_space; ++coin) {
            double pc = adv.coins.empty() ? 1.0 : adv.coin_dist[coin];
            if (pc < cq::kPruneTol) continue;
            int chosen = adv.choice[coin];
            const auto& row = bob_dishonest ? f.row(hin, chosen) : f.row(chosen, hin);
            std::vector<int> coin_digits = coin_layout.decode(coin);
            for (int hout = 0; hout < honest_out_space; ++hout)
                for (int reply = 0; reply < reply_space; ++reply) {
                    double q = bob_dishonest ? row[hout * f.y_space() + reply]
                                             : row[reply * f.y_space() + hout];
                    double w = ph * pc * q;
                    if (w < cq::kPruneTol) continue;
                    cq::Matrix m;
                    if (adv.quantum_dim > 1) {
                        m = adv.prepare(coin_digits, chosen, reply);
                        if (m.rows() != adv.quantum_dim || m.cols() != adv.quantum_dim)
                            throw StrategyProtocolMismatch("prepared state has wrong dimension");
                        m *= w;
                    } else {
                        m = cq::Matrix::Constant(1, 1, w);
                    }
                    auto key = block_key(hin, hout, coin, chosen, reply);
                    auto it = blocks.find(key);
                    if (it == blocks.end())
                        blocks.emplace(key, std::move(m));
                    else
                        it->second += m;
                }
        }
    }
    return cq::CqState::trusted(std::move(regs), std::move(blocks));
}

}  // namespace cqsec::func
