#include "cqsec/cq/ops.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>

namespace cqsec::cq {

namespace {

// Positions (within the classical register list) of the named registers, in
// the order the names are given.
std::vector<int> cls_positions(const CqState& rho, const std::vector<std::string>& names) {
    std::vector<int> pos;
    pos.reserve(names.size());
    for (const auto& n : names) {
        int ri = rho.reg_index(n);
        const auto& cls = rho.classical_regs();
        auto it = std::find(cls.begin(), cls.end(), ri);
        if (it == cls.end())
            throw NonClassicalPivot("register " + n + " is quantum, classical required");
        pos.push_back(static_cast<int>(it - cls.begin()));
    }
    return pos;
}

ClassicalLayout sub_layout(const CqState& rho, const std::vector<int>& cls_pos) {
    std::vector<int> sizes;
    sizes.reserve(cls_pos.size());
    for (int p : cls_pos) sizes.push_back(rho.classical_layout().sizes[p]);
    return ClassicalLayout(sizes);
}

std::vector<int> extract(const std::vector<int>& digits, const std::vector<int>& pos) {
    std::vector<int> out;
    out.reserve(pos.size());
    for (int p : pos) out.push_back(digits[p]);
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Partial trace of M over the quantum registers where keep[i] is false.
Matrix partial_trace_matrix(const Matrix& m, const std::vector<int>& dims,
                            const std::vector<bool>& keep) {
    int full = 1, kept = 1;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        full *= dims[i];
        if (keep[i]) kept *= dims[i];
    }
    if (kept == full) return m;
    Matrix out = Matrix::Zero(kept, kept);
    std::vector<int> di(dims.size()), dj(dims.size());
    for (int i = 0; i < full; ++i) {
        int rest = i;
        for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
            di[k] = rest % dims[k];
            rest /= dims[k];
        }
        for (int j = 0; j < full; ++j) {
            rest = j;
            for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
                dj[k] = rest % dims[k];
                rest /= dims[k];
            }
            bool diag = true;
            for (std::size_t k = 0; k < dims.size(); ++k)
                if (!keep[k] && di[k] != dj[k]) { diag = false; break; }
            if (!diag) continue;
            int oi = 0, oj = 0;
            for (std::size_t k = 0; k < dims.size(); ++k) {
                if (!keep[k]) continue;
                oi = oi * dims[k] + di[k];
                oj = oj * dims[k] + dj[k];
            }
            out(oi, oj) += m(i, j);
        }
    }
    return out;
}

double trace_norm_half(const Matrix& m) {
    if (m.rows() == 1) return 0.5 * std::abs(m(0, 0).real());
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace

CqState partial_trace(const CqState& rho, const std::vector<std::string>& keep) {
    std::set<std::string> keep_set(keep.begin(), keep.end());
    for (const auto& n : keep) rho.reg_index(n);  // throws UnknownRegister

    std::vector<Register> out_regs;
    std::vector<int> kept_cls_pos;
    std::vector<bool> q_keep;
    const auto& regs = rho.registers();
    {
        int ci = 0;
        for (const auto& r : regs) {
            bool k = keep_set.count(r.name) > 0;
            if (r.kind == Register::Kind::classical) {
                if (k) kept_cls_pos.push_back(ci);
                ++ci;
            } else {
                q_keep.push_back(k);
            }
            if (k) out_regs.push_back(r);
        }
    }
    ClassicalLayout out_cls = sub_layout(rho, kept_cls_pos);
    std::vector<int> qdims = rho.quantum_dims();

    CqState::BlockMap out;
    for (const auto& [key, m] : rho.blocks()) {
        std::vector<int> digits = rho.decode(key);
        std::uint64_t okey = out_cls.encode(extract(digits, kept_cls_pos));
        Matrix traced = partial_trace_matrix(m, qdims, q_keep);
        auto it = out.find(okey);
        if (it == out.end())
            out.emplace(okey, std::move(traced));
        else
            it->second += traced;
    }
    return CqState::trusted(std::move(out_regs), std::move(out));
}

Conditioned condition_on_event(const CqState& rho, const Event& ev) {
    std::vector<int> pos = cls_positions(rho, ev.regs);
    double p = 0.0;
    for (const auto& [key, m] : rho.blocks()) {
        if (ev.pred(extract(rho.decode(key), pos))) p += m.trace().real();
    }
    if (p < kPruneTol) throw ZeroProbabilityEvent("event probability " + std::to_string(p));
    CqState::BlockMap out;
    for (const auto& [key, m] : rho.blocks()) {
        if (ev.pred(extract(rho.decode(key), pos))) out[key] = m / p;
    }
    return Conditioned{p, CqState::trusted(rho.registers(), std::move(out))};
}

double trace_distance(const CqState& rho, const CqState& sigma) {
    if (!rho.same_layout(sigma))
        throw LayoutMismatch("trace_distance requires identical register layouts");
    double d = 0.0;
    auto it = rho.blocks().begin();
    auto jt = sigma.blocks().begin();
    while (it != rho.blocks().end() || jt != sigma.blocks().end()) {
        if (jt == sigma.blocks().end() || (it != rho.blocks().end() && it->first < jt->first)) {
            d += trace_norm_half(it->second);
            ++it;
        } else if (it == rho.blocks().end() || jt->first < it->first) {
            d += trace_norm_half(jt->second);
            ++jt;
        } else {
            d += trace_norm_half(it->second - jt->second);
            ++it;
            ++jt;
        }
    }
    return d;
}

namespace {

void check_partition(const CqState& rho, const std::vector<std::string>& x,
                     const std::vector<std::string>& y, const std::vector<std::string>& e) {
    std::set<std::string> seen;
    for (const auto* part : {&x, &y, &e})
        for (const auto& n : *part) {
            rho.reg_index(n);
            if (!seen.insert(n).second) throw PartitionError("register " + n + " listed twice");
        }
    if (seen.size() != rho.registers().size())
        throw PartitionError("partition does not cover all registers");
}

}  // namespace

CqState markov_project(const CqState& rho, const std::vector<std::string>& x_regs,
                       const std::vector<std::string>& y_regs,
                       const std::vector<std::string>& e_regs) {
    check_partition(rho, x_regs, y_regs, e_regs);
    std::vector<int> xpos = cls_positions(rho, x_regs);
    std::vector<int> ypos = cls_positions(rho, y_regs);
    ClassicalLayout xl = sub_layout(rho, xpos), yl = sub_layout(rho, ypos);

    // e-classical positions in original order
    std::vector<int> epos;
    {
        std::set<std::string> xy(x_regs.begin(), x_regs.end());
        xy.insert(y_regs.begin(), y_regs.end());
        const auto& regs = rho.registers();
        int ci = 0;
        for (const auto& r : regs) {
            if (r.kind != Register::Kind::classical) continue;
            if (!xy.count(r.name)) epos.push_back(ci);
            ++ci;
        }
    }
    ClassicalLayout el = sub_layout(rho, epos);

    // P_XY and the y-conditional E-states
    std::map<std::uint64_t, double> p_xy;  // key = xkey*yspace + ykey
    std::map<std::uint64_t, double> p_y;
    std::map<std::uint64_t, Matrix> ye_sum;  // key = ykey*espace + ekey
    for (const auto& [key, m] : rho.blocks()) {
        std::vector<int> digits = rho.decode(key);
        std::uint64_t xk = xl.encode(extract(digits, xpos));
        std::uint64_t yk = yl.encode(extract(digits, ypos));
        std::uint64_t ek = el.encode(extract(digits, epos));
        double tr = m.trace().real();
        p_xy[xk * yl.space + yk] += tr;
        p_y[yk] += tr;
        auto it = ye_sum.find(yk * el.space + ek);
        if (it == ye_sum.end())
            ye_sum.emplace(yk * el.space + ek, m);
        else
            it->second += m;
    }

    // reassemble: block(x,y,e) = P_XY(x,y)/P_Y(y) * sum_x' block(x',y,e)
    CqState::BlockMap out;
    for (const auto& [xy, pxy] : p_xy) {
        if (pxy < kPruneTol) continue;
        std::uint64_t xk = xy / yl.space, yk = xy % yl.space;
        double py = p_y.at(yk);
        std::vector<int> xd = xl.decode(xk), yd = yl.decode(yk);
        for (const auto& [ye, msum] : ye_sum) {
            if (ye / el.space != yk) continue;
            std::vector<int> ed = el.decode(ye % el.space);
            std::vector<int> digits(rho.classical_layout().sizes.size());
            for (std::size_t i = 0; i < xpos.size(); ++i) digits[xpos[i]] = xd[i];
            for (std::size_t i = 0; i < ypos.size(); ++i) digits[ypos[i]] = yd[i];
            for (std::size_t i = 0; i < epos.size(); ++i) digits[epos[i]] = ed[i];
            Matrix blk = (pxy / py) * msum;
            if (blk.trace().real() >= kPruneTol) out[rho.encode(digits)] = std::move(blk);
        }
    }
    return CqState::trusted(rho.registers(), std::move(out));
}

CqState markov_project_rest(const CqState& rho, const std::vector<std::string>& x_regs,
                            const std::vector<std::string>& y_regs) {
    std::set<std::string> xy(x_regs.begin(), x_regs.end());
    xy.insert(y_regs.begin(), y_regs.end());
    std::vector<std::string> e_regs;
    for (const auto& r : rho.registers())
        if (!xy.count(r.name)) e_regs.push_back(r.name);
    return markov_project(rho, x_regs, y_regs, e_regs);
}

CqState extend_with_function(const CqState& rho, const std::vector<std::string>& args,
                             const Register& out,
                             const std::function<int(const std::vector<int>&)>& f) {
    return extend_with_kernel(rho, args, {out}, [&](const std::vector<int>& a) {
        int v = f(a);
        if (v < 0 || v >= out.size)
            throw DimensionMismatch("function value " + std::to_string(v) + " outside alphabet of " +
                                    out.name);
        std::vector<double> dist(out.size, 0.0);
        dist[v] = 1.0;
        return dist;
    });
}

CqState extend_with_kernel(const CqState& rho, const std::vector<std::string>& args,
                           const std::vector<Register>& outs,
                           const std::function<std::vector<double>(const std::vector<int>&)>& kernel) {
    for (const auto& o : outs) {
        if (o.kind != Register::Kind::classical)
            throw DimensionMismatch("extension register " + o.name + " must be classical");
        if (rho.has_register(o.name)) throw NameCollision(o.name);
    }
    std::vector<int> pos = cls_positions(rho, args);

    std::vector<Register> regs = rho.registers();
    regs.insert(regs.end(), outs.begin(), outs.end());
    std::vector<int> out_sizes;
    std::uint64_t out_space = 1;
    for (const auto& o : outs) {
        out_sizes.push_back(o.size);
        out_space *= static_cast<std::uint64_t>(o.size);
    }

    CqState::BlockMap blocks;
    for (const auto& [key, m] : rho.blocks()) {
        std::vector<double> dist = kernel(extract(rho.decode(key), pos));
        if (dist.size() != out_space) throw DimensionMismatch("kernel row has wrong size");
        double sum = 0.0;
        for (double q : dist) {
            if (q < -kPsdTol) throw NonPsdBlock("negative kernel probability");
            sum += q;
        }
        if (std::abs(sum - 1.0) > kNormTol)
            throw NormalizationError("kernel row sums to " + std::to_string(sum));
        for (std::uint64_t v = 0; v < out_space; ++v) {
            if (dist[v] < kPruneTol) continue;
            blocks[key * out_space + v] = dist[v] * m;
        }
    }
    return CqState::trusted(std::move(regs), std::move(blocks));
}

CqState tensor(const CqState& a, const CqState& b) {
    for (const auto& r : b.registers())
        if (a.has_register(r.name)) throw NameCollision(r.name);
    std::vector<Register> regs = a.registers();
    regs.insert(regs.end(), b.registers().begin(), b.registers().end());

    CqState::BlockMap out;
    std::uint64_t bspace = b.classical_space();
    for (const auto& [ka, ma] : a.blocks())
        for (const auto& [kb, mb] : b.blocks()) {
            if (a.quantum_dim() == 1 && b.quantum_dim() == 1)
                out[ka * bspace + kb] = Matrix::Constant(1, 1, ma(0, 0) * mb(0, 0));
            else
                out[ka * bspace + kb] = kron(ma, mb);
        }
    return CqState::trusted(std::move(regs), std::move(out));
}

CqState reorder(const CqState& rho, const std::vector<std::string>& order) {
    if (order.size() != rho.registers().size())
        throw PartitionError("reorder list has wrong length");
    std::vector<int> perm;  // perm[i] = old index of new position i
    std::set<std::string> seen;
    for (const auto& n : order) {
        if (!seen.insert(n).second) throw PartitionError("register " + n + " listed twice");
        perm.push_back(rho.reg_index(n));
    }

    std::vector<Register> regs;
    for (int p : perm) regs.push_back(rho.registers()[p]);

    // classical digit permutation
    std::vector<int> old_cls = rho.classical_regs();  // reg idx -> sorted order
    std::vector<int> reg_to_cls(rho.registers().size(), -1);
    for (std::size_t i = 0; i < old_cls.size(); ++i) reg_to_cls[old_cls[i]] = static_cast<int>(i);

    std::vector<int> new_cls_from_old;  // new classical pos -> old classical pos
    std::vector<int> new_q_from_old;    // new quantum pos -> old quantum pos
    std::vector<int> reg_to_q(rho.registers().size(), -1);
    {
        const auto& oq = rho.quantum_regs();
        for (std::size_t i = 0; i < oq.size(); ++i) reg_to_q[oq[i]] = static_cast<int>(i);
    }
    for (int p : perm) {
        if (rho.registers()[p].kind == Register::Kind::classical)
            new_cls_from_old.push_back(reg_to_cls[p]);
        else
            new_q_from_old.push_back(reg_to_q[p]);
    }

    std::vector<int> new_cls_sizes;
    for (int p : new_cls_from_old) new_cls_sizes.push_back(rho.classical_layout().sizes[p]);
    ClassicalLayout nl(new_cls_sizes);

    // quantum basis permutation
    std::vector<int> qdims = rho.quantum_dims();
    int qdim = rho.quantum_dim();
    std::vector<int> basis_perm(qdim);
    if (qdim > 1) {
        std::vector<int> new_qdims;
        for (int p : new_q_from_old) new_qdims.push_back(qdims[p]);
        std::vector<int> digits(qdims.size());
        for (int i = 0; i < qdim; ++i) {
            int rest = i;
            for (int k = static_cast<int>(qdims.size()) - 1; k >= 0; --k) {
                digits[k] = rest % qdims[k];
                rest /= qdims[k];
            }
            int ni = 0;
            for (std::size_t k = 0; k < new_q_from_old.size(); ++k)
                ni = ni * new_qdims[k] + digits[new_q_from_old[k]];
            basis_perm[i] = ni;
        }
    }

    CqState::BlockMap out;
    for (const auto& [key, m] : rho.blocks()) {
        std::vector<int> digits = rho.decode(key);
        std::vector<int> nd;
        nd.reserve(new_cls_from_old.size());
        for (int p : new_cls_from_old) nd.push_back(digits[p]);
        Matrix nm;
        if (qdim == 1) {
            nm = m;
        } else {
            nm = Matrix::Zero(qdim, qdim);
            for (int i = 0; i < qdim; ++i)
                for (int j = 0; j < qdim; ++j) nm(basis_perm[i], basis_perm[j]) = m(i, j);
        }
        out[nl.encode(nd)] = std::move(nm);
    }
    return CqState::trusted(std::move(regs), std::move(out));
}

CqState rename_register(const CqState& rho, std::string_view old_name, std::string new_name) {
    std::vector<Register> regs = rho.registers();
    int idx = rho.reg_index(old_name);
    if (new_name != old_name && rho.has_register(new_name)) throw NameCollision(new_name);
    regs[idx].name = std::move(new_name);
    return CqState::trusted(std::move(regs), rho.blocks());
}

CqState mix(const std::vector<std::pair<double, CqState>>& parts) {
    if (parts.empty()) throw DimensionMismatch("mix of zero states");
    double wsum = 0.0;
    CqState::BlockMap out;
    for (const auto& [w, st] : parts) {
        if (w < -kPsdTol) throw NonPsdBlock("negative mixture weight");
        if (!st.same_layout(parts.front().second)) throw LayoutMismatch("mix layouts differ");
        wsum += w;
        if (w < kPruneTol) continue;
        for (const auto& [key, m] : st.blocks()) {
            auto it = out.find(key);
            if (it == out.end())
                out[key] = w * m;
            else
                it->second += w * m;
        }
    }
    if (std::abs(wsum - 1.0) > kNormTol)
        throw NormalizationError("mixture weights sum to " + std::to_string(wsum));
    return CqState::trusted(parts.front().second.registers(), std::move(out));
}

std::vector<double> classical_marginal(const CqState& rho, const std::vector<std::string>& regs) {
    std::vector<int> pos = cls_positions(rho, regs);
    ClassicalLayout l = sub_layout(rho, pos);
    std::vector<double> table(l.space, 0.0);
    for (const auto& [key, m] : rho.blocks())
        table[l.encode(extract(rho.decode(key), pos))] += m.trace().real();
    return table;
}

CqState uniform_classical(const std::string& name, int alphabet) {
    return CqState::classical({Register::classical(name, alphabet)},
                              std::vector<double>(alphabet, 1.0 / alphabet));
}

CqState maximally_mixed(const std::string& name, int dim) {
    CqState::BlockMap blocks;
    blocks[0] = Matrix::Identity(dim, dim) / static_cast<double>(dim);
    return CqState::trusted({Register::quantum(name, dim)}, std::move(blocks));
}

DeterminedSplit decompose_by_determined_event(const CqState& rho,
                                              const std::vector<std::string>& x_regs,
                                              const std::vector<std::string>& y_regs,
                                              const std::vector<std::string>& e_regs,
                                              const Event& ev) {
    check_partition(rho, x_regs, y_regs, e_regs);
    std::vector<int> ypos = cls_positions(rho, y_regs);
    ClassicalLayout yl = sub_layout(rho, ypos);
    std::vector<int> evpos = cls_positions(rho, ev.regs);

    std::map<std::uint64_t, double> p_y, p_y_and_ev;
    for (const auto& [key, m] : rho.blocks()) {
        std::vector<int> digits = rho.decode(key);
        std::uint64_t yk = yl.encode(extract(digits, ypos));
        double tr = m.trace().real();
        p_y[yk] += tr;
        if (ev.pred(extract(digits, evpos))) p_y_and_ev[yk] += tr;
    }
    double p = 0.0;
    for (const auto& [yk, py] : p_y) {
        if (py < kPruneTol) continue;
        double r = p_y_and_ev.count(yk) ? p_y_and_ev.at(yk) / py : 0.0;
        if (r > kNormTol && r < 1.0 - kNormTol)
            throw EventNotDetermined("Pr[ev | Y=y] = " + std::to_string(r) + " for y key " +
                                     std::to_string(yk));
        p += r > 0.5 ? py : 0.0;
    }

    DeterminedSplit split{p, std::nullopt, std::nullopt};
    if (p > kPruneTol) split.if_true = condition_on_event(rho, ev).state;
    if (1.0 - p > kPruneTol) {
        Event neg{ev.regs, [&ev](const std::vector<int>& a) { return !ev.pred(a); }};
        split.if_false = condition_on_event(rho, neg).state;
    }
    return split;
}

Lemma1Gaps lemma1_gaps(const CqState& rho, const std::vector<std::string>& x_regs,
                       const std::vector<std::string>& y_regs,
                       const std::vector<std::string>& z_regs) {
    std::set<std::string> named(x_regs.begin(), x_regs.end());
    named.insert(y_regs.begin(), y_regs.end());
    for (const auto& z : z_regs)
        if (!named.insert(z).second) throw PartitionError("register " + z + " listed twice");
    std::vector<std::string> e_regs;
    for (const auto& r : rho.registers())
        if (!named.count(r.name)) e_regs.push_back(r.name);

    std::vector<std::string> ze(z_regs);
    ze.insert(ze.end(), e_regs.begin(), e_regs.end());
    std::vector<std::string> yz(y_regs);
    yz.insert(yz.end(), z_regs.begin(), z_regs.end());

    Lemma1Gaps g;
    g.eps1 = trace_distance(rho, markov_project(rho, x_regs, y_regs, ze));
    g.eps2 = trace_distance(rho, markov_project(rho, x_regs, yz, e_regs));
    g.eps_markov = g.eps2;
    g.eps_markov_unif = g.eps2;

    // rest = everything but X, in original register order
    std::vector<std::string> rest;
    std::set<std::string> xset(x_regs.begin(), x_regs.end());
    for (const auto& r : rho.registers())
        if (!xset.count(r.name)) rest.push_back(r.name);

    std::vector<std::string> orig_order;
    for (const auto& r : rho.registers()) orig_order.push_back(r.name);

    CqState rest_state = partial_trace(rho, rest);
    CqState x_marg = partial_trace(rho, x_regs);
    g.eps_prod = trace_distance(rho, reorder(tensor(x_marg, rest_state), orig_order));

    CqState x_unif = x_marg;  // same layout, uniform content
    {
        std::uint64_t space = x_unif.classical_space();
        CqState::BlockMap blocks;
        for (std::uint64_t k = 0; k < space; ++k)
            blocks[k] = Matrix::Constant(1, 1, 1.0 / static_cast<double>(space));
        x_unif = CqState::trusted(x_marg.registers(), std::move(blocks));
    }
    g.eps_unif = trace_distance(rho, reorder(tensor(x_unif, rest_state), orig_order));
    return g;
}

}  // namespace cqsec::cq
