#include "cqsec/func/functionality.hpp"

#include <cmath>

namespace cqsec::func {

std::vector<int> Functionality::honest_u_codes() const {
    std::vector<int> out;
    for (int u = 0; u < u_space(); ++u)
        if (u_honest[u]) out.push_back(u);
    return out;
}

std::vector<int> Functionality::honest_v_codes() const {
    std::vector<int> out;
    for (int v = 0; v < v_space(); ++v)
        if (v_honest[v]) out.push_back(v);
    return out;
}

const std::vector<double>& Functionality::row(int u, int v) const {
    if (u < 0 || u >= u_space() || v < 0 || v >= v_space())
        throw DomainViolation("input (" + std::to_string(u) + "," + std::to_string(v) +
                              ") outside extended domains of " + name);
    return kernel[static_cast<std::size_t>(u) * v_space() + v];
}

void Functionality::validate() const {
    if (u_ext.size < 1 || v_ext.size < 1 || x_out.size < 1 || y_out.size < 1)
        throw DomainViolation(name + ": empty alphabet");
    if (static_cast<int>(u_honest.size()) != u_space() ||
        static_cast<int>(v_honest.size()) != v_space())
        throw DomainViolation(name + ": honest masks sized wrong");
    bool have_u = false, have_v = false;
    for (auto b : u_honest) have_u |= (b != 0);
    for (auto b : v_honest) have_v |= (b != 0);
    if (!have_u || !have_v) throw DomainViolation(name + ": empty honest domain");
    if (kernel.size() != static_cast<std::size_t>(u_space()) * v_space())
        throw DomainViolation(name + ": kernel has wrong row count");
    for (std::size_t r = 0; r < kernel.size(); ++r) {
        if (kernel[r].size() != static_cast<std::size_t>(x_space()) * y_space())
            throw DomainViolation(name + ": kernel row " + std::to_string(r) + " sized wrong");
        double sum = 0.0;
        for (double q : kernel[r]) {
            if (q < 0.0) throw DomainViolation(name + ": negative kernel entry");
            sum += q;
        }
        if (std::abs(sum - 1.0) > cq::kNormTol)
            throw DomainViolation(name + ": kernel row " + std::to_string(r) + " sums to " +
                                  std::to_string(sum));
    }
}

InputDist InputDist::point(const Functionality& f, int u, int v) {
    if (!f.honest_u(u) || !f.honest_v(v))
        throw DomainViolation("point input outside honest domains");
    InputDist d;
    d.p.assign(static_cast<std::size_t>(f.u_space()) * f.v_space(), 0.0);
    d.p[static_cast<std::size_t>(u) * f.v_space() + v] = 1.0;
    return d;
}

InputDist InputDist::uniform_honest(const Functionality& f) {
    auto us = f.honest_u_codes();
    auto vs = f.honest_v_codes();
    InputDist d;
    d.p.assign(static_cast<std::size_t>(f.u_space()) * f.v_space(), 0.0);
    double w = 1.0 / (static_cast<double>(us.size()) * vs.size());
    for (int u : us)
        for (int v : vs) d.p[static_cast<std::size_t>(u) * f.v_space() + v] = w;
    return d;
}

InputDist InputDist::product(const Functionality& f, const std::vector<double>& pu,
                             const std::vector<double>& pv) {
    if (static_cast<int>(pu.size()) != f.u_space() || static_cast<int>(pv.size()) != f.v_space())
        throw DomainViolation("marginal sized wrong");
    InputDist d;
    d.p.assign(static_cast<std::size_t>(f.u_space()) * f.v_space(), 0.0);
    for (int u = 0; u < f.u_space(); ++u)
        for (int v = 0; v < f.v_space(); ++v) {
            double w = pu[u] * pv[v];
            if (w == 0.0) continue;
            if (!f.honest_u(u) || !f.honest_v(v))
                throw DomainViolation("product input outside honest domains");
            d.p[static_cast<std::size_t>(u) * f.v_space() + v] = w;
        }
    return d;
}

std::vector<InputDist> default_input_family(const Functionality& f) {
    std::vector<InputDist> family;
    for (int u : f.honest_u_codes())
        for (int v : f.honest_v_codes()) family.push_back(InputDist::point(f, u, v));
    family.push_back(InputDist::uniform_honest(f));
    return family;
}

std::vector<double> uniform_honest_marginal_u(const Functionality& f) {
    std::vector<double> p(f.u_space(), 0.0);
    auto us = f.honest_u_codes();
    for (int u : us) p[u] = 1.0 / us.size();
    return p;
}

std::vector<double> uniform_honest_marginal_v(const Functionality& f) {
    std::vector<double> p(f.v_space(), 0.0);
    auto vs = f.honest_v_codes();
    for (int v : vs) p[v] = 1.0 / vs.size();
    return p;
}

cq::CqState eval_functionality(const Functionality& f, const InputDist& dist) {
    if (dist.p.size() != static_cast<std::size_t>(f.u_space()) * f.v_space())
        throw DomainViolation("input distribution sized wrong");
    cq::CqState::BlockMap blocks;
    for (int u = 0; u < f.u_space(); ++u)
        for (int v = 0; v < f.v_space(); ++v) {
            double puv = dist.p[static_cast<std::size_t>(u) * f.v_space() + v];
            if (puv < cq::kPruneTol) continue;
            if (!f.honest_u(u) || !f.honest_v(v))
                throw DomainViolation("honest input support outside honest domain of " + f.name);
            const auto& r = f.row(u, v);
            for (int x = 0; x < f.x_space(); ++x)
                for (int y = 0; y < f.y_space(); ++y) {
                    double q = puv * r[x * f.y_space() + y];
                    if (q < cq::kPruneTol) continue;
                    std::uint64_t key =
                        ((static_cast<std::uint64_t>(u) * f.v_space() + v) * f.x_space() + x) *
                            f.y_space() +
                        y;
                    blocks[key] = cq::Matrix::Constant(1, 1, q);
                }
        }
    return cq::CqState::trusted(
        {cq::Register::classical("U", f.u_space()), cq::Register::classical("V", f.v_space()),
         cq::Register::classical("X", f.x_space()), cq::Register::classical("Y", f.y_space())},
        std::move(blocks));
}

cq::CqState functionality_target_from(const cq::CqState& uv_marginal, const Functionality& f,
                                      const std::string& u_reg, const std::string& v_reg,
                                      const std::string& x_reg, const std::string& y_reg) {
    return cq::extend_with_kernel(
        uv_marginal, {u_reg, v_reg},
        {cq::Register::classical(x_reg, f.x_space()), cq::Register::classical(y_reg, f.y_space())},
        [&f](const std::vector<int>& a) { return f.row(a[0], a[1]); });
}

}  // namespace cqsec::func
