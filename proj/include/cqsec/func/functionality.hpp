#pragma once

#include <string>
#include <vector>

#include "cqsec/cq/ops.hpp"

namespace cqsec::func {

struct Alphabet {
    int size = 1;
    std::vector<std::string> labels;  // empty, or one per code

    std::string label(int code) const {
        if (code >= 0 && code < static_cast<int>(labels.size())) return labels[code];
        return std::to_string(code);
    }
};

// Classical non-reactive two-party ideal functionality: a conditional
// distribution P_{XY|UV} on the extended input domains. Honest parties only
// ever supply codes inside the honest masks; a dishonest party may pick any
// extended code, which is how "more informative" dishonest interfaces are
// encoded (override bit, supplied strings, the bot password, ...).
struct Functionality {
    std::string name = "custom";
    int w_size = 0;  // identification password alphabet, when applicable
    int ell = 0;     // string length, when applicable

    Alphabet u_ext, v_ext, x_out, y_out;
    std::vector<std::uint8_t> u_honest, v_honest;
    // kernel[u * v_ext.size + v] = dense distribution over x * y_out.size + y
    std::vector<std::vector<double>> kernel;

    int u_space() const { return u_ext.size; }
    int v_space() const { return v_ext.size; }
    int x_space() const { return x_out.size; }
    int y_space() const { return y_out.size; }

    bool honest_u(int u) const { return u >= 0 && u < u_space() && u_honest[u]; }
    bool honest_v(int v) const { return v >= 0 && v < v_space() && v_honest[v]; }
    std::vector<int> honest_u_codes() const;
    std::vector<int> honest_v_codes() const;

    const std::vector<double>& row(int u, int v) const;
    double prob(int u, int v, int x, int y) const { return row(u, v)[x * y_space() + y]; }

    // row sums within kNormTol, honest masks sized, alphabets >= 1
    void validate() const;
};

// Joint input distribution for honest-honest runs, dense over the extended
// spaces but supported inside the honest domains.
struct InputDist {
    std::vector<double> p;  // size u_space * v_space

    static InputDist point(const Functionality& f, int u, int v);
    static InputDist uniform_honest(const Functionality& f);
    static InputDist product(const Functionality& f, const std::vector<double>& pu,
                             const std::vector<double>& pv);
    double at(const Functionality& f, int u, int v) const { return p[u * f.v_space() + v]; }
};

// Default input family for "for any distribution" quantifiers: all honest
// point masses plus the uniform honest distribution.
std::vector<InputDist> default_input_family(const Functionality& f);

// One-sided marginals over the extended space, supported on the honest
// domain (used when the other party is dishonest).
std::vector<double> uniform_honest_marginal_u(const Functionality& f);
std::vector<double> uniform_honest_marginal_v(const Functionality& f);

// P_{UVXY}(u,v,x,y) = P_UV(u,v) * P_{XY|UV}(x,y|u,v) as a classical CqState
// over registers (U, V, X, Y). Support of P_UV must lie in the honest
// domains.
cq::CqState eval_functionality(const Functionality& f, const InputDist& dist);

// Same distribution as a CqState built directly from a kernel enumeration
// against explicitly provided registers; helper for embedding targets.
cq::CqState functionality_target_from(const cq::CqState& uv_marginal, const Functionality& f,
                                      const std::string& u_reg, const std::string& v_reg,
                                      const std::string& x_reg, const std::string& y_reg);

}  // namespace cqsec::func
