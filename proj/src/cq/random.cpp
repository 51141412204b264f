#include "cqsec/cq/random.hpp"

#include <cmath>

namespace cqsec {

double DetRng::next_gaussian() {
    double u1 = next_double(), u2 = next_double();
    while (u1 <= 1e-300) u1 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::vector<double> DetRng::next_distribution(int n) {
    std::vector<double> p(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        p[i] = -std::log(1.0 - next_double());
        sum += p[i];
    }
    for (double& x : p) x /= sum;
    return p;
}

}  // namespace cqsec

namespace cqsec::cq {

namespace {

Matrix random_psd(DetRng& rng, int dim) {
    if (dim == 1) return Matrix::Constant(1, 1, 1.0);
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.next_gaussian(), rng.next_gaussian());
    Matrix m = g * g.adjoint();
    return m / m.trace().real();
}

}  // namespace

CqState random_cq_state(DetRng& rng, const std::vector<Register>& regs) {
    std::uint64_t space = 1;
    int qdim = 1;
    for (const auto& r : regs) {
        if (r.kind == Register::Kind::classical)
            space *= static_cast<std::uint64_t>(r.size);
        else
            qdim *= r.size;
    }
    std::vector<double> weights = rng.next_distribution(static_cast<int>(space));
    CqState::BlockMap blocks;
    for (std::uint64_t k = 0; k < space; ++k)
        blocks[k] = weights[k] * random_psd(rng, qdim);
    return CqState::trusted(regs, std::move(blocks));
}

CqState random_xyze_state(DetRng& rng, int max_cls, int max_qdim) {
    int nx = 2 + rng.next_int(max_cls - 1);
    int ny = 2 + rng.next_int(max_cls - 1);
    int nz = 2 + rng.next_int(max_cls - 1);
    int nq = 2 + rng.next_int(max_qdim - 1);
    return random_cq_state(rng, {Register::classical("X", nx), Register::classical("Y", ny),
                                 Register::classical("Z", nz), Register::quantum("E", nq)});
}

}  // namespace cqsec::cq
