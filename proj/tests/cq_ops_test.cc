#include "cqsec/cq/ops.hpp"

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "cqsec/cq/random.hpp"

using namespace cqsec;
using namespace cqsec::cq;

namespace {

Matrix scalar(double v) { return Matrix::Constant(1, 1, v); }

Matrix ket_proj(int b, int dim = 2) {
    Matrix m = Matrix::Zero(dim, dim);
    m(b, b) = 1.0;
    return m;
}

// Independent oracle: 1/2 tr|A - B| for explicitly assembled joint matrices.
double dense_trace_distance(const Matrix& a, const Matrix& b) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a - b, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

CqState correlated_bit_pair() {
    // (X, X') uniform on {00, 11}
    return CqState::classical({Register::classical("X", 2), Register::classical("Xp", 2)},
                              {0.5, 0.0, 0.0, 0.5});
}

CqState correlated_bit_qubit() {
    CqState::BlockMap blocks;
    blocks[0] = 0.5 * ket_proj(0);
    blocks[1] = 0.5 * ket_proj(1);
    return CqState::make({Register::classical("X", 2), Register::quantum("E", 2)},
                         std::move(blocks));
}

}  // namespace

TEST(PartialTrace, ProductMarginal) {
    CqState x = uniform_classical("X", 3);
    CqState e = maximally_mixed("E", 2);
    CqState prod = tensor(x, e);
    CqState marg = partial_trace(prod, {"X"});
    EXPECT_NEAR(trace_distance(marg, x), 0.0, 1e-12);
}

TEST(PartialTrace, CorrelatedPairKeepFirstGivesUniform) {
    CqState marg = partial_trace(correlated_bit_pair(), {"X"});
    EXPECT_NEAR(trace_distance(marg, uniform_classical("X", 2)), 0.0, 1e-12);
}

TEST(PartialTrace, RandomThreeRegisterStateStaysNormalized) {
    DetRng rng(11);
    for (int i = 0; i < 25; ++i) {
        CqState st = random_cq_state(rng, {Register::classical("A", 3), Register::quantum("Q", 2),
                                           Register::classical("B", 2)});
        for (auto keep : std::vector<std::vector<std::string>>{{"A"}, {"Q"}, {"A", "B"}, {"B", "Q"}}) {
            CqState m = partial_trace(st, keep);
            EXPECT_NEAR(m.total_trace(), 1.0, 1e-10);
        }
        // direct-summation oracle for the classical marginal on A
        std::vector<double> pa(3, 0.0);
        for (const auto& [key, blk] : st.blocks()) pa[st.decode(key)[0]] += blk.trace().real();
        CqState ma = partial_trace(st, {"A"});
        for (int a = 0; a < 3; ++a) EXPECT_NEAR(ma.probability(a), pa[a], 1e-12);
    }
}

TEST(PartialTrace, UnknownRegisterThrows) {
    EXPECT_THROW(partial_trace(correlated_bit_pair(), {"nope"}), UnknownRegister);
}

TEST(Condition, AlwaysTrueIsIdentity) {
    CqState st = correlated_bit_qubit();
    auto [p, cond] = condition_on_event(st, Event::always());
    EXPECT_NEAR(p, 1.0, 1e-12);
    EXPECT_NEAR(trace_distance(cond, st), 0.0, 1e-12);
}

TEST(Condition, UniformBitOnZero) {
    CqState st = uniform_classical("X", 2);
    auto [p, cond] = condition_on_event(st, Event::equals("X", 0));
    EXPECT_NEAR(p, 0.5, 1e-12);
    EXPECT_NEAR(cond.probability(0), 1.0, 1e-12);
}

TEST(Condition, MixtureComponentRecovered) {
    // p rho0 + (1-p) rho1 keyed by a classical bit; condition on bit = 1
    double p = 0.3;
    CqState::BlockMap blocks;
    blocks[0] = p * ket_proj(0);
    Matrix rho1 = Matrix::Constant(2, 2, 0.5);
    blocks[1] = (1 - p) * rho1;
    CqState st = CqState::make({Register::classical("B", 2), Register::quantum("E", 2)},
                               std::move(blocks));
    auto [q, cond] = condition_on_event(st, Event::equals("B", 1));
    EXPECT_NEAR(q, 1 - p, 1e-12);
    EXPECT_NEAR((cond.blocks().at(1) - rho1).cwiseAbs().maxCoeff(), 0.0, 1e-12);
}

TEST(Condition, ZeroProbabilityEventThrows) {
    CqState st = uniform_classical("X", 2);
    EXPECT_THROW(condition_on_event(st, Event{{"X"}, [](const std::vector<int>&) { return false; }}),
                 ZeroProbabilityEvent);
}

TEST(TraceDistance, IdenticalStatesAtZero) {
    CqState st = correlated_bit_qubit();
    EXPECT_NEAR(trace_distance(st, st), 0.0, 1e-12);
}

TEST(TraceDistance, OrthogonalPureStatesAtOne) {
    CqState::BlockMap b0, b1;
    b0[0] = ket_proj(0);
    b1[0] = ket_proj(1);
    CqState s0 = CqState::make({Register::quantum("Q", 2)}, std::move(b0));
    CqState s1 = CqState::make({Register::quantum("Q", 2)}, std::move(b1));
    EXPECT_NEAR(trace_distance(s0, s1), 1.0, 1e-12);
}

TEST(TraceDistance, CorrelatedPairVsProductOfMarginals) {
    // frozen from the 4x4 eigenvalue oracle below: expected 1/2
    CqState corr = correlated_bit_pair();
    CqState prod = tensor(partial_trace(corr, {"X"}), partial_trace(corr, {"Xp"}));
    double d = trace_distance(corr, prod);

    Matrix a = Matrix::Zero(4, 4), b = Matrix::Zero(4, 4);
    a(0, 0) = a(3, 3) = 0.5;
    for (int i = 0; i < 4; ++i) b(i, i) = 0.25;
    EXPECT_NEAR(dense_trace_distance(a, b), 0.5, 1e-12);
    EXPECT_NEAR(d, 0.5, 1e-12);
}

TEST(TraceDistance, LayoutMismatchThrows) {
    EXPECT_THROW(trace_distance(uniform_classical("X", 2), uniform_classical("Y", 2)),
                 LayoutMismatch);
}

TEST(TraceDistance, ClassicalPartsMatchingDecomposition) {
    // For matching classical parts delta = sum_x P(x) delta(rho^x, sigma^x)
    DetRng rng(3);
    CqState a = random_cq_state(rng, {Register::classical("X", 3), Register::quantum("E", 3)});
    std::vector<double> px = classical_marginal(a, {"X"});
    CqState::BlockMap blocks;
    for (const auto& [k, m] : a.blocks()) blocks[k] = m;  // same classical part
    DetRng rng2(99);
    CqState bq = random_cq_state(rng2, {Register::classical("X", 3), Register::quantum("E", 3)});
    CqState::BlockMap blocks_b;
    for (int x = 0; x < 3; ++x) {
        Matrix m = bq.blocks().count(x) ? bq.blocks().at(x) : Matrix::Zero(3, 3);
        double t = m.trace().real();
        blocks_b[x] = t > 0 ? Matrix((px[x] / t) * m) : m;
    }
    CqState b = CqState::trusted(a.registers(), std::move(blocks_b));
    double direct = trace_distance(a, b);
    double decomposed = 0.0;
    for (int x = 0; x < 3; ++x) {
        Matrix ma = a.blocks().at(x) / px[x];
        Matrix mb = b.blocks().at(x) / px[x];
        decomposed += px[x] * dense_trace_distance(ma, mb);
    }
    EXPECT_NEAR(direct, decomposed, 1e-10);
}

TEST(MarkovProject, EmptyPivotOnProductIsIdentity) {
    CqState prod = tensor(uniform_classical("X", 2), maximally_mixed("E", 2));
    CqState proj = markov_project(prod, {"X"}, {}, {"E"});
    EXPECT_NEAR(trace_distance(proj, prod), 0.0, 1e-12);
}

TEST(MarkovProject, GenuineMarkovStateIsFixedPoint) {
    // X -> Y -> E: Y uniform, X = Y with prob .8, E-state depends on y only
    CqState::BlockMap blocks;
    for (int y = 0; y < 2; ++y)
        for (int x = 0; x < 2; ++x) {
            double p = 0.5 * (x == y ? 0.8 : 0.2);
            std::uint64_t key = static_cast<std::uint64_t>(x) * 2 + y;
            blocks[key] = p * ket_proj(y);
        }
    CqState st = CqState::make({Register::classical("X", 2), Register::classical("Y", 2),
                                Register::quantum("E", 2)},
                               std::move(blocks));
    CqState proj = markov_project(st, {"X"}, {"Y"}, {"E"});
    EXPECT_LE(trace_distance(proj, st), 1e-10);
}

TEST(MarkovProject, CorrelatedBitsTrivialPivotFrozenDistance) {
    // frozen from the brute-force 4x4 oracle: distance 1/2
    CqState st = correlated_bit_qubit();
    CqState proj = markov_project(st, {"X"}, {}, {"E"});

    Matrix rho = Matrix::Zero(4, 4);
    rho(0, 0) = rho(3, 3) = 0.5;  // basis |x> (x) |e>
    Matrix prod = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) prod(i, i) = 0.25;
    EXPECT_NEAR(dense_trace_distance(rho, prod), 0.5, 1e-12);

    CqState expected = tensor(partial_trace(st, {"X"}), partial_trace(st, {"E"}));
    EXPECT_NEAR(trace_distance(proj, expected), 0.0, 1e-12);
    EXPECT_NEAR(trace_distance(st, proj), 0.5, 1e-12);
}

TEST(MarkovProject, IdempotentExactly) {
    DetRng rng(21);
    for (int i = 0; i < 20; ++i) {
        CqState st = random_xyze_state(rng, 3, 3);
        CqState p1 = markov_project(st, {"X"}, {"Y"}, {"Z", "E"});
        CqState p2 = markov_project(p1, {"X"}, {"Y"}, {"Z", "E"});
        EXPECT_LE(trace_distance(p1, p2), 1e-10);
    }
}

TEST(MarkovProject, NonClassicalPivotThrows) {
    CqState st = correlated_bit_qubit();
    EXPECT_THROW(markov_project(st, {"E"}, {}, {"X"}), NonClassicalPivot);
    EXPECT_THROW(markov_project(st, {"X"}, {"E"}, {}), NonClassicalPivot);
    EXPECT_THROW(markov_project(st, {"X"}, {}, {}), PartitionError);
}

TEST(ExtendWithFunction, ConstantGivesPointMass) {
    CqState st = uniform_classical("X", 2);
    CqState ext = extend_with_function(st, {"X"}, Register::classical("C", 3),
                                       [](const std::vector<int>&) { return 0; });
    std::vector<double> pc = classical_marginal(ext, {"C"});
    EXPECT_NEAR(pc[0], 1.0, 1e-12);
}

TEST(ExtendWithFunction, IdentityPerfectlyCorrelated) {
    CqState st = uniform_classical("X", 4);
    CqState ext = extend_with_function(st, {"X"}, Register::classical("X2", 4),
                                       [](const std::vector<int>& a) { return a[0]; });
    std::vector<double> joint = classical_marginal(ext, {"X", "X2"});
    for (int x = 0; x < 4; ++x)
        for (int x2 = 0; x2 < 4; ++x2)
            EXPECT_NEAR(joint[x * 4 + x2], x == x2 ? 0.25 : 0.0, 1e-12);
}

TEST(ExtendWithFunction, XorOfIndependentBitsUniformAndIndependent) {
    // enumeration over the 4 assignments: XOR is uniform and independent of
    // each argument
    CqState st = tensor(uniform_classical("A", 2), uniform_classical("B", 2));
    CqState ext = extend_with_function(st, {"A", "B"}, Register::classical("S", 2),
                                       [](const std::vector<int>& a) { return a[0] ^ a[1]; });
    std::vector<double> ps = classical_marginal(ext, {"S"});
    EXPECT_NEAR(ps[0], 0.5, 1e-12);
    EXPECT_NEAR(ps[1], 0.5, 1e-12);
    std::vector<double> pas = classical_marginal(ext, {"A", "S"});
    for (int a = 0; a < 2; ++a)
        for (int s = 0; s < 2; ++s) EXPECT_NEAR(pas[a * 2 + s], 0.25, 1e-12);
    // marginal on the original registers unchanged
    EXPECT_NEAR(trace_distance(partial_trace(ext, {"A", "B"}), st), 0.0, 1e-12);
}

TEST(ExtendWithFunction, NameCollisionThrows) {
    CqState st = uniform_classical("X", 2);
    EXPECT_THROW(extend_with_function(st, {"X"}, Register::classical("X", 2),
                                      [](const std::vector<int>& a) { return a[0]; }),
                 NameCollision);
}

TEST(Reorder, RoundTripPreservesState) {
    DetRng rng(5);
    CqState st = random_cq_state(rng, {Register::classical("A", 2), Register::quantum("Q1", 2),
                                       Register::classical("B", 3), Register::quantum("Q2", 2)});
    CqState sw = reorder(st, {"Q2", "B", "A", "Q1"});
    CqState back = reorder(sw, {"A", "Q1", "B", "Q2"});
    EXPECT_NEAR(trace_distance(back, st), 0.0, 1e-12);
    EXPECT_NEAR(sw.total_trace(), 1.0, 1e-10);
    // marginals preserved under reorder (kept registers come back in the
    // reordered state's own order, so align first)
    EXPECT_NEAR(trace_distance(reorder(partial_trace(sw, {"A", "B"}), {"A", "B"}),
                               partial_trace(st, {"A", "B"})),
                0.0, 1e-10);
}

TEST(Mix, RecombinesConditionedBranches)  {
    DetRng rng(17);
    CqState st = random_cq_state(rng, {Register::classical("X", 2), Register::quantum("E", 2)});
    auto c0 = condition_on_event(st, Event::equals("X", 0));
    auto c1 = condition_on_event(st, Event::equals("X", 1));
    CqState re = mix({{c0.probability, c0.state}, {c1.probability, c1.state}});
    EXPECT_LE(trace_distance(re, st), 1e-12);
}
