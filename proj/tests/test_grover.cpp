#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "qsearch/grover.hpp"
#include "qsearch/vrotor.hpp"

using namespace qsearch;

TEST(SearchSpec, ExhaustiveCouplingIsOneOverRootN) {
  for (int n = 1; n <= 10; ++n) {
    for (std::size_t t = 0; t < (std::size_t{1} << n); ++t) {
      EXPECT_NEAR(SearchSpec::exhaustive(n, t).coupling().value(), 1.0 / std::sqrt(std::ldexp(1.0, n)), 1e-12);
    }
  }
}

TEST(SearchSpec, Validation) {
  EXPECT_THROW(SearchSpec::exhaustive(3, 8), InvalidArgument);
  EXPECT_THROW(SearchSpec::exhaustive(3, 1, 0.0), InvalidArgument);
  EXPECT_THROW(SearchSpec(3, 0, UnitaryOp::walsh_hadamard(2), StateVector::basis(3, 0)), InvalidArgument);
}

TEST(Grover, SuccessFollowsClosedForm) {
  // Oracle: P_k = sin^2((2k + 1) asin(u)).
  for (int n = 2; n <= 10; ++n) {
    const SearchSpec spec = SearchSpec::exhaustive(n, (std::size_t{1} << n) / 3);
    const IterationTrace tr = run_grover(spec, 40, 2.0);
    const double th = std::asin(spec.coupling().value());
    for (const auto& r : tr.records) {
      const double s = std::sin((2 * r.step + 1) * th);
      EXPECT_NEAR(r.success_prob, s * s, 1e-11) << "n=" << n << " step=" << r.step;
    }
  }
}

TEST(Grover, FrozenFirstPassage) {
  // Independent oracle (dense numpy simulation), threshold 1/2, target 0.
  const std::vector<int> expected{1, 1, 2, 2, 3, 4, 6, 9, 13, 18, 25};
  for (int n = 2; n <= 12; ++n) {
    EXPECT_EQ(grover_first_passage(n, 0.5), expected[static_cast<std::size_t>(n - 2)]) << "n=" << n;
  }
  const auto tr = run_grover(SearchSpec::exhaustive(10, 37), 100);
  ASSERT_TRUE(tr.first_passage);
  EXPECT_EQ(*tr.first_passage, 13);
}

TEST(Grover, FourStatesSolvedInOneStep) {
  const IterationTrace tr = run_grover(SearchSpec::exhaustive(2, 3), 5);
  ASSERT_EQ(tr.first_passage, 1);
  EXPECT_NEAR(tr.records[1].success_prob, 1.0, 1e-14);
}

TEST(Grover, NormPreservedOverManyApplications) {
  const SearchSpec spec = SearchSpec::haar(6, 9, 4);
  const UnitaryOp q = grover_operator(spec);
  StateVector psi = spec.initial();
  for (int k = 0; k < 1000; ++k) psi = apply(q, psi);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
}

TEST(Grover, TwoReflectionStructure) {
  const int n = 5;
  const SearchSpec spec = SearchSpec::haar(n, 3, 21);
  const UnitaryOp q = grover_operator(spec);
  const SubspaceFrame frame = make_frame(spec.initial(), spec.pulled_back_target());
  Eigen::Matrix2cd block;
  const StateVector* basis[2] = {&frame.e0, &frame.e1};
  for (int j = 0; j < 2; ++j) {
    const StateVector col = apply(q, *basis[j]);
    for (int i = 0; i < 2; ++i) block(i, j) = inner_product(*basis[i], col);
  }
  EXPECT_NEAR(std::abs(block.determinant() - Complex(1.0, 0.0)), 0.0, 1e-11);
  for (std::uint64_t s = 1; s <= 5; ++s) {
    Eigen::VectorXcd v = StateVector::random(n, s).amplitudes();
    v -= frame.e0.amplitudes().dot(v) * frame.e0.amplitudes();
    v -= frame.e1.amplitudes().dot(v) * frame.e1.amplitudes();
    const StateVector w = StateVector::normalized(v);
    EXPECT_LT((apply(q, w).amplitudes() + w.amplitudes()).cwiseAbs().maxCoeff(), 1e-11);
  }
}

TEST(Grover, MonotoneApproach) {
  for (int n = 3; n <= 12; ++n) {
    const double limit = kPi / 4.0 * std::sqrt(std::ldexp(1.0, n)) - 1.0;
    const IterationTrace tr = run_grover(SearchSpec::exhaustive(n, 1), static_cast<int>(limit) + 1, 2.0);
    for (std::size_t k = 1; k < tr.records.size() && tr.records[k].step < limit; ++k) {
      EXPECT_GT(tr.records[k].success_prob, tr.records[k - 1].success_prob) << "n=" << n << " step=" << k;
    }
  }
}

TEST(Grover, TraceGeometryConsistent) {
  const IterationTrace tr = run_grover(SearchSpec::haar(4, 2, 8), 60, 2.0);
  for (const auto& r : tr.records) {
    EXPECT_NEAR(r.fs_from_initial, 2.0 * std::sin(r.bargmann_from_initial / 2.0), 1e-12);
    EXPECT_NEAR(r.success_prob, r.overlap_with_target * r.overlap_with_target, 1e-15);
  }
}

TEST(Grover, EstimateWithinFactorTwo) {
  for (int n = 4; n <= 12; ++n) {
    const double est = grover_step_estimate(OverlapMagnitude(std::pow(2.0, -0.5 * n))).steps;
    const int s = *grover_first_passage(n, 0.5);
    EXPECT_LE(est / s, 2.0);
    EXPECT_GE(est / s, 0.5);
  }
}

TEST(Grover, ZeroCouplingIsDegenerate) {
  // Prep = identity with psi_i = |0>, target |1>: no overlap at all.
  const SearchSpec spec(2, 1, UnitaryOp::identity(), StateVector::basis(2, 0));
  EXPECT_THROW(run_grover(spec, 10), DegenerateProblem);
}

TEST(Slippage, FourStatesReturnAtStepThree) {
  const IterationTrace tr = run_grover(SearchSpec::exhaustive(2, 3), 6, 2.0);
  EXPECT_EQ(detect_slippage(tr), 3);
  EXPECT_GE(tr.records[3].overlap_with_initial, 1.0 - 1e-10);
}

TEST(Slippage, PeriodMatchesRotationAngle) {
  // u = sin(pi/10): Q rotates by 2 asin(u) = pi/5 per step, so the ray returns after 5.
  const double u = std::sin(kPi / 10.0);
  Eigen::VectorXcd psi_f = Eigen::VectorXcd::Zero(4);
  psi_f(0) = u;
  psi_f(1) = std::sqrt(1.0 - u * u);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
  m.block(0, 0, 2, 2) << psi_f(0), -psi_f(1), psi_f(1), psi_f(0);
  const SearchSpec spec(2, 0, UnitaryOp::dense(m.adjoint()), StateVector::basis(2, 0));
  EXPECT_NEAR(spec.coupling().value(), u, 1e-14);
  const IterationTrace tr = run_grover(spec, 12, 2.0);
  EXPECT_EQ(detect_slippage(tr), 5);
}

TEST(Slippage, RejectsLooseTolerance) {
  const IterationTrace tr = run_grover(SearchSpec::exhaustive(2, 3), 4, 2.0);
  EXPECT_THROW(detect_slippage(tr, 1e-3), InvalidArgument);
  EXPECT_THROW(detect_slippage(tr, 0.0), InvalidArgument);
}
