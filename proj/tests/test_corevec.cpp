#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qsearch/corevec.hpp"

using namespace qsearch;

namespace {

double max_abs_diff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(StateVector, FactoriesAreNormalized) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_NEAR(StateVector::basis(n, (std::size_t{1} << n) - 1).norm(), 1.0, 1e-15);
    EXPECT_NEAR(StateVector::uniform(n).norm(), 1.0, 1e-14);
    EXPECT_NEAR(StateVector::random(n, 17 + n).norm(), 1.0, 1e-14);
  }
}

TEST(StateVector, RejectsBadInput) {
  EXPECT_THROW(StateVector::from_amplitudes(Eigen::VectorXcd::Ones(3) / std::sqrt(3.0)), InvalidArgument);
  EXPECT_THROW(StateVector::from_amplitudes(Eigen::VectorXcd::Ones(4)), InvalidArgument);
  EXPECT_THROW(StateVector::basis(2, 4), InvalidArgument);
  EXPECT_THROW(StateVector::normalized(Eigen::VectorXcd::Zero(4)), InvalidArgument);
}

TEST(StateVector, RandomIsSeeded) {
  EXPECT_EQ(max_abs_diff(StateVector::random(5, 3).amplitudes(), StateVector::random(5, 3).amplitudes()), 0.0);
  EXPECT_GT(max_abs_diff(StateVector::random(5, 3).amplitudes(), StateVector::random(5, 4).amplitudes()), 1e-3);
}

TEST(WalshHadamard, ZeroStateGoesToUniform) {
  for (int n = 1; n <= 12; ++n) {
    const StateVector w = walsh_hadamard(StateVector::basis(n, 0));
    const double amp = 1.0 / std::sqrt(std::ldexp(1.0, n));
    for (std::size_t k = 0; k < w.dim(); ++k) EXPECT_NEAR(std::abs(w[k] - Complex(amp, 0.0)), 0.0, 1e-12);
  }
}

TEST(WalshHadamard, MatchesKroneckerProduct) {
  // Oracle: explicit H (x) H (x) H built by tensor products.
  Eigen::MatrixXcd h1(2, 2);
  h1 << 1, 1, 1, -1;
  h1 /= std::sqrt(2.0);
  Eigen::MatrixXcd h = h1;
  for (int k = 1; k < 3; ++k) {
    Eigen::MatrixXcd next(h.rows() * 2, h.cols() * 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) next.block(i * h.rows(), j * h.cols(), h.rows(), h.cols()) = h1(i, j) * h;
    h = next;
  }
  const StateVector v = StateVector::random(3, 99);
  EXPECT_LT(max_abs_diff(walsh_hadamard(v).amplitudes(), h * v.amplitudes()), 1e-14);
}

TEST(WalshHadamard, InvolutionOnRandomVectors) {
  for (int n = 1; n <= 12; ++n) {
    const StateVector v = StateVector::random(n, 1000 + n);
    EXPECT_LT(max_abs_diff(walsh_hadamard(walsh_hadamard(v)).amplitudes(), v.amplitudes()), 1e-12) << "n=" << n;
  }
}

TEST(UnitaryOp, NormPreservedForEveryVariant) {
  const int n = 4;
  const StateVector v = StateVector::random(n, 5);
  const StateVector phi = StateVector::random(n, 6);
  const SubspaceFrame frame = make_frame(StateVector::basis(n, 0), phi);
  Eigen::Matrix2cd g;
  g << 0.3, Complex(0.1, -0.2), Complex(0.1, 0.2), -0.7;
  const std::vector<UnitaryOp> ops{
      UnitaryOp::walsh_hadamard(n),
      UnitaryOp::selective_inversion(phi),
      UnitaryOp::scalar(std::polar(1.0, 0.4)),
      haar_random_unitary(16, 11),
      two_plane_rotation(frame, g, 1.3),
      UnitaryOp::composition({haar_random_unitary(16, 12), UnitaryOp::walsh_hadamard(n)}),
      UnitaryOp::identity(),
  };
  for (const auto& u : ops) {
    EXPECT_NEAR(apply(u, v).norm(), 1.0, 1e-12);
    EXPECT_LT(max_abs_diff(apply(u.adjoint(), apply(u, v)).amplitudes(), v.amplitudes()), 1e-12);
  }
}

TEST(UnitaryOp, CompositionAppliesRightmostFirst) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const UnitaryOp a = haar_random_unitary(8, seed);
    const UnitaryOp b = haar_random_unitary(8, seed + 100);
    const StateVector v = StateVector::random(3, seed + 200);
    const StateVector lhs = apply(UnitaryOp::composition({a, b}), v);
    const StateVector rhs = apply(a, apply(b, v));
    EXPECT_LT(max_abs_diff(lhs.amplitudes(), rhs.amplitudes()), 1e-12);
  }
}

TEST(UnitaryOp, AdjointInvertsComposition) {
  const UnitaryOp u = UnitaryOp::composition(
      {haar_random_unitary(8, 1), UnitaryOp::walsh_hadamard(3), UnitaryOp::selective_inversion(StateVector::random(3, 2))});
  const Eigen::MatrixXcd m = to_dense(u, 8);
  const Eigen::MatrixXcd md = to_dense(u.adjoint(), 8);
  EXPECT_LT((md - m.adjoint()).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(UnitaryOp, SelectiveInversionIsReflection) {
  const StateVector phi = StateVector::random(3, 8);
  const Eigen::MatrixXcd m = to_dense(UnitaryOp::selective_inversion(phi), 8);
  const Eigen::MatrixXcd expect =
      Eigen::MatrixXcd::Identity(8, 8) - 2.0 * phi.amplitudes() * phi.amplitudes().adjoint();
  EXPECT_LT((m - expect).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(UnitaryOp, DenseRejectsNonUnitary) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
  m(0, 1) = 1e-6;
  EXPECT_THROW(UnitaryOp::dense(m), InvalidArgument);
  EXPECT_THROW(UnitaryOp::dense(Eigen::MatrixXcd::Identity(3, 3)), InvalidArgument);
}

TEST(UnitaryOp, DimensionMismatchThrows) {
  EXPECT_THROW(apply(UnitaryOp::walsh_hadamard(3), StateVector::basis(2, 0)), InvalidArgument);
  EXPECT_THROW(UnitaryOp::composition({UnitaryOp::walsh_hadamard(3), haar_random_unitary(4, 1)}), InvalidArgument);
}

TEST(HaarUnitary, UnitaryAndSeeded) {
  for (std::size_t dim : {2u, 8u, 64u}) {
    const Eigen::MatrixXcd m = to_dense(haar_random_unitary(dim, 42), dim);
    EXPECT_LT(UnitaryOp::unitarity_defect(m), 1e-12);
    EXPECT_EQ((m - to_dense(haar_random_unitary(dim, 42), dim)).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(HaarUnitary, FirstMomentsLookHaar) {
  // E|U_00|^2 = 1/d and E|U_00|^4 = 2/(d(d+1)) under Haar measure.
  const std::size_t d = 4;
  const int samples = 4000;
  double m2 = 0.0, m4 = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Eigen::MatrixXcd u = to_dense(haar_random_unitary(d, static_cast<std::uint64_t>(s) + 1), d);
    const double a = std::norm(u(0, 0));
    m2 += a;
    m4 += a * a;
  }
  m2 /= samples;
  m4 /= samples;
  EXPECT_NEAR(m2, 0.25, 0.01);
  EXPECT_NEAR(m4, 0.1, 0.01);
}

TEST(SubspaceFrame, ReconstructsPulledBackTarget) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const StateVector a = StateVector::random(5, seed);
    const StateVector b = StateVector::random(5, seed + 50);
    const SubspaceFrame f = make_frame(a, b);
    EXPECT_NEAR(std::abs(inner_product(f.e0, f.e1)), 0.0, 1e-14);
    EXPECT_NEAR(f.e1.norm(), 1.0, 1e-14);
    const Eigen::VectorXcd rebuilt = f.overlap_c * f.e0.amplitudes() + f.orthogonal_weight() * f.e1.amplitudes();
    EXPECT_LT(max_abs_diff(rebuilt, b.amplitudes()), 1e-12);
  }
}

TEST(SubspaceFrame, SameRayIsDegenerate) {
  const StateVector a = StateVector::random(3, 1);
  EXPECT_THROW(make_frame(a, a.with_phase(std::polar(1.0, 0.7))), DegenerateProblem);
}

TEST(TwoPlaneRotation, ActsAsIdentityOnComplement) {
  const int n = 4;
  const SubspaceFrame frame = make_frame(StateVector::basis(n, 0), StateVector::random(n, 3));
  Eigen::Matrix2cd g;
  g << 1.0, 0.5, 0.5, 0.0;
  const UnitaryOp r = two_plane_rotation(frame, g, 0.9);
  Eigen::VectorXcd v = StateVector::random(n, 9).amplitudes();
  v -= frame.e0.amplitudes().dot(v) * frame.e0.amplitudes();
  v -= frame.e1.amplitudes().dot(v) * frame.e1.amplitudes();
  const StateVector w = StateVector::normalized(v);
  EXPECT_LT(max_abs_diff(apply(r, w).amplitudes(), w.amplitudes()), 1e-12);
}

TEST(TwoPlaneRotation, RejectsNonHermitianGenerator) {
  const SubspaceFrame frame = make_frame(StateVector::basis(2, 0), StateVector::basis(2, 1));
  Eigen::Matrix2cd g;
  g << 0.0, 1.0, 0.0, 0.0;
  EXPECT_THROW(two_plane_rotation(frame, g, 1.0), InvalidArgument);
}
