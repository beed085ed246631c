// corevec.hpp
// State vectors over 2^n basis states, tagged unitary operators and the
// two-dimensional subspace frame shared by both search engines.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "qsearch/errors.hpp"

namespace qsearch {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Norm tolerance every constructor and application must honour.
inline constexpr double kNormTolerance = 1e-12;
// Unitarity tolerance for dense matrices, checked at construction.
inline constexpr double kUnitarityTolerance = 1e-10;

namespace detail {
struct unchecked_t {
  explicit unchecked_t() = default;
};
inline constexpr unchecked_t unchecked{};

inline bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

// Search exponent p, valid in (0, 1].
inline void require_exponent(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("exponent p must lie in (0, 1], got " + std::to_string(p));
}

inline int log2_exact(std::size_t v) {
  int n = 0;
  while ((std::size_t{1} << n) < v) ++n;
  return n;
}
}  // namespace detail

// Normalized register state. Stored as a vector, not a ray: no global phase
// is canonicalised.
class StateVector {
 public:
  // Takes ownership of `amps`; rejects lengths that are not 2^n (n >= 1) and
  // vectors whose norm is off by more than kNormTolerance.
  static StateVector from_amplitudes(Eigen::VectorXcd amps) {
    check_length(static_cast<std::size_t>(amps.size()));
    const double norm = amps.norm();
    if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
      throw InvalidArgument("state vector is not normalized (norm " + std::to_string(norm) + ")");
    }
    return StateVector(detail::unchecked, std::move(amps));
  }

  // Rescales `amps` to unit norm. Zero vectors are rejected.
  static StateVector normalized(Eigen::VectorXcd amps) {
    check_length(static_cast<std::size_t>(amps.size()));
    const double norm = amps.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidArgument("cannot normalize a zero or non-finite vector");
    amps /= norm;
    return StateVector(detail::unchecked, std::move(amps));
  }

  static StateVector basis(int n_qubits, std::size_t index) {
    check_qubits(n_qubits);
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (index >= dim) throw InvalidArgument("basis index " + std::to_string(index) + " out of range");
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    amps[static_cast<Eigen::Index>(index)] = 1.0;
    return StateVector(detail::unchecked, std::move(amps));
  }

  static StateVector uniform(int n_qubits) {
    check_qubits(n_qubits);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Constant(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
    return StateVector(detail::unchecked, std::move(amps));
  }

  // Gaussian-distributed direction; uniform on the unit sphere.
  static StateVector random(int n_qubits, std::uint64_t seed) {
    check_qubits(n_qubits);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd amps(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      amps[k] = Complex(re, im);
    }
    return normalized(std::move(amps));
  }

  // Results of exact unitary arithmetic; the caller vouches for the norm.
  StateVector(detail::unchecked_t, Eigen::VectorXcd amps)
      : n_qubits_(detail::log2_exact(static_cast<std::size_t>(amps.size()))), amps_(std::move(amps)) {}

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Complex operator[](std::size_t k) const { return amps_[static_cast<Eigen::Index>(k)]; }
  double norm() const { return amps_.norm(); }

  StateVector with_phase(Complex phase) const {
    return StateVector(detail::unchecked, Eigen::VectorXcd(amps_ * phase));
  }

 private:
  static void check_qubits(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 30) throw InvalidArgument("n_qubits must lie in [1, 30]");
  }
  static void check_length(std::size_t len) {
    if (len < 2 || !detail::is_power_of_two(len)) {
      throw InvalidArgument("state length " + std::to_string(len) + " is not 2^n with n >= 1");
    }
  }

  int n_qubits_;
  Eigen::VectorXcd amps_;
};

inline void require_same_dim(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

// <a|b>, antilinear in the first argument.
inline Complex inner_product(const StateVector& a, const StateVector& b) {
  require_same_dim(a, b);
  return a.amplitudes().dot(b.amplitudes());
}

// In-place H^{(x)n} butterfly; `v.size()` must be a power of two.
inline void walsh_hadamard_inplace(Eigen::VectorXcd& v) {
  const Eigen::Index n = v.size();
  for (Eigen::Index half = 1; half < n; half <<= 1) {
    for (Eigen::Index base = 0; base < n; base += 2 * half) {
      for (Eigen::Index i = base; i < base + half; ++i) {
        const Complex a = v[i];
        const Complex b = v[i + half];
        v[i] = a + b;
        v[i + half] = a - b;
      }
    }
  }
  v *= 1.0 / std::sqrt(static_cast<double>(n));
}

inline StateVector walsh_hadamard(const StateVector& v) {
  Eigen::VectorXcd out = v.amplitudes();
  walsh_hadamard_inplace(out);
  return StateVector(detail::unchecked, std::move(out));
}

// Orthonormal pair spanning {psi_i, psi_f'} with psi_f' = c e0 + sqrt(1-|c|^2) e1.
struct SubspaceFrame {
  StateVector e0;
  StateVector e1;
  Complex overlap_c;  // <psi_i|psi_f'>

  // Real, non-negative coefficient of psi_f' on e1.
  double orthogonal_weight() const { return std::sqrt(std::max(0.0, 1.0 - std::norm(overlap_c))); }
};

inline SubspaceFrame make_frame(const StateVector& psi_i, const StateVector& psi_f_prime) {
  require_same_dim(psi_i, psi_f_prime);
  const Complex c = inner_product(psi_i, psi_f_prime);
  if (std::abs(c) >= 1.0 - 1e-12) {
    throw DegenerateProblem("initial and target states lie on the same ray; nothing to search");
  }
  Eigen::VectorXcd perp = psi_f_prime.amplitudes() - c * psi_i.amplitudes();
  // Re-orthogonalise once; near-parallel inputs lose digits in a single pass.
  perp -= psi_i.amplitudes().dot(perp) * psi_i.amplitudes();
  perp /= perp.norm();
  return SubspaceFrame{psi_i, StateVector(detail::unchecked, std::move(perp)), c};
}

class UnitaryOp;

struct DenseUnitary {
  std::shared_ptr<const Eigen::MatrixXcd> matrix;
};

struct WalshHadamardOp {
  int n_qubits;
};

// 1 - 2|target><target|
struct SelectiveInversion {
  StateVector target;
};

// Acts as `block` on span(frame.e0, frame.e1) and as the identity elsewhere.
struct TwoPlaneRotation {
  SubspaceFrame frame;
  Eigen::Matrix2cd block;
};

// Product of `factors` as written: the rightmost factor is applied first.
struct Composition {
  std::vector<UnitaryOp> factors;
};

struct ScalarPhase {
  Complex phase;
};

class UnitaryOp {
 public:
  using Variant = std::variant<DenseUnitary, WalshHadamardOp, SelectiveInversion, TwoPlaneRotation, Composition, ScalarPhase>;

  static UnitaryOp dense(Eigen::MatrixXcd m) {
    const auto rows = static_cast<std::size_t>(m.rows());
    if (m.rows() != m.cols() || rows < 2 || !detail::is_power_of_two(rows)) {
      throw InvalidArgument("dense unitary must be square with power-of-two dimension");
    }
    const double defect = unitarity_defect(m);
    if (!(defect <= kUnitarityTolerance)) {
      throw InvalidArgument("matrix is not unitary (max |U^dag U - I| = " + std::to_string(defect) + ")");
    }
    return UnitaryOp(DenseUnitary{std::make_shared<const Eigen::MatrixXcd>(std::move(m))});
  }

  static UnitaryOp walsh_hadamard(int n_qubits) {
    if (n_qubits < 1) throw InvalidArgument("Walsh-Hadamard needs n_qubits >= 1");
    return UnitaryOp(WalshHadamardOp{n_qubits});
  }

  static UnitaryOp selective_inversion(StateVector target) { return UnitaryOp(SelectiveInversion{std::move(target)}); }

  static UnitaryOp scalar(Complex phase) {
    if (std::abs(std::abs(phase) - 1.0) > kNormTolerance) throw InvalidArgument("scalar phase must have unit modulus");
    return UnitaryOp(ScalarPhase{phase});
  }

  static UnitaryOp composition(std::vector<UnitaryOp> factors) {
    std::optional<std::size_t> dim;
    for (const auto& f : factors) {
      if (auto d = f.dim()) {
        if (dim && *dim != *d) throw InvalidArgument("composition factors disagree on dimension");
        dim = d;
      }
    }
    return UnitaryOp(Composition{std::move(factors)});
  }

  static UnitaryOp two_plane(SubspaceFrame frame, Eigen::Matrix2cd block) {
    return UnitaryOp(TwoPlaneRotation{std::move(frame), block});
  }

  static UnitaryOp identity() { return scalar(Complex(1.0, 0.0)); }

  // Dimension the operator acts on; empty for dimension-free scalars.
  std::optional<std::size_t> dim() const {
    return std::visit(
        [](const auto& op) -> std::optional<std::size_t> {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, DenseUnitary>) {
            return static_cast<std::size_t>(op.matrix->rows());
          } else if constexpr (std::is_same_v<T, WalshHadamardOp>) {
            return std::size_t{1} << op.n_qubits;
          } else if constexpr (std::is_same_v<T, SelectiveInversion>) {
            return op.target.dim();
          } else if constexpr (std::is_same_v<T, TwoPlaneRotation>) {
            return op.frame.e0.dim();
          } else if constexpr (std::is_same_v<T, Composition>) {
            for (const auto& f : op.factors)
              if (auto d = f.dim()) return d;
            return std::nullopt;
          } else {
            return std::nullopt;
          }
        },
        v_);
  }

  UnitaryOp adjoint() const {
    return std::visit(
        [](const auto& op) -> UnitaryOp {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, DenseUnitary>) {
            return UnitaryOp(DenseUnitary{std::make_shared<const Eigen::MatrixXcd>(op.matrix->adjoint())});
          } else if constexpr (std::is_same_v<T, WalshHadamardOp> || std::is_same_v<T, SelectiveInversion>) {
            return UnitaryOp(op);
          } else if constexpr (std::is_same_v<T, TwoPlaneRotation>) {
            return UnitaryOp(TwoPlaneRotation{op.frame, op.block.adjoint()});
          } else if constexpr (std::is_same_v<T, Composition>) {
            std::vector<UnitaryOp> rev;
            rev.reserve(op.factors.size());
            for (auto it = op.factors.rbegin(); it != op.factors.rend(); ++it) rev.push_back(it->adjoint());
            return UnitaryOp(Composition{std::move(rev)});
          } else {
            return UnitaryOp(ScalarPhase{std::conj(op.phase)});
          }
        },
        v_);
  }

  const Variant& variant() const { return v_; }

  static double unitarity_defect(const Eigen::MatrixXcd& m) {
    const Eigen::MatrixXcd gram = m.adjoint() * m;
    return (gram - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
  }

 private:
  explicit UnitaryOp(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

namespace detail {

inline void apply_inplace(const UnitaryOp& u, Eigen::VectorXcd& v) {
  std::visit(
      [&v](const auto& op) {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, DenseUnitary>) {
          v = (*op.matrix) * v;
        } else if constexpr (std::is_same_v<T, WalshHadamardOp>) {
          walsh_hadamard_inplace(v);
        } else if constexpr (std::is_same_v<T, SelectiveInversion>) {
          const Eigen::VectorXcd& t = op.target.amplitudes();
          const Complex proj = t.dot(v);
          v -= 2.0 * proj * t;
        } else if constexpr (std::is_same_v<T, TwoPlaneRotation>) {
          const Eigen::VectorXcd& e0 = op.frame.e0.amplitudes();
          const Eigen::VectorXcd& e1 = op.frame.e1.amplitudes();
          const Eigen::Vector2cd a(e0.dot(v), e1.dot(v));
          const Eigen::Vector2cd delta = op.block * a - a;
          v += delta[0] * e0 + delta[1] * e1;
        } else if constexpr (std::is_same_v<T, Composition>) {
          for (auto it = op.factors.rbegin(); it != op.factors.rend(); ++it) apply_inplace(*it, v);
        } else {
          v *= op.phase;
        }
      },
      u.variant());
}

}  // namespace detail

inline StateVector apply(const UnitaryOp& u, const StateVector& v) {
  if (auto d = u.dim(); d && *d != v.dim()) {
    throw InvalidArgument("operator of dimension " + std::to_string(*d) + " applied to state of dimension " +
                          std::to_string(v.dim()));
  }
  Eigen::VectorXcd out = v.amplitudes();
  detail::apply_inplace(u, out);
  return StateVector(detail::unchecked, std::move(out));
}

// Dense matrix of `u` acting on `dim`-dimensional states, column by column.
inline Eigen::MatrixXcd to_dense(const UnitaryOp& u, std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::VectorXcd col = Eigen::VectorXcd::Unit(n, k);
    detail::apply_inplace(u, col);
    m.col(k) = col;
  }
  return m;
}

// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases of
// diag(R) divided out.
inline UnitaryOp haar_random_unitary(std::size_t dim, std::uint64_t seed) {
  if (dim < 2) throw InvalidArgument("Haar unitary needs dim >= 2");
  const auto n = static_cast<Eigen::Index>(dim);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd z(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
  }
  return UnitaryOp::dense(std::move(q));
}

// exp(-i (angle/2) G) where G is the 2x2 Hermitian restriction of the
// generator to `frame`, embedded as the identity on the complement.
inline UnitaryOp two_plane_rotation(SubspaceFrame frame, const Eigen::Matrix2cd& generator, double angle) {
  const double herm_defect = (generator - generator.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm_defect <= 1e-12)) throw InvalidArgument("two-plane generator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(generator);
  const Eigen::Vector2d w = eig.eigenvalues();
  const Eigen::Matrix2cd& vecs = eig.eigenvectors();
  Eigen::Vector2cd phases;
  for (int k = 0; k < 2; ++k) phases[k] = std::exp(Complex(0.0, -0.5 * angle * w[k]));
  const Eigen::Matrix2cd block = vecs * phases.asDiagonal() * vecs.adjoint();
  return UnitaryOp::two_plane(std::move(frame), block);
}

}  // namespace qsearch
