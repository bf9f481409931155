#pragma once

// Rank-2 tensors on the real chart and linear vector fields X_W = W x d/dx.
// All tensor component matrices use the chart ordering (q_1..q_N, p_1..p_N).

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <functional>
#include <stdexcept>
#include <utility>

#include "qgeom/hilbert.hpp"

namespace qgeom {

enum class Variance { covariant, contravariant, mixed };
enum class Symmetry { symmetric, antisymmetric, none };

template <typename Scalar>
Symmetry detect_symmetry(const RealMatrix<Scalar>& m, Scalar tol = Scalar(kHermitianTol)) {
  const Scalar scale = std::max(Scalar(1), max_abs<Scalar>(m));
  if (max_abs<Scalar>((m - m.transpose()).eval()) <= tol * scale) return Symmetry::symmetric;
  if (max_abs<Scalar>((m + m.transpose()).eval()) <= tol * scale) return Symmetry::antisymmetric;
  return Symmetry::none;
}

/// Rank-2 tensor at a point (or with constant coefficients), stored as a dense
/// real matrix with variance and symmetry flags. Mixed tensors compose as
/// matrices.
template <typename Scalar = double>
class Tensor2 {
 public:
  Tensor2(RealMatrix<Scalar> m, Variance var)
      : mat_(std::move(m)), var_(var), sym_(detect_symmetry<Scalar>(mat_)) {
    if (mat_.rows() != mat_.cols()) throw std::invalid_argument("Tensor2: matrix must be square");
  }

  Tensor2(RealMatrix<Scalar> m, Variance var, Symmetry sym)
      : mat_(std::move(m)), var_(var), sym_(sym) {
    if (mat_.rows() != mat_.cols()) throw std::invalid_argument("Tensor2: matrix must be square");
    if (sym_ != Symmetry::none && detect_symmetry<Scalar>(mat_) != sym_)
      throw std::invalid_argument("Tensor2: symmetry flag does not match the matrix");
  }

  Eigen::Index dim() const { return mat_.rows(); }
  const RealMatrix<Scalar>& matrix() const { return mat_; }
  Variance variance() const { return var_; }
  Symmetry symmetry() const { return sym_; }

  /// Evaluate on a pair of vectors (covariant), covectors (contravariant) or
  /// apply to a vector (mixed, returning u^i = T^i_j v^j).
  Scalar pair(const RealVector<Scalar>& a, const RealVector<Scalar>& b) const {
    return a.dot(mat_ * b);
  }
  RealVector<Scalar> apply(const RealVector<Scalar>& v) const { return mat_ * v; }

 private:
  RealMatrix<Scalar> mat_;
  Variance var_;
  Symmetry sym_;
};

/// Linear vector field X_W(x) = W x. Fields flagged Hermitian must carry the
/// block structure W = [[A, B], [-B, A]] with A = -A^T, B = B^T.
template <typename Scalar = double>
class LinearVectorField {
 public:
  explicit LinearVectorField(RealMatrix<Scalar> w, bool hermitian = false,
                             Scalar tol = Scalar(kHermitianTol))
      : mat_(std::move(w)), hermitian_(hermitian) {
    if (mat_.rows() != mat_.cols() || mat_.rows() % 2 != 0)
      throw std::invalid_argument("LinearVectorField: matrix must be square of even size");
    if (hermitian_ && block_structure_residual() > tol * std::max(Scalar(1), max_abs<Scalar>(mat_)))
      throw std::invalid_argument("LinearVectorField: Hermitian flag set but block structure fails");
  }

  Eigen::Index dim() const { return mat_.rows(); }
  Eigen::Index hilbert_dim() const { return mat_.rows() / 2; }
  const RealMatrix<Scalar>& matrix() const { return mat_; }
  bool is_hermitian() const { return hermitian_; }

  RealVector<Scalar> evaluate(const RealVector<Scalar>& x) const { return mat_ * x; }

  /// Time-t flow map exp(tW) of the field.
  RealMatrix<Scalar> flow(Scalar t) const { return (t * mat_).exp(); }

  /// max deviation from the unitary-generator block form [[A,B],[-B,A]].
  Scalar block_structure_residual() const {
    const Eigen::Index n = hilbert_dim();
    const auto a = mat_.topLeftCorner(n, n);
    const auto b = mat_.topRightCorner(n, n);
    const auto c = mat_.bottomLeftCorner(n, n);
    const auto d = mat_.bottomRightCorner(n, n);
    Scalar r = max_abs<Scalar>((a - d).eval());
    r = std::max(r, max_abs<Scalar>((b + c).eval()));
    r = std::max(r, max_abs<Scalar>((a + a.transpose()).eval()));
    r = std::max(r, max_abs<Scalar>((b - b.transpose()).eval()));
    return r;
  }

 private:
  RealMatrix<Scalar> mat_;
  bool hermitian_;
};

/// Position-dependent rank-2 tensor field on the chart.
template <typename Scalar = double>
struct TensorField {
  std::function<RealMatrix<Scalar>(const RealVector<Scalar>&)> components;
  Variance variance = Variance::contravariant;

  RealMatrix<Scalar> operator()(const RealVector<Scalar>& x) const { return components(x); }

  static TensorField constant(const Tensor2<Scalar>& t) {
    RealMatrix<Scalar> m = t.matrix();
    return TensorField{[m](const RealVector<Scalar>&) { return m; }, t.variance()};
  }
};

}  // namespace qgeom
