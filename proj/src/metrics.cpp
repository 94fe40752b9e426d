#include "beamtrain/metrics.hpp"

#include <cmath>
#include <string>

#include "beamtrain/errors.hpp"

namespace beamtrain {

namespace {

// Smallest squared Cholesky pivot of W W^H, relative to the largest, below
// which the combiner is treated as rank deficient.
constexpr double kRankTolerance = 1e-12;

}  // namespace

CapacityResult capacity(const CapacityInput& in) {
  const auto& w = in.combiner;
  const auto& h = in.channel;
  const auto& p = in.precoder;
  if (w.cols() != h.rows() || h.cols() != p.rows() ||
      p.cols() != in.streams || in.streams < 1) {
    throw ConfigError("capacity: inconsistent dimensions");
  }
  if (!(in.rho > 0.0) || !(in.sigma2 > 0.0))
    throw ConfigError("capacity: rho and sigma2 must be > 0");

  const Eigen::MatrixXcd gram = w * w.adjoint();
  Eigen::LLT<Eigen::MatrixXcd> chol(gram);
  if (chol.info() != Eigen::Success)
    throw CombinerRankError("capacity: W W^H is not positive definite");
  const Eigen::VectorXd pivots = chol.matrixLLT().diagonal().real().cwiseAbs2();
  if (pivots.minCoeff() <= kRankTolerance * pivots.maxCoeff())
    throw CombinerRankError("capacity: W W^H is numerically singular");

  // Whiten: with W W^H = L L^H, det(I + c (LL^H)^{-1} G G^H)
  //                              = det(I + c (L^{-1} G)(L^{-1} G)^H).
  const Eigen::MatrixXcd effective = w * h * p;
  const Eigen::MatrixXcd whitened =
      chol.matrixL().solve(effective);
  const double scale = in.rho / (static_cast<double>(in.streams) * in.sigma2);
  const Eigen::Index k = w.rows();
  Eigen::MatrixXcd inner = Eigen::MatrixXcd::Identity(k, k) +
                           scale * whitened * whitened.adjoint();
  inner = (0.5 * (inner + inner.adjoint())).eval();

  Eigen::LLT<Eigen::MatrixXcd> inner_chol(inner);
  if (inner_chol.info() != Eigen::Success)
    throw NumericalError("capacity: whitened matrix lost positive definiteness");
  double bits = 0.0;
  const Eigen::VectorXd diag = inner_chol.matrixLLT().diagonal().real();
  for (Eigen::Index i = 0; i < diag.size(); ++i) bits += 2.0 * std::log2(diag(i));
  if (!std::isfinite(bits)) throw NumericalError("capacity: non-finite result");
  return {bits < 0.0 ? 0.0 : bits};
}

CapacityResult evaluate_method(const ChannelMatrix& h,
                               const AnalogPrecoder& chosen,
                               const Eigen::MatrixXcd& combiner, double rho,
                               double sigma2) {
  CapacityInput in;
  in.combiner = combiner;
  in.channel = h;
  in.precoder = chosen.entries;
  in.rho = rho;
  in.sigma2 = sigma2;
  in.streams = chosen.streams();
  return capacity(in);
}

}  // namespace beamtrain
