#include "minimax/regularity.hpp"

#include <string>

#include "minimax/errors.hpp"

namespace minimax {

void Split::validate(int d) const {
  if (sizes.empty()) throw ConfigError("Split: empty");
  for (int s : sizes)
    if (s < 1) throw ConfigError("Split: sizes must be positive");
  if (total() != d)
    throw ConfigError("Split: sizes sum to " + std::to_string(total()) + ", expected " +
                      std::to_string(d));
  if (blocks() > d) throw ConfigError("Split: more blocks than coordinates");
}

RegularityMatrix RegularityMatrix::Identity(int d, double epsilon) {
  if (d < 1) throw ConfigError("RegularityMatrix: d must be >= 1");
  if (!(epsilon > 0)) throw ConfigError("RegularityMatrix: epsilon must be positive");
  RegularityMatrix r;
  r.a_ = epsilon * Eigen::MatrixXd::Identity(d, d);
  r.a_inv_ = (1.0 / epsilon) * Eigen::MatrixXd::Identity(d, d);
  return r;
}

void RegularityMatrix::rank_one_update(const Eigen::VectorXd& v) {
  if (v.size() != a_.rows()) throw ConfigError("rank_one_update: dimension mismatch");
  a_ += v * v.transpose();
  const Eigen::VectorXd w = a_inv_ * v;
  const double denom = 1.0 + v.dot(w);
  if (denom <= 1e-14) {
    refresh();
    return;
  }
  a_inv_ -= (w * w.transpose()) / denom;
  if (++updates_since_refresh_ >= kRefreshPeriod) refresh();
}

void RegularityMatrix::set_scalar(double c) {
  if (!(c > 0)) throw ConfigError("set_scalar: c must be positive");
  const int d = dim();
  a_ = c * Eigen::MatrixXd::Identity(d, d);
  a_inv_ = (1.0 / c) * Eigen::MatrixXd::Identity(d, d);
  updates_since_refresh_ = 0;
}

void RegularityMatrix::add_psd(const Eigen::MatrixXd& m) {
  if (m.rows() != a_.rows() || m.cols() != a_.cols())
    throw ConfigError("add_psd: dimension mismatch");
  a_ += m;
  refresh();
}

void RegularityMatrix::add_block_outer(const Eigen::VectorXd& f_value, const Split& split) {
  split.validate(dim());
  int off = 0;
  for (int s : split.sizes) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim());
    v.segment(off, s) = f_value.segment(off, s);
    rank_one_update(v);
    off += s;
  }
}

double RegularityMatrix::identity_residual() const {
  const int d = dim();
  return (a_ * a_inv_ - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
}

void RegularityMatrix::refresh() {
  a_ = 0.5 * (a_ + a_.transpose().eval());
  Eigen::LDLT<Eigen::MatrixXd> ldlt(a_);
  if (ldlt.info() != Eigen::Success)
    throw NumericError("RegularityMatrix: direct inversion failed");
  a_inv_ = ldlt.solve(Eigen::MatrixXd::Identity(dim(), dim()));
  a_inv_ = 0.5 * (a_inv_ + a_inv_.transpose().eval());
  const double resid = identity_residual();
  if (!(resid <= 1e-8))
    throw NumericError("RegularityMatrix: inverse residual too large after refresh", resid);
  updates_since_refresh_ = 0;
}

Eigen::MatrixXd block_split_matrix(const Eigen::VectorXd& f_value, const Split& split) {
  const int d = static_cast<int>(f_value.size());
  split.validate(d);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  int off = 0;
  for (int s : split.sizes) {
    const auto block = f_value.segment(off, s);
    m.block(off, off, s, s) = block * block.transpose();
    off += s;
  }
  return m;
}

}  // namespace minimax
