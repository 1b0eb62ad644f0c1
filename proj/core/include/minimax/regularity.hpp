#pragma once

#include <vector>

#include <Eigen/Dense>

namespace minimax {

// Coordinate split (s_1,...,s_m) with sum s_i = d, m <= d.
struct Split {
  std::vector<int> sizes;

  int total() const {
    int t = 0;
    for (int s : sizes) t += s;
    return t;
  }
  int blocks() const { return static_cast<int>(sizes.size()); }
  void validate(int d) const;
};

// PSD matrix A with its inverse maintained alongside. Rank-one growth uses
// the Sherman-Morrison identity; a direct re-inversion every kRefreshPeriod
// updates washes out accumulated drift. Invariants (checked in debug paths
// and tests): A symmetric to 1e-12, eigenvalues >= -1e-10,
// ||A*A_inv - I||_max <= 1e-8.
class RegularityMatrix {
 public:
  static constexpr int kRefreshPeriod = 256;

  // A = epsilon * I
  static RegularityMatrix Identity(int d, double epsilon);

  int dim() const { return static_cast<int>(a_.rows()); }
  const Eigen::MatrixXd& matrix() const { return a_; }
  const Eigen::MatrixXd& inverse() const { return a_inv_; }

  // A <- A + v v^T
  void rank_one_update(const Eigen::VectorXd& v);

  // A <- c * I (replacement, not accumulation)
  void set_scalar(double c);

  // A <- A + M for PSD M; inverse recomputed directly.
  void add_psd(const Eigen::MatrixXd& m);

  // A <- A + block_split_matrix(F, split), applied as one rank-one update
  // per block so the inverse stays maintained.
  void add_block_outer(const Eigen::VectorXd& f_value, const Split& split);

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const { return a_inv_ * rhs; }
  double quad_inv(const Eigen::VectorXd& v) const { return v.dot(a_inv_ * v); }

  double identity_residual() const;  // ||A*A_inv - I||_max
  void refresh();                    // direct re-inversion

 private:
  RegularityMatrix() = default;
  Eigen::MatrixXd a_, a_inv_;
  int updates_since_refresh_ = 0;
};

// Block-diagonal matrix with i-th block F_{s_i} F_{s_i}^T, zeros elsewhere.
Eigen::MatrixXd block_split_matrix(const Eigen::VectorXd& f_value, const Split& split);

}  // namespace minimax
