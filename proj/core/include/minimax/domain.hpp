#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "minimax/rng.hpp"

namespace minimax {

enum class DomainKind { Box, Simplex, Ball, Product };

// Constraint set for one player (or the product set for both). Simplex is the
// face { z >= 0, sum(z) = scale }. Product concatenates factor coordinates.
class Domain {
 public:
  static Domain MakeBox(Eigen::VectorXd lower, Eigen::VectorXd upper);
  static Domain MakeSimplex(int dim, double scale = 1.0);
  static Domain MakeBall(Eigen::VectorXd center, double radius);
  static Domain MakeProduct(std::vector<Domain> factors);

  DomainKind kind() const { return kind_; }
  int dim() const { return dim_; }

  // Finite D with ||z_a - z_b|| <= D. Exact for Box/Ball/Simplex; for Product
  // the sum of factor diameters is used.
  double diameter() const;

  bool contains(const Eigen::VectorXd& z, double tol) const;

  // Euclidean projection; closed form for every kind.
  Eigen::VectorXd euclidean_project(const Eigen::VectorXd& u) const;

  // Projection in the norm diag(w): argmin sum_i w_i (z_i - u_i)^2.
  // Requires w_i > 0. Closed form (clamp / radial only for isotropic w /
  // sorted-threshold KKT on the simplex).
  Eigen::VectorXd diagonal_project(const Eigen::VectorXd& u, const Eigen::VectorXd& w) const;

  // Box midpoint, simplex barycenter, ball center; factor-wise for Product.
  Eigen::VectorXd center() const;

  // max_{v in Z} <g, v>; optionally returns a maximizer.
  double support(const Eigen::VectorXd& g, Eigen::VectorXd* arg = nullptr) const;

  Eigen::VectorXd sample(Rng& rng) const;

  // Extreme points (box corners, simplex vertices); Ball contributes its
  // center +/- radius along each axis. Capped; used to make sampled maxima of
  // affine functions exact on polytopes.
  std::vector<Eigen::VectorXd> extreme_points(std::size_t cap = 4096) const;

  // Deterministic grid with the given number of points per free axis.
  // Box: tensor grid. Simplex: grid over the first dim-1 coordinates with the
  // last one balancing the sum (skipping infeasible nodes). Ball: bounding-box
  // grid filtered by membership. Capped to keep desk-scale oracles cheap.
  std::vector<Eigen::VectorXd> grid(int points_per_axis, std::size_t cap = 2'000'000) const;

  const std::vector<Domain>& factors() const { return factors_; }
  const Eigen::VectorXd& lower() const { return lower_; }
  const Eigen::VectorXd& upper() const { return upper_; }
  const Eigen::VectorXd& ball_center() const { return center_; }
  double radius() const { return radius_; }
  double scale() const { return scale_; }

  std::string describe() const;

 private:
  Domain() = default;
  void check_dim(const Eigen::VectorXd& z) const;

  DomainKind kind_ = DomainKind::Box;
  int dim_ = 0;
  Eigen::VectorXd lower_, upper_;   // Box
  double scale_ = 1.0;              // Simplex
  Eigen::VectorXd center_;          // Ball
  double radius_ = 0.0;             // Ball
  std::vector<Domain> factors_;     // Product
};

// Weighted simplex projection used by Domain and the KKT tests:
// argmin sum_i w_i (z_i - u_i)^2 s.t. sum z = scale, z >= 0.
Eigen::VectorXd project_simplex_weighted(const Eigen::VectorXd& u, const Eigen::VectorXd& w,
                                         double scale);

}  // namespace minimax
