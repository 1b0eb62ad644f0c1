#include "minimax/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "minimax/errors.hpp"

namespace minimax {

Domain Domain::MakeBox(Eigen::VectorXd lower, Eigen::VectorXd upper) {
  if (lower.size() != upper.size() || lower.size() == 0)
    throw ConfigError("Box: lower/upper size mismatch");
  for (int i = 0; i < lower.size(); ++i)
    if (!(lower[i] < upper[i])) throw ConfigError("Box: requires lower[i] < upper[i]");
  Domain d;
  d.kind_ = DomainKind::Box;
  d.dim_ = static_cast<int>(lower.size());
  d.lower_ = std::move(lower);
  d.upper_ = std::move(upper);
  return d;
}

Domain Domain::MakeSimplex(int dim, double scale) {
  if (dim < 1) throw ConfigError("Simplex: dim must be positive");
  if (!(scale > 0)) throw ConfigError("Simplex: scale must be positive");
  Domain d;
  d.kind_ = DomainKind::Simplex;
  d.dim_ = dim;
  d.scale_ = scale;
  return d;
}

Domain Domain::MakeBall(Eigen::VectorXd center, double radius) {
  if (center.size() == 0) throw ConfigError("Ball: empty center");
  if (!(radius > 0)) throw ConfigError("Ball: radius must be positive");
  Domain d;
  d.kind_ = DomainKind::Ball;
  d.dim_ = static_cast<int>(center.size());
  d.center_ = std::move(center);
  d.radius_ = radius;
  return d;
}

Domain Domain::MakeProduct(std::vector<Domain> factors) {
  if (factors.empty()) throw ConfigError("Product: needs at least one factor");
  Domain d;
  d.kind_ = DomainKind::Product;
  d.dim_ = 0;
  for (const auto& f : factors) d.dim_ += f.dim();
  d.factors_ = std::move(factors);
  return d;
}

void Domain::check_dim(const Eigen::VectorXd& z) const {
  if (z.size() != dim_)
    throw ConfigError("Domain: dimension mismatch, expected " + std::to_string(dim_) + " got " +
                      std::to_string(z.size()));
}

double Domain::diameter() const {
  switch (kind_) {
    case DomainKind::Box:
      return (upper_ - lower_).norm();
    case DomainKind::Simplex:
      return dim_ == 1 ? 0.0 + 1e-12 : scale_ * std::sqrt(2.0);
    case DomainKind::Ball:
      return 2.0 * radius_;
    case DomainKind::Product: {
      double d = 0.0;
      for (const auto& f : factors_) d += f.diameter();
      return d;
    }
  }
  return 0.0;
}

bool Domain::contains(const Eigen::VectorXd& z, double tol) const {
  check_dim(z);
  if (tol < 0) throw ConfigError("contains: tol must be >= 0");
  switch (kind_) {
    case DomainKind::Box:
      for (int i = 0; i < dim_; ++i)
        if (z[i] < lower_[i] - tol || z[i] > upper_[i] + tol) return false;
      return true;
    case DomainKind::Simplex: {
      for (int i = 0; i < dim_; ++i)
        if (z[i] < -tol) return false;
      return std::abs(z.sum() - scale_) <= tol * std::max(1.0, static_cast<double>(dim_));
    }
    case DomainKind::Ball:
      return (z - center_).norm() <= radius_ + tol;
    case DomainKind::Product: {
      int off = 0;
      for (const auto& f : factors_) {
        if (!f.contains(z.segment(off, f.dim()), tol)) return false;
        off += f.dim();
      }
      return true;
    }
  }
  return false;
}

Eigen::VectorXd project_simplex_weighted(const Eigen::VectorXd& u, const Eigen::VectorXd& w,
                                         double scale) {
  const int n = static_cast<int>(u.size());
  for (int i = 0; i < n; ++i)
    if (!(w[i] > 0)) throw NumericError("simplex projection: weights must be positive");
  // KKT: active coordinates satisfy z_i = u_i - mu/(2 w_i); the active set is
  // { i : 2 w_i u_i > mu }. Scan prefixes of coordinates sorted by 2 w_i u_i.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return 2.0 * w[a] * u[a] > 2.0 * w[b] * u[b]; });
  double sum_u = 0.0, sum_inv = 0.0, mu = 0.0;
  double best_mu = 0.0;
  bool found = false;
  for (int k = 0; k < n; ++k) {
    const int i = idx[k];
    sum_u += u[i];
    sum_inv += 1.0 / (2.0 * w[i]);
    mu = (sum_u - scale) / sum_inv;
    if (2.0 * w[i] * u[i] > mu) {
      best_mu = mu;
      found = true;
    }
  }
  if (!found) best_mu = mu;  // degenerate: all mass on the largest coordinate
  Eigen::VectorXd z(n);
  for (int i = 0; i < n; ++i) z[i] = std::max(0.0, u[i] - best_mu / (2.0 * w[i]));
  // renormalize away the last few ulps so the equality constraint holds tightly
  const double s = z.sum();
  if (s > 0 && std::abs(s - scale) > 0) z *= scale / s;
  return z;
}

Eigen::VectorXd Domain::euclidean_project(const Eigen::VectorXd& u) const {
  return diagonal_project(u, Eigen::VectorXd::Ones(dim_));
}

Eigen::VectorXd Domain::diagonal_project(const Eigen::VectorXd& u,
                                         const Eigen::VectorXd& w) const {
  check_dim(u);
  if (w.size() != dim_) throw ConfigError("diagonal_project: weight dimension mismatch");
  switch (kind_) {
    case DomainKind::Box: {
      // weights are immaterial for a box: the problem separates per coordinate
      Eigen::VectorXd z(dim_);
      for (int i = 0; i < dim_; ++i) z[i] = std::clamp(u[i], lower_[i], upper_[i]);
      return z;
    }
    case DomainKind::Simplex:
      return project_simplex_weighted(u, w, scale_);
    case DomainKind::Ball: {
      const double wmin = w.minCoeff(), wmax = w.maxCoeff();
      if (wmax - wmin > 1e-12 * std::max(1.0, wmax))
        throw NumericError("Ball: closed-form weighted projection needs isotropic weights");
      Eigen::VectorXd delta = u - center_;
      const double norm = delta.norm();
      if (norm <= radius_) return u;
      return center_ + (radius_ / norm) * delta;
    }
    case DomainKind::Product: {
      Eigen::VectorXd z(dim_);
      int off = 0;
      for (const auto& f : factors_) {
        z.segment(off, f.dim()) = f.diagonal_project(u.segment(off, f.dim()), w.segment(off, f.dim()));
        off += f.dim();
      }
      return z;
    }
  }
  return u;
}

Eigen::VectorXd Domain::center() const {
  switch (kind_) {
    case DomainKind::Box:
      return 0.5 * (lower_ + upper_);
    case DomainKind::Simplex:
      return Eigen::VectorXd::Constant(dim_, scale_ / dim_);
    case DomainKind::Ball:
      return center_;
    case DomainKind::Product: {
      Eigen::VectorXd z(dim_);
      int off = 0;
      for (const auto& f : factors_) {
        z.segment(off, f.dim()) = f.center();
        off += f.dim();
      }
      return z;
    }
  }
  return Eigen::VectorXd::Zero(dim_);
}

double Domain::support(const Eigen::VectorXd& g, Eigen::VectorXd* arg) const {
  check_dim(g);
  switch (kind_) {
    case DomainKind::Box: {
      double v = 0.0;
      if (arg) arg->resize(dim_);
      for (int i = 0; i < dim_; ++i) {
        const double zi = g[i] >= 0 ? upper_[i] : lower_[i];
        v += g[i] * zi;
        if (arg) (*arg)[i] = zi;
      }
      return v;
    }
    case DomainKind::Simplex: {
      int imax = 0;
      g.maxCoeff(&imax);
      if (arg) {
        arg->setZero(dim_);
        (*arg)[imax] = scale_;
      }
      return scale_ * g[imax];
    }
    case DomainKind::Ball: {
      const double n = g.norm();
      if (arg) *arg = n > 0 ? Eigen::VectorXd(center_ + (radius_ / n) * g) : center_;
      return g.dot(center_) + radius_ * n;
    }
    case DomainKind::Product: {
      double v = 0.0;
      if (arg) arg->resize(dim_);
      int off = 0;
      for (const auto& f : factors_) {
        Eigen::VectorXd sub;
        v += f.support(g.segment(off, f.dim()), arg ? &sub : nullptr);
        if (arg) arg->segment(off, f.dim()) = sub;
        off += f.dim();
      }
      return v;
    }
  }
  return 0.0;
}

Eigen::VectorXd Domain::sample(Rng& rng) const {
  switch (kind_) {
    case DomainKind::Box: {
      Eigen::VectorXd z(dim_);
      for (int i = 0; i < dim_; ++i) z[i] = rng.uniform(lower_[i], upper_[i]);
      return z;
    }
    case DomainKind::Simplex: {
      // exponential spacings give the uniform (Dirichlet(1,..,1)) law
      Eigen::VectorXd e(dim_);
      for (int i = 0; i < dim_; ++i) e[i] = -std::log(std::max(rng.next_double(), 1e-300));
      return (scale_ / e.sum()) * e;
    }
    case DomainKind::Ball: {
      Eigen::VectorXd g = rng.normal_vector(dim_);
      const double r = radius_ * std::pow(rng.next_double(), 1.0 / dim_);
      const double n = g.norm();
      return n > 0 ? Eigen::VectorXd(center_ + (r / n) * g) : center_;
    }
    case DomainKind::Product: {
      Eigen::VectorXd z(dim_);
      int off = 0;
      for (const auto& f : factors_) {
        z.segment(off, f.dim()) = f.sample(rng);
        off += f.dim();
      }
      return z;
    }
  }
  return Eigen::VectorXd::Zero(dim_);
}

std::vector<Eigen::VectorXd> Domain::extreme_points(std::size_t cap) const {
  std::vector<Eigen::VectorXd> pts;
  switch (kind_) {
    case DomainKind::Box: {
      const std::size_t n = std::size_t{1} << std::min(dim_, 20);
      for (std::size_t mask = 0; mask < n && pts.size() < cap; ++mask) {
        Eigen::VectorXd z(dim_);
        for (int i = 0; i < dim_; ++i) z[i] = (mask >> i) & 1 ? upper_[i] : lower_[i];
        pts.push_back(std::move(z));
      }
      break;
    }
    case DomainKind::Simplex:
      for (int i = 0; i < dim_ && pts.size() < cap; ++i) {
        Eigen::VectorXd z = Eigen::VectorXd::Zero(dim_);
        z[i] = scale_;
        pts.push_back(std::move(z));
      }
      break;
    case DomainKind::Ball:
      for (int i = 0; i < dim_ && pts.size() < cap; ++i) {
        for (double s : {-1.0, 1.0}) {
          Eigen::VectorXd z = center_;
          z[i] += s * radius_;
          pts.push_back(std::move(z));
        }
      }
      break;
    case DomainKind::Product: {
      std::vector<Eigen::VectorXd> acc = {Eigen::VectorXd(0)};
      for (const auto& f : factors_) {
        auto fp = f.extreme_points(cap);
        std::vector<Eigen::VectorXd> next;
        for (const auto& head : acc) {
          for (const auto& tail : fp) {
            if (next.size() >= cap) break;
            Eigen::VectorXd z(head.size() + tail.size());
            z << head, tail;
            next.push_back(std::move(z));
          }
        }
        acc = std::move(next);
      }
      pts = std::move(acc);
      break;
    }
  }
  return pts;
}

std::vector<Eigen::VectorXd> Domain::grid(int points_per_axis, std::size_t cap) const {
  if (points_per_axis < 2) throw ConfigError("grid: need at least 2 points per axis");
  std::vector<Eigen::VectorXd> pts;
  const int m = points_per_axis;
  switch (kind_) {
    case DomainKind::Box: {
      std::vector<int> counter(dim_, 0);
      while (pts.size() < cap) {
        Eigen::VectorXd z(dim_);
        for (int i = 0; i < dim_; ++i)
          z[i] = lower_[i] + (upper_[i] - lower_[i]) * counter[i] / (m - 1);
        pts.push_back(std::move(z));
        int i = 0;
        for (; i < dim_; ++i) {
          if (++counter[i] < m) break;
          counter[i] = 0;
        }
        if (i == dim_) break;
      }
      break;
    }
    case DomainKind::Simplex: {
      if (dim_ == 1) {
        pts.push_back(Eigen::VectorXd::Constant(1, scale_));
        break;
      }
      // grid over the first dim-1 coordinates; last coordinate balances
      std::vector<int> counter(dim_ - 1, 0);
      while (pts.size() < cap) {
        Eigen::VectorXd z(dim_);
        double s = 0.0;
        for (int i = 0; i < dim_ - 1; ++i) {
          z[i] = scale_ * counter[i] / (m - 1);
          s += z[i];
        }
        if (s <= scale_ + 1e-12) {
          z[dim_ - 1] = std::max(0.0, scale_ - s);
          pts.push_back(z);
        }
        int i = 0;
        for (; i < dim_ - 1; ++i) {
          if (++counter[i] < m) break;
          counter[i] = 0;
        }
        if (i == dim_ - 1) break;
      }
      break;
    }
    case DomainKind::Ball: {
      Eigen::VectorXd lo = center_.array() - radius_;
      Eigen::VectorXd hi = center_.array() + radius_;
      auto box = Domain::MakeBox(lo, hi);
      for (auto& z : box.grid(points_per_axis, cap))
        if (contains(z, 1e-12)) pts.push_back(std::move(z));
      break;
    }
    case DomainKind::Product: {
      std::vector<Eigen::VectorXd> acc = {Eigen::VectorXd(0)};
      for (const auto& f : factors_) {
        auto fg = f.grid(points_per_axis, cap);
        std::vector<Eigen::VectorXd> next;
        for (const auto& head : acc) {
          for (const auto& tail : fg) {
            if (next.size() >= cap) break;
            Eigen::VectorXd z(head.size() + tail.size());
            z << head, tail;
            next.push_back(std::move(z));
          }
          if (next.size() >= cap) break;
        }
        acc = std::move(next);
      }
      pts = std::move(acc);
      break;
    }
  }
  return pts;
}

std::string Domain::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case DomainKind::Box:
      os << "box(d=" << dim_ << ")";
      break;
    case DomainKind::Simplex:
      os << "simplex(d=" << dim_ << ",scale=" << scale_ << ")";
      break;
    case DomainKind::Ball:
      os << "ball(d=" << dim_ << ",r=" << radius_ << ")";
      break;
    case DomainKind::Product: {
      os << "product(";
      for (std::size_t i = 0; i < factors_.size(); ++i)
        os << (i ? " x " : "") << factors_[i].describe();
      os << ")";
      break;
    }
  }
  return os.str();
}

}  // namespace minimax
