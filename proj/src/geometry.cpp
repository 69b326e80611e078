#include "vslab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "vslab/rng.hpp"

namespace vslab {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Dataset::Dataset(Eigen::MatrixXd features, Eigen::VectorXi labels)
    : features_(std::move(features)), labels_(std::move(labels)) {
  require(features_.rows() >= 1, "dataset must contain at least one example");
  require(features_.rows() == labels_.size(), "feature/label count mismatch");
  require(features_.allFinite(), "dataset features must be finite");
  for (int i = 0; i < features_.rows(); ++i) {
    require(labels_[i] == 1 || labels_[i] == -1, "labels must be +1 or -1");
    require(std::abs(features_.row(i).norm() - 1.0) <= 1e-9,
            "example features must have unit norm");
  }
  signed_ = features_.array().colwise() * labels_.cast<double>().array();
}

const MarginCertificate& Dataset::certificate(double tol) const {
  if (!cert_) cert_ = std::make_shared<const MarginCertificate>(max_margin(*this, tol));
  return *cert_;
}

int classify(const Hyperplane& w, const Eigen::Ref<const Eigen::VectorXd>& x) {
  require(w.weights.size() == x.size(), "dimension mismatch");
  return w.weights.dot(x) > 0.0 ? +1 : -1;
}

bool is_misclassified(const Hyperplane& w, const LabeledExample& e) {
  require(w.weights.size() == e.features.size(), "dimension mismatch");
  return w.weights.dot(e.features) * e.label <= 0.0;
}

bool is_misclassified(const Eigen::Ref<const Eigen::VectorXd>& w, const Dataset& d, int i) {
  require(w.size() == d.dim(), "dimension mismatch");
  return d.signed_features().row(i).dot(w) <= 0.0;
}

bool in_version_space(const Eigen::Ref<const Eigen::VectorXd>& w, const Dataset& d) {
  require(w.size() == d.dim(), "dimension mismatch");
  return ((d.signed_features() * w).array() > 0.0).all();
}

bool in_version_space(const Hyperplane& w, const Dataset& d) {
  return in_version_space(Eigen::Ref<const Eigen::VectorXd>(w.weights), d);
}

double angular_distance(const Eigen::Ref<const Eigen::VectorXd>& a,
                        const Eigen::Ref<const Eigen::VectorXd>& b) {
  require(a.size() == b.size(), "dimension mismatch");
  const double na = a.norm();
  const double nb = b.norm();
  require(na > 0.0 && nb > 0.0, "angular distance of a zero vector");
  const double c = std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
  return std::acos(c);
}

// ---------------------------------------------------------------------------
// Minimum-norm point over conv{z_i} (Wolfe's method with corral bookkeeping).

namespace {

// Affine minimizer of ||Z_S^T alpha||^2 subject to 1^T alpha = 1, via the
// bordered KKT system solved with a rank-revealing decomposition.
Eigen::VectorXd affine_minimizer(const Eigen::MatrixXd& zs) {
  const int m = static_cast<int>(zs.rows());
  Eigen::MatrixXd kkt(m + 1, m + 1);
  kkt.topLeftCorner(m, m) = zs * zs.transpose();
  kkt.topRightCorner(m, 1).setOnes();
  kkt.bottomLeftCorner(1, m).setOnes();
  kkt(m, m) = 0.0;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
  rhs[m] = 1.0;
  Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
  return sol.head(m);
}

}  // namespace

MarginCertificate max_margin(const Dataset& d, double tol) {
  require(tol > 0.0, "tolerance must be positive");
  const Eigen::MatrixXd& z = d.signed_features();
  const int n = d.size();

  std::vector<int> corral;
  std::vector<double> lambda;
  {
    int best = 0;
    for (int i = 1; i < n; ++i)
      if (z.row(i).squaredNorm() < z.row(best).squaredNorm()) best = i;
    corral.push_back(best);
    lambda.push_back(1.0);
  }
  Eigen::VectorXd p = z.row(corral[0]).transpose();

  const int majorCap = 50 * n + 1000;
  for (int major = 0; major < majorCap; ++major) {
    // Optimality: p.p - min_i p.z_i is a duality gap for the min-norm problem.
    Eigen::VectorXd scores = z * p;
    int jstar = 0;
    scores.minCoeff(&jstar);
    if (p.squaredNorm() - scores[jstar] <= tol) break;
    if (std::find(corral.begin(), corral.end(), jstar) == corral.end()) {
      corral.push_back(jstar);
      lambda.push_back(0.0);
    }

    // Minor cycles: move to the affine minimizer over the corral, walking
    // back to the simplex boundary and dropping dead vertices as needed.
    for (int minor = 0; minor < 4 * n + 16; ++minor) {
      const int m = static_cast<int>(corral.size());
      Eigen::MatrixXd zs(m, d.dim());
      for (int r = 0; r < m; ++r) zs.row(r) = z.row(corral[r]);
      Eigen::VectorXd alpha = affine_minimizer(zs);
      if (alpha.minCoeff() >= -1e-12) {
        for (int r = 0; r < m; ++r) lambda[r] = std::max(alpha[r], 0.0);
        p = zs.transpose() * Eigen::Map<Eigen::VectorXd>(lambda.data(), m);
        break;
      }
      double theta = 1.0;
      for (int r = 0; r < m; ++r)
        if (alpha[r] < lambda[r])
          theta = std::min(theta, lambda[r] / (lambda[r] - alpha[r]));
      for (int r = 0; r < m; ++r) lambda[r] = (1.0 - theta) * lambda[r] + theta * alpha[r];
      for (int r = m - 1; r >= 0; --r) {
        if (lambda[r] <= 1e-12 && corral.size() > 1) {
          corral.erase(corral.begin() + r);
          lambda.erase(lambda.begin() + r);
        }
      }
      Eigen::MatrixXd zs2(corral.size(), d.dim());
      for (std::size_t r = 0; r < corral.size(); ++r) zs2.row(r) = z.row(corral[r]);
      p = zs2.transpose() *
          Eigen::Map<Eigen::VectorXd>(lambda.data(), static_cast<int>(lambda.size()));
    }
  }

  const double margin = p.norm();
  if (margin <= tol)
    throw InseparableError("dataset is not separable through the origin (margin below tolerance)");

  double total = 0.0;
  for (double l : lambda) total += l;
  MarginCertificate cert;
  cert.separator = p / margin;
  cert.margin = margin;
  cert.hullWeights = Eigen::VectorXd::Zero(n);
  for (std::size_t r = 0; r < corral.size(); ++r)
    cert.hullWeights[corral[r]] = lambda[r] / total;
  return cert;
}

// ---------------------------------------------------------------------------
// Regularized incomplete beta.

namespace {

// Continued fraction for I_x(a,b), coefficients
//   d_{2m+1} = -((a+m)(a+b+m)x) / ((a+2m)(a+2m+1))
//   d_{2m}   = (m(b-m)x) / ((a+2m-1)(a+2m))
// evaluated by the modified Lentz iteration.
double beta_cf(double x, double a, double b) {
  constexpr double kFloor = 1e-15;
  constexpr int kMaxIter = 400;
  double c = 1.0;
  double dd = 1.0 - (a + b) * x / (a + 1.0);
  if (std::abs(dd) < kFloor) dd = kFloor;
  dd = 1.0 / dd;
  double h = dd;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double num = m * (b - m) * x / ((a + m2 - 1.0) * (a + m2));
    dd = 1.0 + num * dd;
    if (std::abs(dd) < kFloor) dd = kFloor;
    c = 1.0 + num / c;
    if (std::abs(c) < kFloor) c = kFloor;
    dd = 1.0 / dd;
    h *= dd * c;
    num = -(a + m) * (a + b + m) * x / ((a + m2) * (a + m2 + 1.0));
    dd = 1.0 + num * dd;
    if (std::abs(dd) < kFloor) dd = kFloor;
    c = 1.0 + num / c;
    if (std::abs(c) < kFloor) c = kFloor;
    dd = 1.0 / dd;
    const double delta = dd * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-15) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b) {
  require(a > 0.0 && b > 0.0, "beta parameters must be positive");
  require(x >= 0.0 && x <= 1.0, "beta argument outside [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double lnFront = a * std::log(x) + b * std::log1p(-x) -
                         (std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
  if (x < (a + 1.0) / (a + b + 2.0))
    return std::exp(lnFront) * beta_cf(x, a, b) / a;
  return 1.0 - std::exp(lnFront) * beta_cf(1.0 - x, b, a) / b;
}

double sector_probability(double gamma, int D) {
  require(D >= 2, "dimension must be at least 2");
  require(gamma >= 0.0 && gamma <= 1.0, "gamma outside [0,1]");
  return 0.5 * regularized_incomplete_beta(gamma * gamma, 0.5 * (D - 1), 0.5);
}

double asymptotic_lower_bound(double gamma, int D, AsymptoticRegime regime) {
  require(D >= 2, "dimension must be at least 2");
  require(gamma > 0.0 && gamma < 1.0, "gamma outside (0,1)");
  const double lead = std::pow(gamma, D - 1);
  if (regime == AsymptoticRegime::FixedD) return lead / (M_PI * (D - 1));
  return lead / std::sqrt(2.0 * M_PI * (D - 1));
}

McEstimate mc_version_space_probability(const Dataset& d, std::int64_t trials,
                                        std::uint64_t seed) {
  require(trials >= 1, "trials must be at least 1");
  constexpr std::int64_t kChunk = 8192;
  const Eigen::MatrixXd& z = d.signed_features();
  const int dim = d.dim();

  std::int64_t hits = 0;
  Rng root(seed);
  std::int64_t done = 0;
  for (std::uint64_t chunk = 0; done < trials; ++chunk) {
    const std::int64_t b = std::min(kChunk, trials - done);
    Rng rng = root.split(chunk);
    Eigen::MatrixXd w(dim, b);
    for (std::int64_t c = 0; c < b; ++c)
      for (int r = 0; r < dim; ++r) w(r, c) = rng.normal();
    Eigen::MatrixXd margins = z * w;  // one column per sampled direction
    for (std::int64_t c = 0; c < b; ++c)
      if ((margins.col(c).array() > 0.0).all()) ++hits;
    done += b;
  }

  McEstimate out;
  out.hits = hits;
  out.estimate = static_cast<double>(hits) / static_cast<double>(trials);
  out.stderrValue =
      std::sqrt(std::max(out.estimate * (1.0 - out.estimate), 0.0) / static_cast<double>(trials));
  return out;
}

std::int64_t required_sample_count(double p, double delta) {
  require(p > 0.0 && p <= 1.0, "p outside (0,1]");
  require(delta > 0.0 && delta < 1.0, "delta outside (0,1)");
  return static_cast<std::int64_t>(std::ceil(std::log(1.0 / delta) / p));
}

}  // namespace vslab
