#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>

#include <Eigen/Dense>

namespace vslab {

struct Hyperplane {
  Eigen::VectorXd weights;
};

struct LabeledExample {
  Eigen::VectorXd features;  // unit Euclidean norm
  int label;                 // +1 or -1
};

// Max-margin witness: unit separator u, margin gamma, and convex-hull
// weights lambda with gamma == || sum_i lambda_i y_i x_i ||.
struct MarginCertificate {
  Eigen::VectorXd separator;
  double margin = 0.0;
  Eigen::VectorXd hullWeights;
};

class InseparableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable set of unit-norm labeled examples. Rows of features() are the
// x_i; signed_features() caches the rows y_i * x_i used by every margin and
// version-space computation. Values are safe to share across threads once
// constructed (compute the lazy certificate before sharing).
class Dataset {
 public:
  Dataset(Eigen::MatrixXd features, Eigen::VectorXi labels);

  int dim() const { return static_cast<int>(features_.cols()); }
  int size() const { return static_cast<int>(features_.rows()); }
  const Eigen::MatrixXd& features() const { return features_; }
  const Eigen::VectorXi& labels() const { return labels_; }
  const Eigen::MatrixXd& signed_features() const { return signed_; }
  LabeledExample example(int i) const {
    return LabeledExample{features_.row(i).transpose(), labels_[i]};
  }

  // Memoized max-margin certificate (lazy; first call is not thread-safe).
  const MarginCertificate& certificate(double tol = 1e-9) const;

 private:
  Eigen::MatrixXd features_;
  Eigen::VectorXi labels_;
  Eigen::MatrixXd signed_;
  mutable std::shared_ptr<const MarginCertificate> cert_;
};

// sgn classification with sgn(0) = -1.
int classify(const Hyperplane& w, const Eigen::Ref<const Eigen::VectorXd>& x);

// True iff w^T x y <= 0 (boundary counts as a mistake).
bool is_misclassified(const Hyperplane& w, const LabeledExample& e);
bool is_misclassified(const Eigen::Ref<const Eigen::VectorXd>& w, const Dataset& d, int i);

// True iff w^T x_i y_i > 0 for every example: the negated OR of the
// per-example mistake flags.
bool in_version_space(const Hyperplane& w, const Dataset& d);
bool in_version_space(const Eigen::Ref<const Eigen::VectorXd>& w, const Dataset& d);

// arccos of the normalized inner product, clamped into [-1,1].
double angular_distance(const Eigen::Ref<const Eigen::VectorXd>& a,
                        const Eigen::Ref<const Eigen::VectorXd>& b);

// Minimum-norm point of conv{ y_i x_i } via Wolfe's method, run to duality
// gap <= tol. The optimum p gives margin ||p|| and separator p/||p||.
// Throws InseparableError when the minimum norm is <= tol.
MarginCertificate max_margin(const Dataset& d, double tol = 1e-9);

// Regularized incomplete beta function I_x(a,b), continued fraction
// evaluated by the modified Lentz method; symmetry flip for x beyond
// (a+1)/(a+b+2) keeps the fraction in its fast-convergence region.
double regularized_incomplete_beta(double x, double a, double b);

// Probability that a standard-normal direction in R^D lies within angular
// distance arcsin(gamma) of a fixed unit vector: (1/2) I_{gamma^2}((D-1)/2, 1/2).
double sector_probability(double gamma, int D);

enum class AsymptoticRegime { FixedD, LargeD };

// Small-gamma lower bounds on the sector probability:
//   FixedD: gamma^(D-1) / (pi (D-1));  LargeD: gamma^(D-1) / sqrt(2 pi (D-1)).
double asymptotic_lower_bound(double gamma, int D, AsymptoticRegime regime);

struct McEstimate {
  double estimate = 0.0;
  double stderrValue = 0.0;
  std::int64_t hits = 0;
};

// Monte-Carlo estimate of Pr[w in VS] for w ~ N(0, I), with binomial
// standard error. Trials are processed in fixed-size chunks, each on its
// own substream, so the result is independent of evaluation order.
McEstimate mc_version_space_probability(const Dataset& d, std::int64_t trials,
                                        std::uint64_t seed);

// ceil((1/p) ln(1/delta)): samples needed so that missing the version space
// every time has probability at most delta.
std::int64_t required_sample_count(double p, double delta);

}  // namespace vslab
