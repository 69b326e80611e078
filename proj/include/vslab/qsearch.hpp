#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "vslab/ledger.hpp"
#include "vslab/rng.hpp"

namespace vslab {

// Predicate over indices 0..size-1 with attached cost accounting. query()
// charges evalCost per evaluation; the amplitude simulator charges
// applyCost per coherent application. marked()/unmarked() are simulator
// introspection and never touch the ledger. An oracle is built per search
// context; concurrent searches need disjoint oracles and ledgers.
class MarkedOracle {
 public:
  MarkedOracle(std::int64_t size, std::function<bool(std::int64_t)> predicate,
               QueryLedger* ledger, QueryCost evalCost = {1, 0},
               QueryCost applyCost = {0, 1});

  std::int64_t size() const { return size_; }

  bool query(std::int64_t i) const;
  void charge_applications(std::int64_t count) const;

  const std::vector<std::int64_t>& marked() const;
  const std::vector<std::int64_t>& unmarked() const;
  std::int64_t marked_count() const { return static_cast<std::int64_t>(marked().size()); }

 private:
  void enumerate() const;

  std::int64_t size_;
  std::function<bool(std::int64_t)> predicate_;
  QueryLedger* ledger_;
  QueryCost evalCost_;
  QueryCost applyCost_;
  mutable bool enumerated_ = false;
  mutable std::vector<std::int64_t> marked_;
  mutable std::vector<std::int64_t> unmarked_;
};

// sin^2((2k+1) arcsin(sqrt(M/N))): probability that k amplitude-
// amplification iterations land on a marked item. M = 0 gives 0.
double grover_success_probability(std::int64_t n, std::int64_t m, std::int64_t k);

// One measurement after k iterations, simulated exactly in the 2-D
// invariant subspace spanned by the marked and unmarked uniform states:
// a uniformly random marked index with the probability above, otherwise a
// uniformly random unmarked index. Charges k coherent applications.
std::int64_t grover_sample(const MarkedOracle& oracle, std::int64_t k, Rng& rng);

// Search with unknown marked count: iteration counts drawn uniformly from
// a 6/5-exponentially growing window capped at sqrt(N), every candidate
// verified with one query(), hard budget of 9 sqrt(N) coherent
// applications. Returns a verified marked index or nothing. When at least
// one marked item exists a single invocation succeeds with probability
// well above 1/4; expected applications are O(sqrt(N/M)).
std::optional<std::int64_t> qsearch(const MarkedOracle& oracle, Rng& rng);

// Phase-estimation count estimate: samples the exact outcome distribution
// of a precisionBits-bit phase estimation of the amplification operator
// started from uniform (eigenphase pair +-2 arcsin(sqrt(M/N))), returns
// round(N sin^2(theta_hat)). Charges 2^precisionBits applications.
std::int64_t quantum_counting(const MarkedOracle& oracle, int precisionBits, Rng& rng);

// Swap-test estimate of |<a|b>|^2 from `shots` Bernoulli trials with
// acceptance probability (1+|<a|b>|^2)/2; clamped into [0,1].
double swap_test_overlap(const Eigen::Ref<const Eigen::VectorXcd>& a,
                         const Eigen::Ref<const Eigen::VectorXcd>& b, std::int64_t shots,
                         Rng& rng);

}  // namespace vslab
