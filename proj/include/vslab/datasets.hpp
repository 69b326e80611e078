#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "vslab/geometry.hpp"

namespace vslab {

struct DatasetSpec {
  enum class Kind { Mohri, RandomMargin, File };
  Kind kind = Kind::Mohri;
  int dim = 2;
  int size = 0;  // ignored for Mohri (N = dim) and File
  std::optional<double> targetMargin;
  std::optional<std::uint64_t> seed;
  std::string path;
  bool normalize = false;
};

// Hard separable family with exponentially small margin: N = D examples,
// x_i' = ((-1)^i, ..., (-1)^i, (-1)^{i+1}, 0, ..., 0) with i leading
// components, x_i = x_i'/||x_i'||, y_i = (-1)^{i+1}. The margin is bounded
// by sqrt(1/2^(D-1)).
Dataset mohri_hard_dataset(int D);

// N unit vectors uniform on the sphere, rejected while |u.x| < targetMargin
// for a random unit u, labeled y = sign(u.x). Construction guarantees
// max_margin(d) >= targetMargin.
Dataset random_separable_dataset(int D, int N, double targetMargin, std::uint64_t seed);

// CSV persistence: one row per example, D feature columns then a +1/-1
// label column; optional header line is ignored. Rows whose feature norm
// deviates from 1 by more than 1e-9 are an error unless normalize is set.
Dataset load_dataset(const std::string& path, bool normalize = false);
void save_dataset(const Dataset& d, const std::string& path);

Dataset make_dataset(const DatasetSpec& spec);

}  // namespace vslab
