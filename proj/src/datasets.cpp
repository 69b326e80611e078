#include "vslab/datasets.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "vslab/rng.hpp"

namespace vslab {

Dataset mohri_hard_dataset(int D) {
  if (D < 2) throw std::invalid_argument("mohri_hard_dataset requires D >= 2");
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(D, D);
  Eigen::VectorXi y(D);
  for (int i = 1; i <= D; ++i) {
    const double lead = (i % 2 == 0) ? 1.0 : -1.0;   // (-1)^i
    for (int k = 0; k < i - 1; ++k) x(i - 1, k) = lead;
    x(i - 1, i - 1) = -lead;                          // (-1)^(i+1)
    x.row(i - 1) /= x.row(i - 1).norm();
    y[i - 1] = (i % 2 == 0) ? -1 : +1;                // (-1)^(i+1)
  }
  return Dataset(std::move(x), std::move(y));
}

Dataset random_separable_dataset(int D, int N, double targetMargin, std::uint64_t seed) {
  if (D < 2) throw std::invalid_argument("random_separable_dataset requires D >= 2");
  if (N < 1) throw std::invalid_argument("random_separable_dataset requires N >= 1");
  if (!(targetMargin > 0.0 && targetMargin < 1.0))
    throw std::invalid_argument("targetMargin must lie in (0,1)");

  Rng rng(seed);
  const Eigen::VectorXd u = rng.unit_sphere(D);
  Eigen::MatrixXd x(N, D);
  Eigen::VectorXi y(N);
  constexpr int kBudgetPerPoint = 200000;
  for (int i = 0; i < N; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kBudgetPerPoint; ++attempt) {
      Eigen::VectorXd v = rng.unit_sphere(D);
      const double s = u.dot(v);
      if (std::abs(s) >= targetMargin) {
        x.row(i) = v.transpose();
        y[i] = s > 0.0 ? +1 : -1;
        placed = true;
        break;
      }
    }
    if (!placed)
      throw std::runtime_error("rejection budget exceeded: targetMargin too large for D");
  }
  return Dataset(std::move(x), std::move(y));
}

namespace {

double parse_double(const std::string& cell, const std::string& path) {
  double v = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  if (begin < end && *begin == '+') ++begin;  // from_chars rejects leading '+'
  auto [ptr, ec] = std::from_chars(begin, end, v);
  while (ptr < end && (*ptr == ' ' || *ptr == '\t' || *ptr == '\r')) ++ptr;
  if (ec != std::errc() || ptr != end)
    throw std::runtime_error("non-numeric cell '" + cell + "' in " + path);
  return v;
}

}  // namespace

Dataset load_dataset(const std::string& path, bool normalize) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset file " + path);

  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (first) {
      first = false;
      // A non-numeric first line is treated as a header and skipped.
      try {
        parse_double(cells.at(0), path);
      } catch (const std::runtime_error&) {
        continue;
      }
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(parse_double(c, path));
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::runtime_error("ragged row in " + path);
    if (row.size() < 2) throw std::runtime_error("rows need features plus a label in " + path);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("no data rows in " + path);

  const int n = static_cast<int>(rows.size());
  const int d = static_cast<int>(rows.front().size()) - 1;
  Eigen::MatrixXd x(n, d);
  Eigen::VectorXi y(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) x(i, j) = rows[i][j];
    const double lab = rows[i][d];
    if (lab != 1.0 && lab != -1.0)
      throw std::runtime_error("invalid label (want +1 or -1) in " + path);
    y[i] = lab > 0.0 ? +1 : -1;
    const double norm = x.row(i).norm();
    if (std::abs(norm - 1.0) > 1e-9) {
      if (!normalize)
        throw std::runtime_error("row norm deviates from 1 in " + path +
                                 " (pass normalize to rescale)");
      if (norm <= 0.0) throw std::runtime_error("zero feature row in " + path);
      x.row(i) /= norm;
    }
  }
  return Dataset(std::move(x), std::move(y));
}

void save_dataset(const Dataset& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out) throw std::runtime_error("cannot write dataset file " + path);
  char buf[64];
  for (int i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d.dim(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", d.features()(i, j));
      out << buf << ',';
    }
    out << (d.labels()[i] > 0 ? "1" : "-1") << '\n';
  }
}

Dataset make_dataset(const DatasetSpec& spec) {
  switch (spec.kind) {
    case DatasetSpec::Kind::Mohri:
      return mohri_hard_dataset(spec.dim);
    case DatasetSpec::Kind::RandomMargin:
      if (!spec.targetMargin) throw std::invalid_argument("random dataset needs targetMargin");
      return random_separable_dataset(spec.dim, spec.size, *spec.targetMargin,
                                      spec.seed.value_or(0));
    case DatasetSpec::Kind::File:
      return load_dataset(spec.path, spec.normalize);
  }
  throw std::invalid_argument("unknown dataset kind");
}

}  // namespace vslab
