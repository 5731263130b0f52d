#pragma once

#include <cstddef>
#include <vector>

namespace cskew {

// Square cost matrix in row-major order.
struct CostMatrix {
  std::size_t n = 0;
  std::vector<double> c;
  double operator()(std::size_t i, std::size_t j) const { return c[i * n + j]; }
};

// Minimum total cost of a perfect matching (Hungarian method with potentials).
double assignment_cost(const CostMatrix& m, std::vector<std::size_t>* match = nullptr);

// Same minimum by trying all n! permutations; for small n only.
double permutation_cost(const CostMatrix& m);

}  // namespace cskew
