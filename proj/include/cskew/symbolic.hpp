#pragma once

#include <cstdint>
#include <vector>

#include "cskew/maps.hpp"
#include "cskew/word.hpp"

namespace cskew {

// Admissible interval [a,1] of a word: f_[w](a) = 0.
struct ForwardInterval {
  Word word;
  double a = 0.0;
};

// Backward interval [0,b]: the inverse composition of the word sends b to 1.
struct BackwardInterval {
  Word word;
  double b = 1.0;
};

struct LanguageCount {
  int n = 0;
  std::uint64_t count = 0;
  double entropy_upper = 0.0;
};

struct HetCandidate {
  Word word;
  double residual = 0.0;
};

bool admissible_at(const FiberPair& pair, const Word& w, double x, double tol = 1e-12) noexcept;
inline bool is_forward_admissible(const FiberPair& pair, const Word& w, double tol = 1e-12) noexcept {
  return admissible_at(pair, w, 1.0, tol);
}

ForwardInterval forward_endpoint(const FiberPair& pair, const Word& w, double tol = 1e-12);
BackwardInterval backward_endpoint(const FiberPair& pair, const Word& w, double tol = 1e-12);

// Counts for every length 1..n_max from a single tree walk.
std::vector<LanguageCount> language_counts(const FiberPair& pair, int n_max, const Budgets& budgets = {},
                                           double tol = 1e-12);
LanguageCount count_admissible(const FiberPair& pair, int n, const Budgets& budgets = {}, double tol = 1e-12);
// Admissible words of length n in lexicographic order.
std::vector<Word> list_admissible(const FiberPair& pair, int n, const Budgets& budgets = {},
                                  double tol = 1e-12);

// All admissible words of lengths 1..n, shortest first.
std::vector<Word> list_admissible_up_to(const FiberPair& pair, int n, const Budgets& budgets = {},
                                        double tol = 1e-12);

// Admissible words of length 1..n with f_[w](1) in [0, het_tol], shortest first.
std::vector<HetCandidate> het_words(const FiberPair& pair, int n, double het_tol, double tol = 1e-12);

// Number of f1 steps from 1 before dropping below d.
int max_consecutive_ones(const FiberPair& pair, int cap = 100'000, double tol = 1e-12);

}  // namespace cskew
