#include "cskew/symbolic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>

#include "cskew/errors.hpp"
#include "cskew/parallel.hpp"

namespace cskew {

bool admissible_at(const FiberPair& pair, const Word& w, double x, double tol) noexcept {
  for (std::size_t k = 0; k < w.size(); ++k)
    if (!apply_symbol(pair, w[k], x, tol)) return false;
  return true;
}

ForwardInterval forward_endpoint(const FiberPair& pair, const Word& w, double tol) {
  if (!is_forward_admissible(pair, w, tol))
    throw Error(ErrorCode::EmptyInterval, "word " + w.str() + " is not admissible at 1");
  return {w, invert_word(pair, w, 0.0, tol)};
}

BackwardInterval backward_endpoint(const FiberPair& pair, const Word& w, double tol) {
  if (!is_forward_admissible(pair, w, tol))
    throw Error(ErrorCode::EmptyInterval, "word " + w.str() + " is not admissible at 1");
  return {w, std::min(eval_word(pair, w, 1.0, tol), 1.0)};
}

namespace {

struct Node {
  std::string prefix;
  double x;
};

class NodeBudget {
public:
  explicit NodeBudget(std::uint64_t cap) : cap_(cap) {}
  void charge(std::uint64_t k) {
    if (used_.fetch_add(k) + k > cap_)
      throw Error(ErrorCode::ResourceLimit, "node budget of " + std::to_string(cap_) + " exceeded");
  }

private:
  std::uint64_t cap_;
  std::atomic<std::uint64_t> used_{0};
};

// Breadth-first expansion to `depth`; counts[k] receives the nodes seen at depth k.
std::vector<Node> expand(const FiberPair& pair, int depth, double tol, std::vector<std::uint64_t>& counts,
                         NodeBudget& budget) {
  std::vector<Node> level{{"", 1.0}};
  for (int k = 1; k <= depth; ++k) {
    std::vector<Node> next;
    next.reserve(level.size() * 2);
    for (const auto& nd : level)
      for (int s = 0; s < 2; ++s) {
        double x = nd.x;
        if (apply_symbol(pair, s, x, tol)) next.push_back({nd.prefix + char('0' + s), x});
      }
    counts[k] += next.size();
    budget.charge(next.size());
    level = std::move(next);
  }
  return level;
}

int split_depth(int n, int workers) {
  if (workers <= 1) return 0;
  return std::min(n, 10);
}

// Depth-first walk below `root` (at depth `from`) down to depth n.
template <class Leaf>
void walk(const FiberPair& pair, const Node& root, int from, int n, double tol, std::uint64_t* counts,
          NodeBudget& budget, Leaf&& leaf) {
  std::string path = root.prefix;
  std::vector<double> xs(n + 1);
  std::vector<int> sym(n + 1, -1);
  xs[from] = root.x;
  if (from == n) {
    leaf(path);
    return;
  }
  std::uint64_t local = 0;
  int k = from;
  // sym[k+1] is the last symbol tried below depth k
  while (k >= from) {
    int s = ++sym[k + 1];
    if (s > 1) {
      sym[k + 1] = -1;
      if (k == from) break;
      path.pop_back();
      --k;
      continue;
    }
    double x = xs[k];
    if (!apply_symbol(pair, s, x, tol)) continue;
    ++local;
    ++counts[k + 1];
    path.push_back(char('0' + s));
    if (k + 1 == n) {
      leaf(path);
      path.pop_back();
      continue;
    }
    xs[k + 1] = x;
    ++k;
    if (local >= 4096) budget.charge(local), local = 0;
  }
  budget.charge(local);
}

}  // namespace

std::vector<LanguageCount> language_counts(const FiberPair& pair, int n_max, const Budgets& budgets,
                                           double tol) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  NodeBudget budget(budgets.node_cap);
  std::vector<std::uint64_t> counts(n_max + 1, 0);
  int depth = split_depth(n_max, budgets.workers);
  auto roots = expand(pair, depth, tol, counts, budget);

  std::vector<std::vector<std::uint64_t>> partial(roots.size(), std::vector<std::uint64_t>(n_max + 1, 0));
  parallel_for(roots.size(), budgets.workers, [&](std::size_t i) {
    walk(pair, roots[i], depth, n_max, tol, partial[i].data(), budget, [](const std::string&) {});
  });
  for (const auto& p : partial)
    for (int k = depth + 1; k <= n_max; ++k) counts[k] += p[k];

  std::vector<LanguageCount> out;
  for (int k = 1; k <= n_max; ++k)
    out.push_back({k, counts[k], counts[k] ? std::log(static_cast<double>(counts[k])) / k : 0.0});
  return out;
}

LanguageCount count_admissible(const FiberPair& pair, int n, const Budgets& budgets, double tol) {
  return language_counts(pair, n, budgets, tol).back();
}

std::vector<Word> list_admissible(const FiberPair& pair, int n, const Budgets& budgets, double tol) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  NodeBudget budget(budgets.node_cap);
  std::vector<std::uint64_t> counts(n + 1, 0);
  int depth = split_depth(n, budgets.workers);
  auto roots = expand(pair, depth, tol, counts, budget);

  std::vector<std::vector<Word>> partial(roots.size());
  parallel_for(roots.size(), budgets.workers, [&](std::size_t i) {
    std::vector<std::uint64_t> scratch(n + 1, 0);
    walk(pair, roots[i], depth, n, tol, scratch.data(), budget,
         [&](const std::string& w) { partial[i].emplace_back(w); });
  });
  std::vector<Word> out;
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<Word> list_admissible_up_to(const FiberPair& pair, int n, const Budgets& budgets, double tol) {
  std::vector<Word> out;
  for (int k = 1; k <= n; ++k) {
    auto level = list_admissible(pair, k, budgets, tol);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<HetCandidate> het_words(const FiberPair& pair, int n, double het_tol, double tol) {
  if (!(het_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  std::vector<HetCandidate> out;
  if (n < 1) return out;
  std::vector<Node> level{{"", 1.0}};
  for (int k = 1; k <= n; ++k) {
    std::vector<Node> next;
    for (const auto& nd : level)
      for (int s = 0; s < 2; ++s) {
        double x = nd.x;
        if (!apply_symbol(pair, s, x, tol)) continue;
        next.push_back({nd.prefix + char('0' + s), x});
        if (x >= -tol && x <= het_tol) out.push_back({Word(next.back().prefix), std::max(x, 0.0)});
      }
    level = std::move(next);
  }
  return out;
}

int max_consecutive_ones(const FiberPair& pair, int cap, double tol) {
  double x = 1.0;
  int k = 0;
  while (x >= pair.d() - tol) {
    x = pair.f1()(std::max(x, pair.d()));
    if (++k > cap)
      throw Error(ErrorCode::NonTerminating, "f1 orbit of 1 stays above d for " + std::to_string(cap) + " steps");
  }
  return k;
}

}  // namespace cskew
