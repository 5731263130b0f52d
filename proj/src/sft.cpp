#include "cskew/sft.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "cskew/errors.hpp"
#include "cskew/numfmt.hpp"
#include "cskew/orbits.hpp"
#include "cskew/symbolic.hpp"

namespace cskew {

namespace {

using StrSet = std::unordered_set<std::string>;

std::vector<Word> to_words(const std::set<std::string>& s) {
  std::vector<Word> out;
  out.reserve(s.size());
  for (const auto& x : s) out.emplace_back(x);
  return out;
}

// Successor lists of the window graph: window u -> windows starting with u[1:].
struct WindowGraph {
  int r = 0;
  std::vector<std::string> nodes;
  std::vector<std::vector<std::size_t>> succ;

  explicit WindowGraph(const SftDescription& s) : r(s.window) {
    std::unordered_map<std::string, std::vector<std::size_t>> by_prefix;
    for (const auto& w : s.allowed) {
      by_prefix[w.str().substr(0, r - 1)].push_back(nodes.size());
      nodes.push_back(w.str());
    }
    succ.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      auto it = by_prefix.find(nodes[i].substr(1));
      if (it != by_prefix.end()) succ[i] = it->second;
    }
  }
};

void require_windowed(const SftDescription& s) {
  if (s.mode != SftMode::Windowed) throw Error(ErrorCode::InvalidArgument, "operation needs a windowed SFT");
}

}  // namespace

SftDescription make_sft(int window, std::vector<Word> allowed, SftMode mode) {
  if (window < 1) throw Error(ErrorCode::InvalidArgument, "SFT window must be positive");
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  if (allowed.empty()) throw Error(ErrorCode::InvalidArgument, "SFT needs at least one allowed word");
  for (const auto& w : allowed)
    if (static_cast<int>(w.size()) != window)
      throw Error(ErrorCode::InvalidArgument, "allowed word " + w.str() + " does not have the window length");
  return {window, std::move(allowed), mode};
}

SftDescription orbit_sft(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::InvalidArgument, "orbit SFT needs a nonempty word");
  const int r = static_cast<int>(w.size()) + 1;
  Word ww = w.repeat(3);
  std::vector<Word> windows;
  for (std::size_t i = 0; i < w.size(); ++i) windows.push_back(ww.substr(i, r));
  return make_sft(r, std::move(windows), SftMode::Windowed);
}

SftDescription recurrent_core(const SftDescription& s) {
  require_windowed(s);
  const int r = s.window;
  std::vector<std::string> alive;
  for (const auto& w : s.allowed) alive.push_back(w.str());
  for (bool changed = true; changed;) {
    changed = false;
    std::unordered_map<std::string, int> prefixes, suffixes;
    for (const auto& w : alive) ++prefixes[w.substr(0, r - 1)], ++suffixes[w.substr(1)];
    std::vector<std::string> keep;
    for (const auto& w : alive) {
      if (prefixes.count(w.substr(1)) && suffixes.count(w.substr(0, r - 1)))
        keep.push_back(w);
      else
        changed = true;
    }
    alive.swap(keep);
  }
  SftDescription out{r, {}, SftMode::Windowed};
  for (const auto& w : alive) out.allowed.emplace_back(w);
  std::sort(out.allowed.begin(), out.allowed.end());
  return out;
}

std::vector<Word> sft_words(const SftDescription& s, int len) {
  require_windowed(s);
  if (len < 1) return {};
  auto core = recurrent_core(s);
  std::set<std::string> out;
  if (len <= core.window) {
    for (const auto& w : core.allowed)
      for (int i = 0; i + len <= core.window; ++i) out.insert(w.str().substr(i, len));
    return to_words(out);
  }
  WindowGraph g(core);
  // depth-first extension of each start window by len - r symbols
  struct Frame {
    std::size_t node;
    std::string text;
  };
  std::vector<Frame> stack;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) stack.push_back({i, g.nodes[i]});
  while (!stack.empty()) {
    auto f = std::move(stack.back());
    stack.pop_back();
    if (static_cast<int>(f.text.size()) == len) {
      out.insert(std::move(f.text));
      continue;
    }
    for (auto j : g.succ[f.node]) stack.push_back({j, f.text + g.nodes[j].back()});
  }
  return to_words(out);
}

bool sft_allows(const SftDescription& s, const Word& w) {
  const int r = s.window;
  const int n = static_cast<int>(w.size());
  if (s.mode == SftMode::Blockwise) {
    if (n % r) return false;
    for (int i = 0; i < n; i += r)
      if (!std::binary_search(s.allowed.begin(), s.allowed.end(), w.substr(i, r))) return false;
    return true;
  }
  auto core = recurrent_core(s);
  if (n < r) {
    for (const auto& x : core.allowed)
      if (x.str().find(w.str()) != std::string::npos) return true;
    return false;
  }
  for (int i = 0; i + r <= n; ++i)
    if (!std::binary_search(core.allowed.begin(), core.allowed.end(), w.substr(i, r))) return false;
  return true;
}

double sft_entropy(const SftDescription& s) {
  if (s.mode == SftMode::Blockwise)
    return std::log(static_cast<double>(s.allowed.size())) / static_cast<double>(s.window);

  // Transition matrix over (window-1)-prefixes; one edge per allowed window.
  const int r = s.window;
  std::unordered_map<std::string, std::size_t> index;
  auto id = [&](const std::string& st) { return index.emplace(st, index.size()).first->second; };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& w : s.allowed) edges.emplace_back(id(w.str().substr(0, r - 1)), id(w.str().substr(1)));
  const std::size_t n = index.size();

  // Power iteration on B = A + I, whose spectral radius is rho(A) + 1 and which has no
  // peripheral eigenvalues besides the Perron root, so periodic shifts still converge.
  std::vector<double> v(n, 1.0 / static_cast<double>(n)), next(n);
  double lambda = 0.0;
  int stable = 0;
  for (int it = 0; it < 1'000'000; ++it) {
    next = v;
    for (auto [from, to] : edges) next[to] += v[from];
    double norm = 0.0;
    for (double x : next) norm += x;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] > 1e-250) {
        double q = next[i] / v[i];
        lo = std::min(lo, q);
        hi = std::max(hi, q);
      }
    }
    for (std::size_t i = 0; i < n; ++i) next[i] /= norm;
    v.swap(next);
    bool bracket = hi - lo <= 1e-10 * hi;
    stable = std::abs(norm - lambda) <= 1e-13 * norm ? stable + 1 : 0;
    lambda = norm;
    if (bracket || stable >= 50) break;
  }
  double rho = lambda - 1.0;
  return rho > 0.0 ? std::log(rho) : -std::numeric_limits<double>::infinity();
}

Word sample_sft_word(const SftDescription& s, int len, std::mt19937_64& rng) {
  require_windowed(s);
  auto core = recurrent_core(s);
  if (core.allowed.empty()) throw Error(ErrorCode::InvalidArgument, "SFT has no bi-infinite points");
  WindowGraph g(core);
  std::size_t node = std::uniform_int_distribution<std::size_t>(0, g.nodes.size() - 1)(rng);
  std::string text = g.nodes[node];
  while (static_cast<int>(text.size()) < len) {
    const auto& nx = g.succ[node];
    node = nx[std::uniform_int_distribution<std::size_t>(0, nx.size() - 1)(rng)];
    text.push_back(g.nodes[node].back());
  }
  return Word(text.substr(0, static_cast<std::size_t>(len)));
}

Connector join_connector(const JoinCertificate& cert, const Word& v, const Word& w) {
  const int N1 = cert.N1;
  const int l = static_cast<int>(v.trailing_zeros()), m = static_cast<int>(w.leading_zeros());
  if (l >= N1 || m >= N1 || static_cast<int>(v.size()) <= l || static_cast<int>(w.size()) <= m)
    throw Error(ErrorCode::InvalidArgument, "connector needs v, w with zero runs shorter than N1 at the seam");
  if (l == 0 && m == 0) return {1, Word::zeros(N1)};
  if (l == 0 || m == 0) return {2, Word::zeros(N1 - l - m)};
  return {3, l + m < N1 ? Word::zeros(N1 - l - m) : Word()};
}

namespace {

// Shortest extension of `text` (forward: appended, else prepended) whose boundary window lies in `target`.
std::optional<std::string> extend_to(const SftDescription& core, const std::set<std::string>& target,
                                     const std::string& text, bool forward) {
  const int r = core.window;
  if (static_cast<int>(text.size()) < r) return std::nullopt;
  std::string start = forward ? text.substr(text.size() - r) : text.substr(0, r);
  if (target.count(start)) return std::string();
  WindowGraph g(core);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) index.emplace(g.nodes[i], i);
  auto it = index.find(start);
  if (it == index.end()) return std::nullopt;
  std::vector<std::vector<std::size_t>> next = g.succ;
  if (!forward) {
    std::vector<std::vector<std::size_t>> pred(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      for (auto j : g.succ[i]) pred[j].push_back(i);
    next = std::move(pred);
  }
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(g.nodes.size(), none);
  std::deque<std::size_t> queue{it->second};
  parent[it->second] = it->second;
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    if (target.count(g.nodes[i])) {
      std::string ext;
      for (auto k = i; k != it->second; k = parent[k]) ext.push_back(forward ? g.nodes[k].back() : g.nodes[k].front());
      if (forward) std::reverse(ext.begin(), ext.end());
      return ext;
    }
    for (auto j : next[i])
      if (parent[j] == none) parent[j] = i, queue.push_back(j);
  }
  return std::nullopt;
}

std::set<std::string> union_words(const SftDescription& s1, const SftDescription& s2, int len) {
  std::set<std::string> out;
  for (const auto& w : sft_words(s1, len)) out.insert(w.str());
  for (const auto& w : sft_words(s2, len)) out.insert(w.str());
  return out;
}

bool shares_word(const SftDescription& s1, const SftDescription& s2, int len) {
  auto a = sft_words(s1, len), b = sft_words(s2, len);
  std::vector<Word> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return !both.empty();
}

}  // namespace

Bridge join_bridge(const JoinResult& res, const Word& v, const Word& w) {
  auto core = recurrent_core(res.s3);
  std::set<std::string> cls1;
  for (const auto& x : res.cert.word_classes[0]) cls1.insert(x.str());
  auto ve = extend_to(core, cls1, v.str(), true);
  auto we = extend_to(core, cls1, w.str(), false);
  if (!ve || !we) throw Error(ErrorCode::InvalidArgument, "word cannot be extended to a class i) seam in the joined SFT");
  Bridge b{Word(*ve), Word(*we), {}};
  b.recipe = join_connector(res.cert, v + b.v_ext, b.w_ext + w);
  return b;
}

JoinResult join_sfts(const FiberPair& pair, const SftDescription& s1, const SftDescription& s2, std::uint64_t seed,
                     const Tolerances& tol, int samples, int sample_len, int bridges) {
  require_windowed(s1);
  require_windowed(s2);
  const int r = std::max(s1.window, s2.window);

  // S1 and S2 intersect iff the SFT of their common r-windows has a bi-infinite point
  {
    auto a = sft_words(s1, r), b = sft_words(s2, r);
    std::vector<Word> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    if (!both.empty() && !recurrent_core({r, both, SftMode::Windowed}).allowed.empty())
      throw Error(ErrorCode::NotDisjoint, "the two SFTs share a bi-infinite sequence");
  }
  for (const auto* s : {&s1, &s2})
    if (sft_allows(*s, Word::zeros(static_cast<std::size_t>(s->window))))
      throw Error(ErrorCode::ContainsZeroSequence, "an input SFT contains 0^Z");

  JoinResult res;
  auto& c = res.cert;
  constexpr int cap = 10'000;
  for (c.N0 = 1;; ++c.N0) {
    if (c.N0 > cap) throw Error(ErrorCode::NonTerminating, "no admissible N0 found");
    Word z = Word::zeros(static_cast<std::size_t>(c.N0));
    if (sft_allows(s1, z) || sft_allows(s2, z)) continue;
    Word per = Word::zeros(static_cast<std::size_t>(c.N0 - 1)).with(1);
    if (!is_forward_admissible(pair, per, tol.bisect)) continue;
    auto fp = fixed_points(pair, per, tol);
    if (fp.variant == FixedPointVariant::None) continue;
    c.a = fp.plus->point;
    c.b = fp.minus->point;
    break;
  }
  double x = c.a;
  int n = 0;
  for (c.N1 = 2 * c.N0 + 1;; ++c.N1) {
    if (c.N1 > cap) throw Error(ErrorCode::NonTerminating, "no N1 with f0^N1(a) > b found");
    while (n < c.N1) x = pair.f0()(x), ++n;
    if (c.N1 >= r && x > c.b && !shares_word(s1, s2, c.N1)) break;
  }

  const int N1 = c.N1, len = 2 * N1;
  std::vector<std::set<std::string>> U(static_cast<std::size_t>(len) + 1);
  for (int m = 1; m <= len; ++m) U[m] = union_words(s1, s2, m);
  std::array<std::set<std::string>, 4> cls;
  cls[0] = U[len];
  for (int l = 1; l <= N1; ++l)
    for (const auto& v : U[len - l]) {
      cls[1].insert(std::string(l, '0') + v);
      cls[2].insert(v + std::string(l, '0'));
    }
  for (int lv = 1; lv < N1; ++lv)
    for (const auto& v : U[lv])
      for (const auto& w : U[N1 - lv]) cls[3].insert(v + std::string(N1, '0') + w);

  std::set<std::string> all;
  for (int i = 0; i < 4; ++i) {
    all.insert(cls[i].begin(), cls[i].end());
    c.word_classes[i] = to_words(cls[i]);
  }
  res.s3 = {len, to_words(all), SftMode::Windowed};

  // verification
  auto& chk = res.checks;
  auto core = recurrent_core(res.s3);
  chk.contains_inputs = true;
  for (const auto* s : {&s1, &s2})
    for (const auto& w : sft_words(*s, len))
      chk.contains_inputs = chk.contains_inputs && sft_allows(core, w);
  chk.rejects_zero_block = !sft_allows(core, Word::zeros(static_cast<std::size_t>(len)));

  std::mt19937_64 rng(seed);
  chk.samples = samples;
  for (int i = 0; i < samples; ++i)
    if (is_forward_admissible(pair, sample_sft_word(core, sample_len, rng), tol.bisect)) ++chk.samples_admissible;

  chk.bridges = bridges;
  for (int i = 0; i < bridges; ++i) {
    Word v = sample_sft_word(core, len + N1, rng), w = sample_sft_word(core, len + N1, rng);
    auto b = join_bridge(res, v, w);
    if (b.v_ext.size() + b.w_ext.size() > 0) ++chk.bridges_extended;
    if (sft_allows(core, v + b.eta() + w)) ++chk.bridges_allowed;
  }
  return res;
}

std::vector<Word> crossing_words(const FiberPair& pair, int k, double a, const Tolerances& tol) {
  std::vector<Word> out;
  for (const auto& w : list_admissible(pair, k, {}, tol.bisect)) {
    if (!admissible_at(pair, w, a, tol.bisect)) continue;
    if (eval_word(pair, w, a, tol.bisect) > a) out.push_back(w);
  }
  return out;
}

HorseshoeBuild build_horseshoe(const FiberPair& pair, const std::vector<Word>& words, double epsilon, double L,
                               double a, const Tolerances& tol, int grid_n) {
  if (words.empty()) throw Error(ErrorCode::InvalidArgument, "horseshoe needs at least one word");
  if (!(epsilon > 0.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  const double logf01 = std::abs(std::log(pair.f0().derivative(1.0)));
  if (!(L > 0.0 && L < logf01))
    throw Error(ErrorCode::InvalidArgument, "L must lie in (0, |log f0'(1)|) = (0, " + fmt17(logf01) + ")");

  HorseshoeBuild h;
  h.words = words;
  h.k = static_cast<int>(words.front().size());
  h.a = a;
  h.epsilon = epsilon;
  h.L = L;
  for (const auto& w : words) {
    if (static_cast<int>(w.size()) != h.k) throw Error(ErrorCode::InvalidArgument, "words differ in length");
    if (!admissible_at(pair, w, a, tol.bisect) || !(eval_word(pair, w, a, tol.bisect) > a))
      throw Error(ErrorCode::CrossingViolated, "word " + w.str() + " does not carry a above itself");
  }

  const double thr = std::exp(-L);
  const auto& f0 = pair.f0();
  if (f0.derivative(0.0) <= thr) {
    h.z_lower = 0.0;
  } else {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (f0.derivative(mid) > thr ? lo : hi) = mid;
    }
    h.z_lower = hi;
  }
  double x = a;
  while (x < h.z_lower) {
    x = f0(x);
    if (++h.ell > 1'000'000) throw Error(ErrorCode::NonTerminating, "f0 orbit of a never reaches Z");
  }
  // guard against 2k eps / L landing a rounding error above an integer
  h.ell_prime = static_cast<int>(std::ceil(2.0 * h.k * epsilon / L - 1e-9));
  h.s = h.ell + h.ell_prime;

  h.p_minus = 1.0;
  for (const auto& w : words) {
    Word g = w + Word::zeros(static_cast<std::size_t>(h.s));
    h.padded.push_back(g);
    auto fp = fixed_points(pair, g, tol);
    if (fp.variant == FixedPointVariant::None)
      throw Error(ErrorCode::NoContraction, "padded word " + g.str() + " has no fixed point");
    h.p_minus = std::min(h.p_minus, fp.minus->point);
  }
  h.contraction_sup = 0.0;
  for (const auto& g : h.padded)
    for (int i = 0; i < grid_n; ++i) {
      double y = h.p_minus + (1.0 - h.p_minus) * i / std::max(grid_n - 1, 1);
      if (!admissible_at(pair, g, y, tol.bisect))
        throw Error(ErrorCode::NoContraction, "padded word " + g.str() + " not admissible on [p-,1]");
      h.contraction_sup = std::max(h.contraction_sup, deriv_word(pair, g, y, tol.bisect));
    }
  if (!(h.contraction_sup < 1.0))
    throw Error(ErrorCode::NoContraction, "sup of g_i' on [p-,1] is " + fmt17(h.contraction_sup));
  h.entropy = std::log(static_cast<double>(words.size())) / static_cast<double>(h.k + h.s);
  return h;
}

SftDescription horseshoe_sft(const HorseshoeBuild& h) {
  return make_sft(h.k + h.s, h.padded, SftMode::Blockwise);
}

int mixing_gap(const FiberPair& pair, const Word& xi, const Word& eta, int cap, double tol) {
  if (!is_forward_admissible(pair, xi, tol) || !is_forward_admissible(pair, eta, tol)) return -1;
  double x = eval_word(pair, xi, 1.0, tol);
  for (int k = 0; k <= cap; ++k) {
    if (admissible_at(pair, eta, x, tol)) return k;
    x = pair.f0()(std::clamp(x, 0.0, 1.0));
  }
  return -1;
}

}  // namespace cskew
