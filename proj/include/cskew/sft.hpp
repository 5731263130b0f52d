#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "cskew/maps.hpp"
#include "cskew/word.hpp"

namespace cskew {

enum class SftMode { Blockwise, Windowed };

// Blockwise: points are free concatenations of allowed blocks.
// Windowed: points are sequences whose every length-`window` factor is allowed.
struct SftDescription {
  int window = 0;
  std::vector<Word> allowed;  // sorted, unique
  SftMode mode = SftMode::Windowed;
};

SftDescription make_sft(int window, std::vector<Word> allowed, SftMode mode);
// Windowed SFT of the single periodic sequence w^Z.
SftDescription orbit_sft(const Word& w);
// Drops windows that cannot occur in a bi-infinite point.
SftDescription recurrent_core(const SftDescription& s);
// Factors of length len of bi-infinite points (windowed descriptions), sorted.
std::vector<Word> sft_words(const SftDescription& s, int len);
// True if every window of w is in the recurrent core (windowed) or w is a block string (blockwise).
bool sft_allows(const SftDescription& s, const Word& w);
double sft_entropy(const SftDescription& s);
// Random walk on the recurrent core.
Word sample_sft_word(const SftDescription& s, int len, std::mt19937_64& rng);

struct JoinCertificate {
  int N0 = 0;
  int N1 = 0;
  double a = 0.0;
  double b = 0.0;
  std::array<std::vector<Word>, 4> word_classes;  // classes i) to iv)
};

struct JoinChecks {
  bool contains_inputs = false;
  bool rejects_zero_block = false;
  int samples = 0, samples_admissible = 0;
  int bridges = 0, bridges_allowed = 0;
  int bridges_extended = 0;  // pairs that needed a seam extension before the recipe applied
  bool ok() const {
    return contains_inputs && rejects_zero_block && samples_admissible == samples && bridges_allowed == bridges;
  }
};

struct JoinResult {
  SftDescription s3;
  JoinCertificate cert;
  JoinChecks checks;
};

struct Connector {
  int recipe_case = 0;  // 1, 2 or 3
  Word eta;
};

// Bridge for v, w in the joined language; v may end and w may start with fewer than N1 zeros.
Connector join_connector(const JoinCertificate& cert, const Word& v, const Word& w);

// The recipe needs the last 2N1 symbols of v and the first 2N1 of w to be class i) words.
// join_bridge first extends v to the right and w to the left inside the joined SFT until
// that holds (shortest extension), then applies join_connector.
struct Bridge {
  Word v_ext;  // appended to v
  Word w_ext;  // prepended to w
  Connector recipe;
  Word eta() const { return v_ext + recipe.eta + w_ext; }
};
Bridge join_bridge(const JoinResult& res, const Word& v, const Word& w);

JoinResult join_sfts(const FiberPair& pair, const SftDescription& s1, const SftDescription& s2,
                     std::uint64_t seed = 1, const Tolerances& tol = {}, int samples = 200, int sample_len = 60,
                     int bridges = 50);

struct HorseshoeBuild {
  std::vector<Word> words;
  int k = 0;
  double a = 0.0;
  double epsilon = 0.0;
  double L = 0.0;
  double z_lower = 0.0;  // Z = [z_lower, 1]
  int ell = 0;
  int ell_prime = 0;
  int s = 0;
  std::vector<Word> padded;
  double p_minus = 0.0;
  double contraction_sup = 0.0;
  double entropy = 0.0;
};

HorseshoeBuild build_horseshoe(const FiberPair& pair, const std::vector<Word>& words, double epsilon, double L,
                               double a, const Tolerances& tol = {}, int grid_n = 1000);
SftDescription horseshoe_sft(const HorseshoeBuild& h);

// Admissible length-k words w with f_[w](a) > a, in lexicographic order.
std::vector<Word> crossing_words(const FiberPair& pair, int k, double a, const Tolerances& tol = {});

// Least k <= cap making xi 0^k eta admissible at 1, or -1.
int mixing_gap(const FiberPair& pair, const Word& xi, const Word& eta, int cap = 64, double tol = 1e-12);

}  // namespace cskew
