#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace cskew {

// Finite string over {0,1}. Symbol 0 is applied first when a word acts on a fiber point.
class Word {
public:
  Word() = default;
  explicit Word(std::string_view symbols);

  static Word zeros(std::size_t n) { return Word(std::string(n, '0'), Trusted{}); }
  static Word ones(std::size_t n) { return Word(std::string(n, '1'), Trusted{}); }

  std::size_t size() const noexcept { return s_.size(); }
  bool empty() const noexcept { return s_.empty(); }
  int operator[](std::size_t i) const noexcept { return s_[i] - '0'; }
  const std::string& str() const noexcept { return s_; }

  std::size_t count_ones() const noexcept;
  std::size_t count_zeros() const noexcept { return size() - count_ones(); }
  double freq1() const noexcept;
  double freq0() const noexcept { return empty() ? 0.0 : 1.0 - freq1(); }
  bool has_zero() const noexcept { return s_.find('0') != std::string::npos; }

  std::size_t leading_zeros() const noexcept;
  std::size_t trailing_zeros() const noexcept;

  Word repeat(std::size_t m) const;
  Word substr(std::size_t pos, std::size_t n = std::string::npos) const;
  Word with(int symbol) const;

  friend Word operator+(const Word& a, const Word& b) { return Word(a.s_ + b.s_, Trusted{}); }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  struct Trusted {};
  Word(std::string s, Trusted) : s_(std::move(s)) {}
  std::string s_;
};

}  // namespace cskew
