#include "cskew/word.hpp"

#include <algorithm>

#include "cskew/errors.hpp"

namespace cskew {

Word::Word(std::string_view symbols) : s_(symbols) {
  for (char c : s_)
    if (c != '0' && c != '1')
      throw Error(ErrorCode::InvalidArgument, "word '" + s_ + "' has a symbol other than 0/1");
}

std::size_t Word::count_ones() const noexcept {
  return static_cast<std::size_t>(std::count(s_.begin(), s_.end(), '1'));
}

double Word::freq1() const noexcept {
  return empty() ? 0.0 : static_cast<double>(count_ones()) / static_cast<double>(size());
}

std::size_t Word::leading_zeros() const noexcept {
  auto p = s_.find('1');
  return p == std::string::npos ? s_.size() : p;
}

std::size_t Word::trailing_zeros() const noexcept {
  auto p = s_.rfind('1');
  return p == std::string::npos ? s_.size() : s_.size() - 1 - p;
}

Word Word::repeat(std::size_t m) const {
  std::string out;
  out.reserve(s_.size() * m);
  for (std::size_t i = 0; i < m; ++i) out += s_;
  return Word(std::move(out), Trusted{});
}

Word Word::substr(std::size_t pos, std::size_t n) const { return Word(s_.substr(pos, n), Trusted{}); }

Word Word::with(int symbol) const { return Word(s_ + (symbol ? '1' : '0'), Trusted{}); }

}  // namespace cskew
