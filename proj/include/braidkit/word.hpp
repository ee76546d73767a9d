#pragma once

#include <cstdlib>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidkit {

/// A word in the Artin generators of B_n. Letter j > 0 is sigma_j, j < 0 is
/// sigma_{|j|}^{-1}.
///
/// Words are values; equality of words is literal. Group equality lives in
/// garside.hpp.
class BraidWord {
 public:
  BraidWord() : strands_(1) {}

  explicit BraidWord(int strands, std::vector<int> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    validate();
  }

  BraidWord(int strands, std::initializer_list<int> letters)
      : BraidWord(strands, std::vector<int>(letters)) {}

  static BraidWord identity(int strands) { return BraidWord(strands); }

  static BraidWord generator(int strands, int letter) { return BraidWord(strands, {letter}); }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Sum of the letter signs; the abelianization B_n -> Z.
  long exponent_sum() const {
    long s = 0;
    for (int l : letters_) s += l > 0 ? 1 : -1;
    return s;
  }

  BraidWord inverse() const {
    std::vector<int> out(letters_.rbegin(), letters_.rend());
    for (int& l : out) l = -l;
    return BraidWord(strands_, std::move(out), unchecked{});
  }

  /// Cancels adjacent x x^{-1} pairs.
  BraidWord free_reduced() const {
    std::vector<int> out;
    out.reserve(letters_.size());
    for (int l : letters_) {
      if (!out.empty() && out.back() == -l) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return BraidWord(strands_, std::move(out), unchecked{});
  }

  /// Concatenation; cancels inverse pairs across the seam only.
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.strands_ != b.strands_) throw std::invalid_argument("strand count mismatch");
    std::vector<int> out = a.letters_;
    std::size_t k = 0;
    while (k < b.letters_.size() && !out.empty() && out.back() == -b.letters_[k]) {
      out.pop_back();
      ++k;
    }
    out.insert(out.end(), b.letters_.begin() + static_cast<std::ptrdiff_t>(k), b.letters_.end());
    return BraidWord(a.strands_, std::move(out), unchecked{});
  }

  BraidWord& operator*=(const BraidWord& b) { return *this = *this * b; }

  BraidWord pow(long k) const {
    BraidWord base = k < 0 ? inverse() : *this;
    BraidWord out(strands_);
    for (long i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
    return out;
  }

  /// Same letters, viewed in B_m for m >= strands().
  BraidWord widened(int m) const {
    if (m < strands_) throw std::invalid_argument("cannot narrow a braid word");
    return BraidWord(m, letters_, unchecked{});
  }

  /// Every letter index shifted by `offset`, viewed in B_m.
  BraidWord shifted(int offset, int m) const {
    std::vector<int> out;
    out.reserve(letters_.size());
    for (int l : letters_) out.push_back(l > 0 ? l + offset : l - offset);
    return BraidWord(m, std::move(out));
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  struct unchecked {};
  BraidWord(int strands, std::vector<int> letters, unchecked)
      : strands_(strands), letters_(std::move(letters)) {}

  void validate() const {
    if (strands_ < 1) throw std::invalid_argument("a braid needs at least one strand");
    for (int l : letters_) {
      if (l == 0) throw std::invalid_argument("zero is not a generator index");
      if (std::abs(l) > strands_ - 1) {
        throw std::invalid_argument("generator index " + std::to_string(l) +
                                    " out of range for B_" + std::to_string(strands_));
      }
    }
  }

  int strands_;
  std::vector<int> letters_;
};

/// Parses whitespace- or comma-separated signed integers.
inline BraidWord parse_word(std::string_view text, int strands) {
  std::vector<int> letters;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed token '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("malformed token '" + token + "'");
    letters.push_back(value);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return BraidWord(strands, std::move(letters));
}

inline std::string format_word(const BraidWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters().size(); ++i) os << (i ? " " : "") << w.letters()[i];
  return os.str();
}

}  // namespace braidkit
