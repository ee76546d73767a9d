#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidkit {

/// A bijection of {1, ..., n}. Positions are 1-based at the interface.
///
/// Composition follows function composition: `a * b` maps i to a(b(i)),
/// so the right operand acts first.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(int n) : images_(static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("permutation size must be non-negative");
    std::iota(images_.begin(), images_.end(), 0);
  }

  /// Build from a 1-based image table; throws if it is not a bijection.
  static Permutation from_images(const std::vector<int>& one_based) {
    Permutation p;
    const int n = static_cast<int>(one_based.size());
    p.images_.resize(one_based.size());
    std::vector<bool> seen(one_based.size(), false);
    for (int i = 0; i < n; ++i) {
      const int v = one_based[static_cast<std::size_t>(i)];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
        throw std::invalid_argument("image table is not a bijection");
      }
      seen[static_cast<std::size_t>(v - 1)] = true;
      p.images_[static_cast<std::size_t>(i)] = v - 1;
    }
    return p;
  }

  /// The transposition (i i+1).
  static Permutation adjacent(int n, int i) {
    Permutation p(n);
    p.swap_images(i, i + 1);
    return p;
  }

  /// i -> n+1-i.
  static Permutation reversal(int n) {
    Permutation p(n);
    std::reverse(p.images_.begin(), p.images_.end());
    return p;
  }

  int size() const { return static_cast<int>(images_.size()); }

  int operator()(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("position out of range");
    return images_[static_cast<std::size_t>(i - 1)] + 1;
  }

  /// Zero-based raw access for hot loops.
  int raw(std::size_t i) const { return images_[i]; }
  const std::vector<int>& raw_table() const { return images_; }

  std::vector<int> images() const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
    return out;
  }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      p.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    }
    return p;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    Permutation p;
    p.images_.resize(a.images_.size());
    for (std::size_t i = 0; i < a.images_.size(); ++i) {
      p.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
    }
    return p;
  }

  /// Post-compose with the transposition (i i+1): returns s_i * this.
  void left_multiply_adjacent(int i) {
    for (auto& v : images_) {
      if (v == i - 1) {
        v = i;
      } else if (v == i) {
        v = i - 1;
      }
    }
  }

  /// Pre-compose with the transposition (i i+1): returns this * s_i.
  void right_multiply_adjacent(int i) { swap_images(i, i + 1); }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != static_cast<int>(i)) return false;
    }
    return true;
  }

  bool fixes(int i) const { return (*this)(i) == i; }

  /// Number of pairs i < j with p(i) > p(j).
  int inversions() const {
    int count = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      for (std::size_t j = i + 1; j < images_.size(); ++j) {
        if (images_[i] > images_[j]) ++count;
      }
    }
    return count;
  }

  /// Cycles (1-based), each starting at its smallest element, sorted by that element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> cycle;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        cycle.push_back(static_cast<int>(j) + 1);
        j = static_cast<std::size_t>(images_[j]);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  /// Sorted cycle lengths; equal iff conjugate in the symmetric group.
  std::vector<int> cycle_type() const {
    std::vector<int> lengths;
    for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
      if (c.size() < 2) continue;
      any = true;
      os << '(';
      for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
      os << ')';
    }
    if (!any) os << "()";
    return os.str();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  void swap_images(int i, int j) {
    if (i < 1 || j > size()) throw std::out_of_range("transposition out of range");
    std::swap(images_[static_cast<std::size_t>(i - 1)], images_[static_cast<std::size_t>(j - 1)]);
  }

  std::vector<int> images_;
};

}  // namespace braidkit
