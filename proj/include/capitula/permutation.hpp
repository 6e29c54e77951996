#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace capitula {

/// Points are 0-based internally; all text I/O is 1-based cycle notation.
using Point = std::uint16_t;

inline constexpr std::size_t kMaxDegree = 65535;

/**
 * A bijection of {0, ..., degree-1}.
 *
 * Products act on the right, as in GAP: x^(g*h) = (x^g)^h, so `g * h`
 * applies g first. The cycle string "(1,2,3)" maps 1 to 2.
 */
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  /// Throws capitula::Error unless `images` is a bijection.
  static Permutation from_images(std::vector<Point> images);
  /// Parses a product of cycles such as "(1,4,7)(2,5,8)" or "()" on {1..degree}.
  static Permutation parse(std::size_t degree, std::string_view cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);
  Permutation inverse() const;
  Permutation pow(long long exponent) const;
  /// h^-1 * this * h
  Permutation conjugate_by(const Permutation& h) const;

  bool is_identity() const noexcept;
  /// Smallest moved point, or degree() for the identity.
  std::size_t first_moved_point() const noexcept;
  std::uint64_t order() const;

  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace capitula
