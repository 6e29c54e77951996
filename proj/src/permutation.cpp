#include "capitula/permutation.hpp"

#include <cctype>
#include <numeric>
#include <string>

#include "capitula/error.hpp"

namespace capitula {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > kMaxDegree) {
    throw Error("permutation degree " + std::to_string(degree) + " exceeds " +
                std::to_string(kMaxDegree));
  }
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.size() > kMaxDegree) throw Error("permutation degree too large");
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x]) throw Error("images do not form a bijection");
    seen[x] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::parse(std::size_t degree, std::string_view text) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw Error("malformed cycle string '" + std::string(text) + "': " + why);
  };

  skip_ws();
  if (i == text.size()) fail("empty");
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<std::size_t> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;  // "()" denotes the identity
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = i;
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > kMaxDegree) fail("point too large");
        ++i;
      }
      if (i == start) fail("expected a point");
      if (value < 1 || value > degree) {
        throw Error("point " + std::to_string(value) + " out of range 1.." +
                    std::to_string(degree));
      }
      if (used[value - 1]) fail("cycles are not disjoint");
      used[value - 1] = true;
      cycle.push_back(value - 1);
      skip_ws();
      if (i == text.size()) fail("unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      fail("unexpected character");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      result.images_[cycle[k]] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
    }
  }
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation out = *this;
  out *= rhs;
  return out;
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  if (rhs.degree() != degree()) throw Error("degree mismatch in product");
  if (&rhs == this) {
    const auto copy = rhs.images_;
    for (auto& x : images_) x = copy[x];
    return *this;
  }
  for (auto& x : images_) x = rhs.images_[x];
  return *this;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    out.images_[images_[x]] = static_cast<Point>(x);
  }
  return out;
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? 0ULL - static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1ULL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& h) const {
  return h.inverse() * (*this) * h;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::size_t Permutation::first_moved_point() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return x;
  }
  return images_.size();
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (!first) out += ',';
      out += std::to_string(y + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image table
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace capitula
