#include "capitula/cubic.hpp"

#include <algorithm>
#include <charconv>

#include "capitula/error.hpp"

namespace capitula {

PrimePowers factorize(std::uint64_t n) {
  PrimePowers out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f.front().second == 1;
}

std::uint64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (auto [p, e] : factorize(n)) r *= p;
  return r;
}

std::string format_factorization(const PrimePowers& f) {
  std::string out;
  for (auto [p, e] : f) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::uint64_t evaluate_factorization(std::string_view text) {
  if (text.empty()) throw Error("empty factorization");
  std::uint64_t value = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('*', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(pos, end - pos);
    std::size_t caret = term.find('^');
    std::uint64_t base = 0;
    int exp = 1;
    auto parse = [&](std::string_view s, auto& out) {
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw Error("malformed factorization '" + std::string(text) + "'");
      }
    };
    parse(term.substr(0, caret), base);
    if (caret != std::string_view::npos) parse(term.substr(caret + 1), exp);
    for (int i = 0; i < exp; ++i) value *= base;
    pos = end + 1;
  }
  return value;
}

std::string to_string(Species s) {
  switch (s) {
    case Species::IA: return "IA";
    case Species::IB: return "IB";
    case Species::II: return "II";
  }
  return "II";
}

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Profile of a cube-free n > 1 in the representative given.
RadicandProfile profile_of(std::uint64_t n, std::uint64_t input, const PrimePowers& factors) {
  RadicandProfile r;
  r.input = input;
  r.n = n;
  r.a = 1;
  r.b = 1;
  std::uint64_t rad_prime_to_3 = 1;
  bool three = false;
  for (auto [p, e] : factors) {
    if (e >= 3) throw Error("radicand " + std::to_string(n) + " is not cube-free");
    (e == 1 ? r.a : r.b) *= p;
    r.prime_classes[p] = static_cast<int>(p % 9);
    if (p == 3) {
      three = true;
    } else {
      rad_prime_to_3 *= p;
    }
  }
  r.normalized = r.b < r.a;
  const std::uint64_t m9 = n % 9;
  if (three) {
    r.species = Species::IA;
    r.conductor = 9 * rad_prime_to_3;
  } else if (m9 == 1 || m9 == 8) {
    r.species = Species::II;
    r.conductor = rad_prime_to_3;
  } else {
    r.species = Species::IB;
    r.conductor = 3 * rad_prime_to_3;
  }
  return r;
}

std::uint64_t normalized_value(const PrimePowers& exps) {
  std::uint64_t a = 1, b = 1;
  for (auto [p, e] : exps) {
    if (e % 3 == 1) a *= p;
    if (e % 3 == 2) b *= p;
  }
  if (a == 1 && b == 1) return 1;
  return b < a ? a * b * b : b * a * a;
}

}  // namespace

RadicandProfile normalize_radicand(std::uint64_t n) {
  if (n < 2) throw Error("radicand must be at least 2");
  std::uint64_t v = normalized_value(factorize(n));
  if (v == 1) throw Error("radicand " + std::to_string(n) + " is a perfect cube");
  return profile_of(v, n, factorize(v));
}

RadicandProfile conductor_and_species(std::uint64_t n) {
  if (n < 2) throw Error("radicand must be at least 2");
  return profile_of(n, n, factorize(n));
}

RadicandProfile conductor_and_species(const PrimePowers& factors) {
  std::uint64_t n = 1;
  for (auto [p, e] : factors) n *= ipow(p, e);
  if (n < 2) throw Error("radicand must be at least 2");
  return profile_of(n, n, factors);
}

std::string to_string(ConductorShapeKind k) {
  switch (k) {
    case ConductorShapeKind::pq1q2: return "pq1q2";
    case ConductorShapeKind::three_pq: return "3pq";
    case ConductorShapeKind::nine_pq: return "9pq";
    case ConductorShapeKind::other: return "other";
  }
  return "other";
}

ConductorShape classify_conductor(std::uint64_t f) {
  ConductorShape out;
  out.f = f;
  if (f < 2) return out;
  int v3 = 0;
  std::vector<std::uint64_t> ps, qs;
  for (auto [p, e] : factorize(f)) {
    if (p == 3) {
      v3 = e;
      continue;
    }
    if (e != 1) return out;
    if (p % 9 == 1) {
      ps.push_back(p);
    } else if (p % 9 == 2 || p % 9 == 5) {
      qs.push_back(p);
    } else {
      return out;
    }
  }
  if (ps.size() != 1) return out;
  std::sort(qs.begin(), qs.end(), [](std::uint64_t x, std::uint64_t y) {
    return std::make_pair(x % 9, x) < std::make_pair(y % 9, y);
  });
  ConductorShapeKind kind = ConductorShapeKind::other;
  if (v3 == 0 && qs.size() == 2) kind = ConductorShapeKind::pq1q2;
  if (v3 == 1 && qs.size() == 1) kind = ConductorShapeKind::three_pq;
  if (v3 == 2 && qs.size() == 1) kind = ConductorShapeKind::nine_pq;
  if (kind == ConductorShapeKind::other) return out;
  out.shape = kind;
  out.p = ps.front();
  out.qs = std::move(qs);
  return out;
}

Multiplicity multiplicity(std::uint64_t f) {
  if (f < 2) throw Error("conductor must be at least 2");
  int v3 = 0;
  std::vector<std::uint64_t> support;
  for (auto [p, e] : factorize(f)) {
    if (p == 3) {
      v3 = e;
    } else if (e != 1) {
      throw Error("conductor " + std::to_string(f) + " is not squarefree away from 3");
    } else {
      support.push_back(p);
    }
  }
  if (v3 > 2) throw Error("conductor " + std::to_string(f) + " has 27 | f");
  if (support.empty() && v3 != 2) throw Error("conductor " + std::to_string(f) + " has no prime other than 3");
  if (v3 == 2) support.insert(support.begin(), 3);

  const std::size_t k = support.size();
  std::vector<std::uint64_t> found;
  // bit i set: exponent 2 on support[i]; masks m and ~m are conjugate
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (mask & (std::uint64_t{1} << (k - 1))) continue;  // fold e <-> 3 - e
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < k; ++i) n *= ipow(support[i], (mask >> i) & 1 ? 2 : 1);
    const std::uint64_t m9 = n % 9;
    const bool plus_minus_one = m9 == 1 || m9 == 8;
    if (v3 == 0 && !plus_minus_one) continue;
    if (v3 == 1 && plus_minus_one) continue;
    found.push_back(normalized_value(factorize(n)));
  }
  std::sort(found.begin(), found.end());
  return Multiplicity{static_cast<int>(found.size()), std::move(found)};
}

std::string to_string(CubicResidue r) {
  switch (r) {
    case CubicResidue::residue: return "residue";
    case CubicResidue::nonresidue_class_1: return "nonresidue_class_1";
    case CubicResidue::nonresidue_class_2: return "nonresidue_class_2";
  }
  return "residue";
}

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

CubicResidue cubic_residue_symbol(std::int64_t x, std::uint64_t p) {
  if (!is_prime(p) || p % 3 != 1) throw Error("cubic residue symbol needs a prime p = 1 mod 3");
  const auto sp = static_cast<std::int64_t>(p);
  const auto xr = static_cast<std::uint64_t>(((x % sp) + sp) % sp);
  if (xr == 0) throw Error("p divides x");
  const std::uint64_t r = powmod(xr, (p - 1) / 3, p);
  if (r == 1) return CubicResidue::residue;
  // the other primitive cube root of unity is r^2
  const std::uint64_t other = powmod(r, 2, p);
  return r < other ? CubicResidue::nonresidue_class_1 : CubicResidue::nonresidue_class_2;
}

std::string to_string(AuxType t) {
  switch (t) {
    case AuxType::alpha: return "alpha";
    case AuxType::beta: return "beta";
    case AuxType::gamma: return "gamma";
  }
  return "alpha";
}

AuxType parse_aux_type(std::string_view text) {
  if (text == "alpha") return AuxType::alpha;
  if (text == "beta") return AuxType::beta;
  if (text == "gamma") return AuxType::gamma;
  throw Error("unknown DPF type '" + std::string(text) + "'");
}

AuxType dpf_type_of_prime(std::uint64_t p) {
  return (p == 541 || p == 919 || p == 1279) ? AuxType::gamma : AuxType::alpha;
}

std::vector<TktName> admissible_capitulation_types(AuxType aux, int unit_norm_index) {
  if (aux == AuxType::beta) throw Error("auxiliary field of DPF type beta is excluded");
  herbrand_kernel_size(unit_norm_index);
  const bool total = unit_norm_index == 3;
  if (aux == AuxType::gamma) {
    return total ? std::vector{TktName::a2, TktName::a1} : std::vector{TktName::d23, TktName::b10};
  }
  return total ? std::vector{TktName::a1} : std::vector{TktName::b10};
}

int herbrand_kernel_size(int unit_norm_index) {
  if (unit_norm_index != 1 && unit_norm_index != 3) {
    throw Error("unit norm index must be 1 or 3");
  }
  return 3 * unit_norm_index;
}

}  // namespace capitula
