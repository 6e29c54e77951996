#include <doctest.h>

#include <set>

#include "capitula/cubic.hpp"
#include "capitula/error.hpp"

using namespace capitula;

TEST_CASE("factorization helpers") {
  CHECK(format_factorization(factorize(4598)) == "2*11^2*19");
  CHECK(format_factorization(factorize(1)) == "1");
  CHECK(evaluate_factorization("2^2*11*19") == 836);
  CHECK(evaluate_factorization("5*23^2*37") == 97865);
  CHECK_THROWS_AS(evaluate_factorization("2^*3"), Error);
  CHECK(radical(4598) == 418);
  CHECK(is_prime(541));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("radicand normalization") {
  auto r = normalize_radicand(4598);
  CHECK(r.n == 4598);
  CHECK(r.a == 38);
  CHECK(r.b == 11);
  CHECK(normalize_radicand(24).n == 3);
  CHECK(normalize_radicand(18).n == 12);
  CHECK(normalize_radicand(12).n == 12);
  CHECK_THROWS_AS(normalize_radicand(1), Error);
  CHECK_THROWS_AS(normalize_radicand(27), Error);
  // partners generate the same field: their product is a cube
  for (std::uint64_t n : {18u, 50u, 98u, 4598u}) {
    const auto m = normalize_radicand(n).n;
    std::uint64_t p = n * m;
    bool cube = false;
    for (std::uint64_t c = 1; c * c * c <= p; ++c) cube = cube || c * c * c == p;
    CHECK((m == n || cube));
  }
}

TEST_CASE("conductor and species") {
  auto r = conductor_and_species(146);
  CHECK(r.conductor == 438);
  CHECK(r.species == Species::IB);
  r = conductor_and_species(836);
  CHECK(r.conductor == 418);
  CHECK(r.species == Species::II);
  r = conductor_and_species(438);
  CHECK(r.conductor == 1314);
  CHECK(r.species == Species::IA);
  CHECK(conductor_and_species(factorize(836)).conductor == 418);
}

TEST_CASE("conductor shapes") {
  auto s = classify_conductor(418);
  CHECK(s.shape == ConductorShapeKind::pq1q2);
  CHECK(s.p == 19);
  CHECK(s.qs == std::vector<std::uint64_t>{2, 11});
  s = classify_conductor(3246);
  CHECK(s.shape == ConductorShapeKind::three_pq);
  CHECK(s.p == 541);
  CHECK(s.qs == std::vector<std::uint64_t>{2});
  CHECK(classify_conductor(4869).shape == ConductorShapeKind::other);
  CHECK(to_string(ConductorShapeKind::nine_pq) == "9pq");
}

TEST_CASE("multiplicity") {
  auto m = multiplicity(418);
  CHECK(m.m == 2);
  CHECK(m.radicands == std::vector<std::uint64_t>{836, 4598});
  CHECK(multiplicity(1314).radicands == std::vector<std::uint64_t>{438, 876, 1314, 2628});
  CHECK(multiplicity(3285).radicands == std::vector<std::uint64_t>{1095, 3285, 5475, 16425});
  // f = 9p: single prime, one doublet for 171, 1791 and 4869
  for (std::uint64_t f : {171u, 1791u, 4869u}) CHECK(multiplicity(f).m == 2);
  for (std::uint64_t f : {418u, 1314u, 3285u, 171u}) {
    for (auto n : multiplicity(f).radicands) {
      CHECK(normalize_radicand(n).n == n);
      CHECK(conductor_and_species(n).conductor == f);
    }
  }
  CHECK_THROWS_AS(multiplicity(4 * 19), Error);
  CHECK_THROWS_AS(multiplicity(27 * 19), Error);
  CHECK(multiplicity(9).radicands == std::vector<std::uint64_t>{3});
  CHECK_THROWS_AS(multiplicity(3), Error);
}

TEST_CASE("multiplicity agrees with a direct radicand search") {
  std::map<std::uint64_t, std::set<std::uint64_t>> by_conductor;
  for (std::uint64_t n = 2; n < 200000; ++n) {
    const auto f = factorize(n);
    bool cube_free = true;
    for (auto [p, e] : f) cube_free = cube_free && e < 3;
    if (!cube_free) continue;
    const auto prof = conductor_and_species(f);
    if (prof.conductor < 2000 && normalize_radicand(n).n == n) by_conductor[prof.conductor].insert(n);
  }
  // radicands above the search bound would need f^2 > 200000
  for (std::uint64_t f = 2; f < 400; ++f) {
    std::set<std::uint64_t> expected;
    if (auto it = by_conductor.find(f); it != by_conductor.end()) expected = it->second;
    Multiplicity m;
    try {
      m = multiplicity(f);
    } catch (const Error&) {
      CAPTURE(f);
      CHECK(expected.empty());
      continue;
    }
    CAPTURE(f);
    CHECK(std::set<std::uint64_t>(m.radicands.begin(), m.radicands.end()) == expected);
  }
}

TEST_CASE("cubic residues") {
  CHECK(cubic_residue_symbol(11, 19) == CubicResidue::residue);
  CHECK(cubic_residue_symbol(23, 37) == CubicResidue::residue);
  CHECK(cubic_residue_symbol(2, 7) != CubicResidue::residue);
  CHECK(cubic_residue_symbol(-1, 7) == CubicResidue::residue);
  CHECK_THROWS_AS(cubic_residue_symbol(2, 5), Error);
  CHECK_THROWS_AS(cubic_residue_symbol(14, 7), Error);
  CHECK_THROWS_AS(cubic_residue_symbol(2, 9), Error);

  for (std::uint64_t p = 7; p < 1000; ++p) {
    if (!is_prime(p) || p % 3 != 1) continue;
    std::uint64_t residues = 0;
    for (std::uint64_t x = 1; x < p; ++x) {
      if (cubic_residue_symbol(static_cast<std::int64_t>(x), p) == CubicResidue::residue) ++residues;
    }
    CAPTURE(p);
    REQUIRE(residues == (p - 1) / 3);
    // the symbol is a character: class 1 x class 1 = class 2, class 1 x class 2 = residue
    for (std::uint64_t x = 2; x < std::min<std::uint64_t>(p, 40); ++x) {
      for (std::uint64_t y = 2; y < std::min<std::uint64_t>(p, 40); ++y) {
        auto sx = static_cast<int>(cubic_residue_symbol(static_cast<std::int64_t>(x), p));
        auto sy = static_cast<int>(cubic_residue_symbol(static_cast<std::int64_t>(y), p));
        auto sxy = static_cast<int>(cubic_residue_symbol(static_cast<std::int64_t>(x * y % p), p));
        REQUIRE(sxy == (sx + sy) % 3);
      }
    }
  }
}

TEST_CASE("DPF types and admissible capitulation types") {
  CHECK(dpf_type_of_prime(541) == AuxType::gamma);
  CHECK(dpf_type_of_prime(919) == AuxType::gamma);
  CHECK(dpf_type_of_prime(19) == AuxType::alpha);
  CHECK(admissible_capitulation_types(AuxType::alpha, 1) == std::vector<TktName>{TktName::b10});
  CHECK(admissible_capitulation_types(AuxType::alpha, 3) == std::vector<TktName>{TktName::a1});
  CHECK(admissible_capitulation_types(AuxType::gamma, 1) == std::vector<TktName>{TktName::d23, TktName::b10});
  CHECK(admissible_capitulation_types(AuxType::gamma, 3) == std::vector<TktName>{TktName::a2, TktName::a1});
  CHECK_THROWS_AS(admissible_capitulation_types(AuxType::beta, 1), Error);
  CHECK(herbrand_kernel_size(1) == 3);
  CHECK(herbrand_kernel_size(3) == 9);
  CHECK_THROWS_AS(herbrand_kernel_size(2), Error);
  for (auto name : admissible_capitulation_types(AuxType::gamma, 1)) {
    CHECK(tkt_leq(CapitulationType::parse("1320"), named_representative(name)));
  }
}
