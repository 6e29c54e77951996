#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "capitula/artin.hpp"

namespace capitula {

using PrimePowers = std::vector<std::pair<std::uint64_t, int>>;

/// Trial division; ascending primes. factorize(1) is empty.
PrimePowers factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);
/// "2^2*11*19"
std::string format_factorization(const PrimePowers& f);
/// Inverse of format_factorization; also accepts unsorted or repeated factors.
std::uint64_t evaluate_factorization(std::string_view text);

enum class Species { IA, IB, II };
std::string to_string(Species s);

struct RadicandProfile {
  std::uint64_t input = 0;  // as given, before cube stripping
  std::uint64_t n = 0;      // n = a * b^2
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool normalized = false;  // b < a
  std::uint64_t conductor = 0;
  Species species = Species::II;
  std::map<std::uint64_t, int> prime_classes;  // p -> p mod 9
};

/**
 * Strips cube factors and picks the class representative with b < a.
 * Throws for n < 2 and for perfect cubes.
 */
RadicandProfile normalize_radicand(std::uint64_t n);

/// Conductor and species of a cube-free n > 1, without changing the representative.
RadicandProfile conductor_and_species(std::uint64_t n);
/// Same, from a known factorization (exponents 1 or 2).
RadicandProfile conductor_and_species(const PrimePowers& factors);

enum class ConductorShapeKind { pq1q2, three_pq, nine_pq, other };
std::string to_string(ConductorShapeKind k);

struct ConductorShape {
  std::uint64_t f = 0;
  ConductorShapeKind shape = ConductorShapeKind::other;
  std::uint64_t p = 0;             // prime = 1 mod 9, 0 for other
  std::vector<std::uint64_t> qs;   // primes = 2, 5 mod 9; residue 2 first, then ascending
};

ConductorShape classify_conductor(std::uint64_t f);

struct Multiplicity {
  int m = 0;
  std::vector<std::uint64_t> radicands;  // normalized, ascending
};

/**
 * Enumerates radicands with conductor f: exponents in {1,2} over the prime
 * support (3 included when 9 || f), conjugate pairs folded, species filter
 * by the 3-adic part of f. Throws when f is not of the form F, 3F or 9F with
 * F squarefree and prime to 3.
 */
Multiplicity multiplicity(std::uint64_t f);

enum class CubicResidue { residue, nonresidue_class_1, nonresidue_class_2 };
std::string to_string(CubicResidue r);

/**
 * x^((p-1)/3) mod p. Class 1 is the smaller of the two primitive cube roots
 * of unity in [1, p), class 2 the larger. Throws unless p is prime, p = 1 mod 3
 * and p does not divide x.
 */
CubicResidue cubic_residue_symbol(std::int64_t x, std::uint64_t p);

enum class AuxType { alpha, beta, gamma };
std::string to_string(AuxType t);
AuxType parse_aux_type(std::string_view text);

/// gamma for 541, 919, 1279; alpha otherwise.
AuxType dpf_type_of_prime(std::uint64_t p);

/// (gamma,3)->{a.2,a.1}, (gamma,1)->{d.23,b.10}, (alpha,3)->{a.1}, (alpha,1)->{b.10}.
std::vector<TktName> admissible_capitulation_types(AuxType aux, int unit_norm_index);

/// 3 * index for index in {1, 3}.
int herbrand_kernel_size(int unit_norm_index);

}  // namespace capitula
