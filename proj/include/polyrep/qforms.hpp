#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace polyrep::qforms {

/// Integral binary quadratic form a x^2 + b x y + c y^2.
struct QuadForm {
  std::int64_t a;
  std::int64_t b;
  std::int64_t c;

  std::int64_t discriminant() const;
  std::int64_t content() const;
  bool positive_definite() const;

  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

enum class GroupTag { h1, h2, h3, z4, other };
enum class FormRole { I, A, A2, A3 };

const char* to_string(GroupTag tag);
const char* to_string(FormRole role);

/// All primitive reduced forms of one negative discriminant, plus the class
/// bookkeeping the closed-form counts need. Immutable once built.
struct ClassData {
  std::int64_t d = 0;
  std::vector<QuadForm> reduced;
  GroupTag structure = GroupTag::other;
  std::vector<FormRole> roles;  // parallel to `reduced`; empty if unassigned

  int h() const { return static_cast<int>(reduced.size()); }
  bool has_roles() const { return !roles.empty(); }
  const QuadForm& form(FormRole role) const;
};

/// Enumerates the reduced primitive forms of d (d < 0, d = 0 or 1 mod 4).
ClassData reduced_forms(std::int64_t d);

/// Largest f with d/f^2 still a discriminant; 1 iff d is fundamental.
std::int64_t conductor(std::int64_t d);

/// R(form, n): exact number of integer pairs (x,y) with form(x,y) = n.
/// Non-primitive forms are handled by factoring out the content.
std::uint64_t represent_count(const QuadForm& form, std::uint64_t n);

/// Unit count: 6 for d = -3, 4 for d = -4, 2 below.
int omega(std::int64_t d);

/// Dirichlet's divisor-sum formula for N(n,d); requires gcd(n,d) = 1.
std::uint64_t dirichlet_N(std::uint64_t n, std::int64_t d);

/// N(n,d) summed over every reduced class by direct enumeration.
std::uint64_t N_by_enumeration(std::uint64_t n, std::int64_t d);

/// Shortcut for class number one: the principal form count equals N(n,d).
std::uint64_t principal_R(std::uint64_t n, std::int64_t d);

/// Role of a class representing the prime p, with inverse classes merged
/// (they represent the same integers). Empty when no class represents p.
std::optional<FormRole> prime_class(std::uint64_t p, const ClassData& classes);

/// Character sums over the class group: principal = N(n,d)/omega,
/// generator = the alternating sum from the defining case split, and
/// generator_sq (four-class groups only) = parity-signed principal sum.
struct CharacterSums {
  std::int64_t principal;
  std::int64_t generator;
  std::optional<std::int64_t> generator_sq;
};
CharacterSums character_sums(std::uint64_t n, const ClassData& classes);

/// Exact rational, reduced, positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};
Rational make_rational(std::int64_t num, std::int64_t den);

/// chi(n,d): generator character sum divided by the split-prime divisor
/// product. Defined for h(d) = 2, d != -60, gcd(n, conductor) = 1.
Rational chi(std::uint64_t n, std::int64_t d);

/// Closed-form (R(I,n), R(A,n)) for fundamental two-class discriminants.
/// Empty when some prime with odd exponent in n is inert (hypothesis gate);
/// callers fall back to enumeration.
std::optional<std::pair<std::uint64_t, std::uint64_t>> two_class_counts_closed(
    std::uint64_t n, std::int64_t d);

/// Closed-form (R(I,n), R(A^2,n)) for fundamental four-class cyclic groups,
/// assembled from the character sums.
std::pair<std::uint64_t, std::uint64_t> z4_counts_closed(
    std::uint64_t n, const ClassData& classes);

}  // namespace polyrep::qforms
