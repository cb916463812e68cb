#include "polyrep/qforms.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "polyrep/arith.hpp"

namespace polyrep::qforms {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

int mod4(i64 v) { return static_cast<int>(((v % 4) + 4) % 4); }

void validate_discriminant(i64 d) {
  if (d >= 0 || (mod4(d) != 0 && mod4(d) != 1))
    throw std::invalid_argument("discriminant must be negative, 0 or 1 mod 4");
}

// Class-number lists for small negative discriminants. The first three are
// complete; the fourth lists the discriminants whose class group is cyclic of
// order four (h = 4 splits into Z4 and Z2xZ2, which reduction alone cannot
// tell apart).
constexpr std::array<i64, 13> kH1 = {-3,  -4,  -7,  -8,  -11, -12, -16,
                                     -19, -27, -28, -43, -67, -163};
constexpr std::array<i64, 29> kH2 = {
    -15,  -20,  -24,  -32,  -35,  -36,  -40,  -48,  -51,  -52,
    -60,  -64,  -72,  -75,  -88,  -91,  -99,  -100, -112, -115,
    -123, -147, -148, -187, -232, -235, -267, -403, -427};
constexpr std::array<i64, 25> kH3 = {
    -23,  -31,  -44,  -59,  -76,  -83,  -92,  -107, -108, -124, -139, -172,
    -211, -243, -268, -283, -307, -331, -379, -499, -547, -643, -652, -883,
    -907};
constexpr std::array<i64, 50> kZ4 = {
    -39,   -55,   -56,   -63,   -68,   -80,   -128,  -136,  -144,  -155,
    -156,  -171,  -184,  -196,  -203,  -208,  -219,  -220,  -252,  -256,
    -259,  -275,  -291,  -292,  -323,  -328,  -355,  -363,  -387,  -388,
    -400,  -475,  -507,  -568,  -592,  -603,  -667,  -723,  -763,  -772,
    -955,  -1003, -1027, -1227, -1243, -1387, -1411, -1467, -1507, -1555};

template <std::size_t N>
bool in_list(const std::array<i64, N>& list, i64 d) {
  return std::find(list.begin(), list.end(), d) != list.end();
}

bool ambiguous(const QuadForm& f) {
  return f.b == 0 || f.b == f.a || f.a == f.c;
}

FormRole canonical_role(const ClassData& cd, FormRole role) {
  if (role == FormRole::A3) return FormRole::A;
  if (cd.h() == 3 && role == FormRole::A2) return FormRole::A;
  return role;
}

void assign_roles(ClassData& cd) {
  const int h = cd.h();
  auto principal = [](const QuadForm& f) { return f.a == 1; };
  cd.roles.clear();
  if (h == 1) {
    cd.roles = {FormRole::I};
    return;
  }
  if (h == 2) {
    for (const auto& f : cd.reduced)
      cd.roles.push_back(principal(f) ? FormRole::I : FormRole::A);
    return;
  }
  if (h == 3) {
    for (const auto& f : cd.reduced) {
      if (principal(f))
        cd.roles.push_back(FormRole::I);
      else
        cd.roles.push_back(f.b > 0 ? FormRole::A : FormRole::A2);
    }
    return;
  }
  if (h == 4 && cd.structure == GroupTag::z4) {
    // Two ambiguous classes (identity and the square of the generator) and
    // one mirror pair. Which mirror member is called A is immaterial: inverse
    // classes represent the same integers.
    for (const auto& f : cd.reduced) {
      if (principal(f))
        cd.roles.push_back(FormRole::I);
      else if (ambiguous(f))
        cd.roles.push_back(FormRole::A2);
      else
        cd.roles.push_back(f.b > 0 ? FormRole::A : FormRole::A3);
    }
    return;
  }
}

}  // namespace

i64 QuadForm::discriminant() const {
  return static_cast<i64>(i128{b} * b - 4 * i128{a} * c);
}

i64 QuadForm::content() const {
  return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
}

bool QuadForm::positive_definite() const { return a > 0 && discriminant() < 0; }

const char* to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::h1: return "h1";
    case GroupTag::h2: return "h2";
    case GroupTag::h3: return "h3";
    case GroupTag::z4: return "Z4";
    case GroupTag::other: return "other";
  }
  return "?";
}

const char* to_string(FormRole role) {
  switch (role) {
    case FormRole::I: return "I";
    case FormRole::A: return "A";
    case FormRole::A2: return "A^2";
    case FormRole::A3: return "A^3";
  }
  return "?";
}

const QuadForm& ClassData::form(FormRole role) const {
  for (std::size_t i = 0; i < roles.size(); ++i)
    if (roles[i] == role) return reduced[i];
  throw std::invalid_argument("ClassData::form: role not assigned");
}

ClassData reduced_forms(i64 d) {
  validate_discriminant(d);
  ClassData cd;
  cd.d = d;
  // |b| <= a <= c with b == d (mod 2); b >= 0 whenever |b| = a or a = c.
  for (i64 b = (mod4(d) == 0) ? 0 : 1; i128{3} * b * b <= -i128{d}; b += 2) {
    const i64 ac = static_cast<i64>((i128{b} * b - d) / 4);
    for (i64 a = std::max<i64>(b, 1); a * a <= ac; ++a) {
      if (ac % a != 0) continue;
      const i64 c = ac / a;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      cd.reduced.push_back({a, b, c});
      if (b > 0 && b < a && a < c) cd.reduced.push_back({a, -b, c});
    }
  }
  std::sort(cd.reduced.begin(), cd.reduced.end(),
            [](const QuadForm& x, const QuadForm& y) {
              if (x.a != y.a) return x.a < y.a;
              if (x.c != y.c) return x.c < y.c;
              return x.b > y.b;
            });
  if (in_list(kH1, d))
    cd.structure = GroupTag::h1;
  else if (in_list(kH2, d))
    cd.structure = GroupTag::h2;
  else if (in_list(kH3, d))
    cd.structure = GroupTag::h3;
  else if (in_list(kZ4, d))
    cd.structure = GroupTag::z4;
  else
    cd.structure = GroupTag::other;
  assign_roles(cd);
  return cd;
}

i64 conductor(i64 d) {
  validate_discriminant(d);
  i64 best = 1;
  for (i64 f = 1; f * f <= -d; ++f) {
    if (d % (f * f) != 0) continue;
    const i64 q = d / (f * f);
    if (mod4(q) == 0 || mod4(q) == 1) best = f;
  }
  return best;
}

u64 represent_count(const QuadForm& form, u64 n) {
  if (!form.positive_definite())
    throw std::invalid_argument("represent_count: form must be positive definite");
  if (n == 0) throw std::invalid_argument("represent_count: n must be positive");
  QuadForm f = form;
  const i64 g = f.content();
  if (g > 1) {
    if (n % static_cast<u64>(g) != 0) return 0;
    f = {f.a / g, f.b / g, f.c / g};
    n /= static_cast<u64>(g);
  }
  const i64 absd = -f.discriminant();
  const i128 four_an = i128{4} * f.a * static_cast<i64>(n);
  u64 count = 0;
  // For each y, solve a x^2 + (b y) x + (c y^2 - n) = 0 exactly; the root
  // discriminant is 4an - |d| y^2.
  for (u64 y = 0; i128{absd} * y * y <= four_an; ++y) {
    const i128 delta = four_an - i128{absd} * y * y;
    if (delta > i128{UINT64_MAX})
      throw std::overflow_error("represent_count: intermediate exceeds 64 bits");
    const auto s = arith::is_square(static_cast<u64>(delta));
    if (!s) continue;
    const i64 root = static_cast<i64>(*s);
    const i64 by = f.b * static_cast<i64>(y);
    int roots = 0;
    if ((-by + root) % (2 * f.a) == 0) ++roots;
    if (root != 0 && (-by - root) % (2 * f.a) == 0) ++roots;
    count += (y == 0) ? roots : 2 * roots;
  }
  return count;
}

int omega(i64 d) {
  if (d >= 0) throw std::invalid_argument("omega: d must be negative");
  if (d == -3) return 6;
  if (d == -4) return 4;
  return 2;
}

u64 dirichlet_N(u64 n, i64 d) {
  validate_discriminant(d);
  if (n == 0) throw std::invalid_argument("dirichlet_N: n must be positive");
  if (std::gcd(n, static_cast<u64>(-d)) != 1)
    throw std::invalid_argument("dirichlet_N: requires gcd(n,d) = 1");
  const i64 f = conductor(d);
  const i64 d0 = d / (f * f);
  i64 sum = 0;
  for (u64 k : arith::divisors(arith::factorize(n)))
    sum += arith::kronecker(d0, static_cast<i64>(k));
  return static_cast<u64>(omega(d) * sum);
}

u64 N_by_enumeration(u64 n, i64 d) {
  const ClassData cd = reduced_forms(d);
  u64 total = 0;
  for (const auto& f : cd.reduced) total += represent_count(f, n);
  return total;
}

u64 principal_R(u64 n, i64 d) {
  const ClassData cd = reduced_forms(d);
  if (cd.h() != 1)
    throw std::invalid_argument("principal_R: requires class number 1");
  return dirichlet_N(n, d);
}

std::optional<FormRole> prime_class(u64 p, const ClassData& classes) {
  if (!classes.has_roles())
    throw std::invalid_argument("prime_class: roles unassigned");
  for (std::size_t i = 0; i < classes.reduced.size(); ++i) {
    if (represent_count(classes.reduced[i], p) > 0)
      return canonical_role(classes, classes.roles[i]);
  }
  return std::nullopt;
}

CharacterSums character_sums(u64 n, const ClassData& classes) {
  const int h = classes.h();
  if (h != 2 && h != 4)
    throw std::invalid_argument("character_sums: class number must be 2 or 4");
  if (h == 4 && classes.structure != GroupTag::z4)
    throw std::invalid_argument("character_sums: four classes must be cyclic");
  if (!classes.has_roles())
    throw std::invalid_argument("character_sums: roles unassigned");
  const int w = omega(classes.d);

  i64 principal_sum;
  if (std::gcd(n, static_cast<u64>(-classes.d)) == 1)
    principal_sum = static_cast<i64>(dirichlet_N(n, classes.d)) / w;
  else
    principal_sum = static_cast<i64>(N_by_enumeration(n, classes.d)) / w;

  const i64 r_i = static_cast<i64>(represent_count(classes.form(FormRole::I), n));
  const FormRole other = (h == 2) ? FormRole::A : FormRole::A2;
  const i64 r_other = static_cast<i64>(represent_count(classes.form(other), n));
  const i64 generator_sum = (r_i - r_other) / w;

  std::optional<i64> generator_sq;
  if (h == 4) {
    // Sign rule: parity of the total exponent of primes represented by the
    // generator class (or its inverse).
    long exponent_sum = 0;
    for (const auto& [p, e] : arith::factorize(n).factors) {
      const auto role = prime_class(p, classes);
      if (role && *role == FormRole::A) exponent_sum += e;
    }
    generator_sq = (exponent_sum % 2 == 0) ? principal_sum : -principal_sum;
  }
  return {principal_sum, generator_sum, generator_sq};
}

Rational make_rational(i64 num, i64 den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i64 g = std::gcd(std::abs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Rational chi(u64 n, i64 d) {
  validate_discriminant(d);
  if (n == 0) throw std::invalid_argument("chi: n must be positive");
  if (d == -60) throw std::invalid_argument("chi: undefined for d = -60");
  const ClassData cd = reduced_forms(d);
  if (cd.h() != 2)
    throw std::invalid_argument("chi: requires class number 2");
  const i64 f = conductor(d);
  if (std::gcd(n, static_cast<u64>(f)) != 1)
    throw std::invalid_argument("chi: requires gcd(n, conductor) = 1");
  const i64 d0 = d / (f * f);
  const i64 generator_sum = character_sums(n, cd).generator;
  i64 denom = 1;
  for (const auto& [p, e] : arith::factorize(n).factors) {
    if (arith::kronecker(d0, static_cast<i64>(p)) == 1) denom *= e + 1;
  }
  return make_rational(generator_sum, denom);
}

std::optional<std::pair<u64, u64>> two_class_counts_closed(u64 n, i64 d) {
  validate_discriminant(d);
  if (n == 0)
    throw std::invalid_argument("two_class_counts_closed: n must be positive");
  if (conductor(d) != 1 || d == -60)
    throw std::invalid_argument(
        "two_class_counts_closed: d must be fundamental and != -60");
  const ClassData cd = reduced_forms(d);
  if (cd.h() != 2)
    throw std::invalid_argument("two_class_counts_closed: requires h = 2");

  i64 split_product = 1;
  for (const auto& [p, e] : arith::factorize(n).factors) {
    const int symbol = arith::kronecker(d, static_cast<i64>(p));
    if (symbol == -1 && e % 2 != 0) return std::nullopt;  // hypothesis gate
    if (symbol == 1) split_product *= e + 1;
  }
  const i64 generator_sum = character_sums(n, cd).generator;
  const i64 r_i = split_product + generator_sum;
  const i64 r_a = split_product - generator_sum;
  if (r_i < 0 || r_a < 0)
    throw std::logic_error("two_class_counts_closed: negative count");
  return std::make_pair(static_cast<u64>(r_i), static_cast<u64>(r_a));
}

std::pair<u64, u64> z4_counts_closed(u64 n, const ClassData& classes) {
  if (classes.structure != GroupTag::z4)
    throw std::invalid_argument("z4_counts_closed: requires a cyclic four-group");
  if (conductor(classes.d) != 1)
    throw std::invalid_argument("z4_counts_closed: d must be fundamental");
  const CharacterSums cs = character_sums(n, classes);
  const int w = omega(classes.d);
  const i64 plus = cs.principal + 2 * cs.generator + *cs.generator_sq;
  const i64 minus = cs.principal - 2 * cs.generator + *cs.generator_sq;
  if ((w * plus) % 4 != 0 || (w * minus) % 4 != 0 || plus < 0 || minus < 0)
    throw std::logic_error("z4_counts_closed: inconsistent character sums");
  return {static_cast<u64>(w * plus / 4), static_cast<u64>(w * minus / 4)};
}

}  // namespace polyrep::qforms
