#include "polyrep/qforms.hpp"

#include <array>
#include <numeric>

#include <stdexcept>

#include "doctest.h"
#include "polyrep/arith.hpp"

using namespace polyrep;
using qforms::ClassData;
using qforms::FormRole;
using qforms::GroupTag;
using qforms::QuadForm;

TEST_CASE("reduced_forms on the running discriminants") {
  const auto d8 = qforms::reduced_forms(-8);
  CHECK(d8.h() == 1);
  CHECK(d8.reduced == std::vector<QuadForm>{{1, 0, 2}});
  CHECK(d8.structure == GroupTag::h1);

  const auto d24 = qforms::reduced_forms(-24);
  CHECK(d24.h() == 2);
  CHECK(d24.reduced == std::vector<QuadForm>{{1, 0, 6}, {2, 0, 3}});
  CHECK(d24.structure == GroupTag::h2);

  const auto d56 = qforms::reduced_forms(-56);
  CHECK(d56.h() == 4);
  CHECK(d56.reduced ==
        std::vector<QuadForm>{{1, 0, 14}, {2, 0, 7}, {3, 2, 5}, {3, -2, 5}});
  CHECK(d56.structure == GroupTag::z4);

  const auto d7 = qforms::reduced_forms(-7);
  CHECK(d7.h() == 1);
  CHECK(d7.reduced == std::vector<QuadForm>{{1, 1, 2}});

  CHECK_THROWS_AS(qforms::reduced_forms(-6), std::invalid_argument);
  CHECK_THROWS_AS(qforms::reduced_forms(8), std::invalid_argument);
}

TEST_CASE("class roles match the tabulated rows") {
  struct Row {
    std::int64_t d;
    QuadForm i, a, a2;
  };
  const Row rows[] = {
      {-56, {1, 0, 14}, {3, 2, 5}, {2, 0, 7}},
      {-136, {1, 0, 34}, {5, 2, 7}, {2, 0, 17}},
      {-184, {1, 0, 46}, {5, 4, 10}, {2, 0, 23}},
      {-328, {1, 0, 82}, {7, 6, 13}, {2, 0, 41}},
      {-568, {1, 0, 142}, {11, 2, 13}, {2, 0, 71}},
  };
  for (const auto& row : rows) {
    const auto cd = qforms::reduced_forms(row.d);
    REQUIRE(cd.has_roles());
    CHECK(cd.form(FormRole::I) == row.i);
    CHECK(cd.form(FormRole::A) == row.a);
    CHECK(cd.form(FormRole::A2) == row.a2);
  }
}

TEST_CASE("conductor") {
  CHECK(qforms::conductor(-8) == 1);
  CHECK(qforms::conductor(-16) == 2);
  CHECK(qforms::conductor(-12) == 2);
  CHECK(qforms::conductor(-4) == 1);
  CHECK(qforms::conductor(-108) == 6);  // -108 / 36 = -3
  CHECK(qforms::conductor(-56) == 1);
}

TEST_CASE("represent_count examples") {
  CHECK(qforms::represent_count({1, 0, 2}, 9) == 6);
  CHECK(qforms::represent_count({1, 0, 14}, 39) == 4);
  CHECK(qforms::represent_count({3, 2, 5}, 39) == 0);
  // content handling
  CHECK(qforms::represent_count({2, 0, 2}, 4) == 4);
  CHECK(qforms::represent_count({2, 0, 2}, 5) == 0);
  CHECK_THROWS_AS(qforms::represent_count({1, 0, -2}, 5), std::invalid_argument);
}

TEST_CASE("represent_count matches a naive double loop") {
  // Independent oracle: scan the whole lattice box instead of solving the
  // per-y quadratic.
  auto naive = [](const QuadForm& f, std::int64_t n) {
    std::uint64_t count = 0;
    for (std::int64_t x = -n; x <= n; ++x)
      for (std::int64_t y = -n; y <= n; ++y)
        if (f.a * x * x + f.b * x * y + f.c * y * y == n) ++count;
    return count;
  };
  const QuadForm forms[] = {{1, 0, 1},  {1, 0, 2}, {1, 1, 2}, {2, 0, 3},
                            {3, 2, 5},  {2, 0, 7}, {1, 0, 14}, {5, 4, 10},
                            {2, 0, 2},  {4, 2, 4}};
  for (const auto& f : forms)
    for (std::int64_t n = 1; n <= 120; ++n)
      REQUIRE(qforms::represent_count(f, static_cast<std::uint64_t>(n)) ==
              naive(f, n));
}

TEST_CASE("mirror forms represent the same counts") {
  for (std::int64_t d : {-24, -40, -56, -88, -136, -184, -232, -328, -568}) {
    for (const auto& f : qforms::reduced_forms(d).reduced) {
      if (f.b == 0) continue;
      const QuadForm mirror{f.a, -f.b, f.c};
      for (std::uint64_t n = 1; n <= 2000; ++n)
        REQUIRE(qforms::represent_count(f, n) ==
                qforms::represent_count(mirror, n));
    }
  }
}

TEST_CASE("unimodular substitutions preserve counts") {
  // x -> p x' + q y', y -> r x' + s y' with ps - qr = 1.
  struct Sub {
    int p, q, r, s;
  };
  const std::array<Sub, 20> subs = {{{1, 1, 0, 1},   {1, -1, 0, 1},
                                     {1, 0, 1, 1},   {1, 0, -1, 1},
                                     {0, -1, 1, 0},  {0, 1, -1, 0},
                                     {1, 2, 0, 1},   {1, 0, 2, 1},
                                     {1, 3, 0, 1},   {1, 0, 3, 1},
                                     {2, 1, 1, 1},   {1, 1, 1, 2},
                                     {2, 3, 1, 2},   {3, 2, 1, 1},
                                     {2, 1, 3, 2},   {3, 1, 2, 1},
                                     {1, 2, 1, 3},   {-1, 0, 0, -1},
                                     {-1, 1, -1, 0}, {2, -1, -1, 1}}};
  const std::array<QuadForm, 5> bases = {
      {{1, 0, 14}, {3, 2, 5}, {2, 0, 7}, {1, 1, 2}, {2, 1, 3}}};
  for (const auto& sub : subs) {
    REQUIRE(sub.p * sub.s - sub.q * sub.r == 1);
    for (const auto& base : bases) {
      const QuadForm image{
          base.a * sub.p * sub.p + base.b * sub.p * sub.r +
              base.c * sub.r * sub.r,
          2 * base.a * sub.p * sub.q + base.b * (sub.p * sub.s + sub.q * sub.r) +
              2 * base.c * sub.r * sub.s,
          base.a * sub.q * sub.q + base.b * sub.q * sub.s +
              base.c * sub.s * sub.s};
      REQUIRE(image.discriminant() == base.discriminant());
      for (std::uint64_t n = 1; n <= 500; ++n)
        REQUIRE(qforms::represent_count(base, n) ==
                qforms::represent_count(image, n));
    }
  }
}

TEST_CASE("omega") {
  CHECK(qforms::omega(-3) == 6);
  CHECK(qforms::omega(-4) == 4);
  CHECK(qforms::omega(-56) == 2);
  CHECK_THROWS_AS(qforms::omega(5), std::invalid_argument);
}

TEST_CASE("dirichlet_N examples") {
  CHECK(qforms::dirichlet_N(9, -8) == 6);
  CHECK(qforms::dirichlet_N(25, -4) == 12);
  CHECK(qforms::dirichlet_N(39, -56) == 8);
  CHECK_THROWS_AS(qforms::dirichlet_N(2, -8), std::invalid_argument);
}

TEST_CASE("dirichlet_N equals enumeration on a sample") {
  for (std::int64_t d : {-3, -4, -8, -24, -56, -16, -12}) {
    for (std::uint64_t n = 1; n <= 300; ++n) {
      if (std::gcd(n, static_cast<std::uint64_t>(-d)) != 1) continue;
      REQUIRE(qforms::dirichlet_N(n, d) == qforms::N_by_enumeration(n, d));
    }
  }
}

TEST_CASE("N_by_enumeration examples") {
  CHECK(qforms::N_by_enumeration(39, -56) == 8);
  CHECK(qforms::N_by_enumeration(1, -8) == 2);
  CHECK(qforms::N_by_enumeration(5, -8) == 0);
}

TEST_CASE("principal_R") {
  CHECK(qforms::principal_R(9, -8) == 6);
  CHECK(qforms::principal_R(25, -4) == 12);
  CHECK_THROWS_AS(qforms::principal_R(2, -8), std::invalid_argument);
  CHECK_THROWS_AS(qforms::principal_R(5, -24), std::invalid_argument);
}

TEST_CASE("prime_class") {
  const auto cd = qforms::reduced_forms(-56);
  CHECK(qforms::prime_class(3, cd) == FormRole::A);
  CHECK(qforms::prime_class(23, cd) == FormRole::I);  // 23 = 9 + 14
  CHECK(qforms::prime_class(2, cd) == FormRole::A2);
  CHECK_FALSE(qforms::prime_class(11, cd).has_value());
}

TEST_CASE("character_sums examples") {
  const auto d56 = qforms::reduced_forms(-56);
  const auto at39 = qforms::character_sums(39, d56);
  CHECK(at39.principal == 4);
  CHECK(at39.generator == 0);
  CHECK(at39.generator_sq == 4);

  const auto at1 = qforms::character_sums(1, d56);
  CHECK(at1.principal == 1);
  CHECK(at1.generator == 1);
  CHECK(at1.generator_sq == 1);

  const auto d24 = qforms::reduced_forms(-24);
  const auto at25 = qforms::character_sums(25, d24);
  CHECK(at25.principal == 3);
  CHECK(at25.generator == 3);
  CHECK_FALSE(at25.generator_sq.has_value());

  CHECK_THROWS_AS(qforms::character_sums(5, qforms::reduced_forms(-8)),
                  std::invalid_argument);
}

TEST_CASE("chi") {
  CHECK(qforms::chi(25, -24) == qforms::Rational{1, 1});
  CHECK(qforms::chi(1, -24) == qforms::Rational{1, 1});
  CHECK_THROWS_AS(qforms::chi(7, -60), std::invalid_argument);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const auto v = qforms::chi(n, -24);
    CHECK(std::abs(v.num) <= v.den);  // always within [-1, 1]
  }
}

TEST_CASE("two-class closed counts match enumeration") {
  const auto d24 = qforms::reduced_forms(-24);
  const auto at25 = qforms::two_class_counts_closed(25, -24);
  REQUIRE(at25.has_value());
  CHECK(at25->first == qforms::represent_count(d24.form(FormRole::I), 25));
  CHECK(at25->second == qforms::represent_count(d24.form(FormRole::A), 25));

  const auto d40 = qforms::reduced_forms(-40);
  const auto at49 = qforms::two_class_counts_closed(49, -40);
  REQUIRE(at49.has_value());
  CHECK(at49->first == qforms::represent_count(d40.form(FormRole::I), 49));
  CHECK(at49->second == qforms::represent_count(d40.form(FormRole::A), 49));

  // (-24 | 13) = -1 with odd exponent: hypothesis gate trips.
  CHECK_FALSE(qforms::two_class_counts_closed(13, -24).has_value());
  CHECK_THROWS_AS(qforms::two_class_counts_closed(5, -60), std::invalid_argument);
  CHECK_THROWS_AS(qforms::two_class_counts_closed(5, -8), std::invalid_argument);
}

TEST_CASE("four-class closed counts match enumeration") {
  const auto d56 = qforms::reduced_forms(-56);
  CHECK(qforms::z4_counts_closed(39, d56) == std::pair<std::uint64_t, std::uint64_t>{4, 4});
  CHECK(qforms::z4_counts_closed(1, d56) == std::pair<std::uint64_t, std::uint64_t>{2, 0});

  const auto d136 = qforms::reduced_forms(-136);
  const auto at259 = qforms::z4_counts_closed(259, d136);
  CHECK(at259.first == qforms::represent_count(d136.form(FormRole::I), 259));
  CHECK(at259.second == qforms::represent_count(d136.form(FormRole::A2), 259));

  CHECK_THROWS_AS(qforms::z4_counts_closed(5, qforms::reduced_forms(-24)),
                  std::invalid_argument);
}

TEST_CASE("role heuristic validated on non-tabulated cyclic four-groups") {
  // Fundamental discriminants with cyclic four-groups beyond the tabulated
  // rows; the closed counts must still match enumeration.
  for (std::int64_t d : {-39, -55, -68, -155, -203}) {
    const auto cd = qforms::reduced_forms(d);
    REQUIRE(cd.structure == GroupTag::z4);
    REQUIRE(qforms::conductor(d) == 1);
    REQUIRE(cd.has_roles());
    for (std::uint64_t n = 1; n <= 300; ++n) {
      const auto closed = qforms::z4_counts_closed(n, cd);
      REQUIRE(closed.first ==
              qforms::represent_count(cd.form(FormRole::I), n));
      REQUIRE(closed.second ==
              qforms::represent_count(cd.form(FormRole::A2), n));
    }
  }
}

TEST_CASE("chi stays within [-1,1] on non-fundamental discriminants") {
  for (std::int64_t d : {-32, -72, -75}) {
    const std::int64_t f = qforms::conductor(d);
    CHECK(f > 1);
    for (std::uint64_t n = 1; n <= 300; ++n) {
      if (std::gcd(n, static_cast<std::uint64_t>(f)) != 1) continue;
      const auto v = qforms::chi(n, d);
      CHECK(std::abs(v.num) <= v.den);
    }
  }
}

TEST_CASE("generator_sq sign rule agrees with the inversion identity") {
  for (std::int64_t d : {-56, -136, -184}) {
    const auto cd = qforms::reduced_forms(d);
    for (std::uint64_t n = 1; n <= 400; ++n) {
      const auto cs = qforms::character_sums(n, cd);
      const auto r_i = qforms::represent_count(cd.form(FormRole::I), n);
      const auto r_a2 = qforms::represent_count(cd.form(FormRole::A2), n);
      const std::int64_t from_inversion =
          static_cast<std::int64_t>(r_i + r_a2) - cs.principal;
      REQUIRE(cs.generator_sq == from_inversion);
    }
  }
}
