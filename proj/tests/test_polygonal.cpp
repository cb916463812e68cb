#include "polyrep/polygonal.hpp"

#include <unordered_map>

#include <stdexcept>

#include "doctest.h"

using namespace polyrep;

TEST_CASE("polygonal values") {
  CHECK(polygonal::value(3, 2) == 3);
  CHECK(polygonal::value(5, -1) == 2);
  CHECK(polygonal::value(7, -3) == 27);
  CHECK(polygonal::value(5, 0) == 0);  // allowed for m > 4
  CHECK_THROWS_AS(polygonal::value(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(polygonal::value(4, -2), std::invalid_argument);
  CHECK_THROWS_AS(polygonal::value(2, 1), std::invalid_argument);
}

TEST_CASE("triangular and square specializations") {
  for (std::int64_t c = 1; c <= 1000; ++c) {
    CHECK(polygonal::value(3, c) ==
          static_cast<std::uint64_t>(c) * (c + 1) / 2);
    CHECK(polygonal::value(4, c) == static_cast<std::uint64_t>(c * c));
  }
}

TEST_CASE("index_of examples") {
  CHECK(polygonal::index_of(3, 6) == 3);
  CHECK(polygonal::index_of(7, 27) == -3);
  CHECK_FALSE(polygonal::index_of(5, 3).has_value());
}

TEST_CASE("injectivity on the valid domain") {
  for (std::int64_t m = 3; m <= 60; ++m) {
    std::unordered_map<std::uint64_t, std::int64_t> seen;
    for (std::int64_t c = (m <= 4 ? 1 : -500); c <= 500; ++c) {
      const auto [it, inserted] = seen.emplace(polygonal::value(m, c), c);
      CHECK(inserted);
    }
  }
}

TEST_CASE("index_of round-trips the full valid domain") {
  for (std::int64_t m = 3; m <= 40; ++m) {
    for (std::int64_t c = (m <= 4 ? 1 : -1000); c <= 1000; ++c) {
      const std::uint64_t v = polygonal::value(m, c);
      if (v == 0) continue;  // below index_of's domain
      CHECK(polygonal::index_of(m, v) == c);
    }
  }
}

TEST_CASE("index_of_multiple") {
  CHECK(polygonal::index_of_multiple(Family(3, 1), 3) == 2);
  CHECK(polygonal::index_of_multiple(Family(3, 2), 12) == 3);
  CHECK(polygonal::index_of_multiple(Family(3, 5), 15) == 2);
  CHECK_FALSE(polygonal::index_of_multiple(Family(3, 5), 12).has_value());
  CHECK_FALSE(polygonal::index_of_multiple(Family(5, 1), 3).has_value());
}

TEST_CASE("Family validation") {
  CHECK_THROWS_AS(Family(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(Family(3, 0), std::invalid_argument);
  CHECK(Family(3, 1) == Family(3, 1));
}
