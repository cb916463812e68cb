#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyrep/polygonal.hpp"

namespace polyrep::repcount {

/// One solution of n = a+b, ab = t*P(m,c), normalized to a >= b >= 1.
struct Representation {
  std::uint64_t a;
  std::uint64_t b;
  std::int64_t c;
  friend bool operator==(const Representation&, const Representation&) = default;
};

/// Nonnegative solution (x,y) of 2(m-2)n^2 + t(m-4)^2 = 2(m-2)x^2 + t y^2.
struct QPair {
  std::uint64_t x;
  std::uint64_t y;
  friend bool operator==(const QPair&, const QPair&) = default;
};

/// 2(m-2)n^2 + t(m-4)^2: the value conserved by both equations.
std::uint64_t target_value(const Family& family, std::uint64_t n);

/// Every unordered pair {a,b} with a+b = n and ab a t-multiple of an m-gonal
/// number, sorted by descending a. The count is r_{m,t}(n).
std::vector<Representation> representations(const Family& family,
                                            std::uint64_t n);

/// Every nonnegative (x,y) solving the quadratic identity, ascending in x.
/// The count is r'_{m,t}(n).
std::vector<QPair> qsolutions(const Family& family, std::uint64_t n);

/// (|a-b|, |2(m-2)c-(m-4)|). Rejects representations violating their
/// invariants for (family, n).
QPair qpair_from_representation(const Family& family, std::uint64_t n,
                                const Representation& rep);

/// Inverse construction ((n+x)/2, (n-x)/2, c) when x < n, parity matches and
/// a valid index c exists; empty otherwise.
std::optional<Representation> representation_from_qpair(const Family& family,
                                                        std::uint64_t n,
                                                        const QPair& pair);

}  // namespace polyrep::repcount
