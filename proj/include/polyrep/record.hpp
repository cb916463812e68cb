#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "polyrep/repcount.hpp"

namespace polyrep::cli {

enum class Method { brute, theorem3, theorem4 };

const char* method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// One computed row, serializable to JSON and CSV with stable field order
/// {m, t, n, r, r_prime, representations, method}.
struct OutputRecord {
  std::int64_t m = 3;
  std::int64_t t = 1;
  std::uint64_t n = 1;
  std::uint64_t r = 0;
  std::uint64_t r_prime = 0;
  std::vector<repcount::Representation> representations;
  Method method = Method::brute;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;

  nlohmann::ordered_json to_json() const;
  static OutputRecord from_json(const nlohmann::ordered_json& j);

  static const char* csv_header();  // m,t,n,r,r_prime,method,reps
  std::string csv_row() const;      // reps as semicolon-joined a:b:c triples
};

}  // namespace polyrep::cli
