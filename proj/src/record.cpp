#include "polyrep/record.hpp"

namespace polyrep::cli {

const char* method_name(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::theorem3: return "theorem3";
    case Method::theorem4: return "theorem4";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "brute") return Method::brute;
  if (name == "theorem3") return Method::theorem3;
  if (name == "theorem4") return Method::theorem4;
  return std::nullopt;
}

nlohmann::ordered_json OutputRecord::to_json() const {
  nlohmann::ordered_json j;
  j["m"] = m;
  j["t"] = t;
  j["n"] = n;
  j["r"] = r;
  j["r_prime"] = r_prime;
  nlohmann::ordered_json reps = nlohmann::ordered_json::array();
  for (const auto& rep : representations) {
    nlohmann::ordered_json one;
    one["a"] = rep.a;
    one["b"] = rep.b;
    one["c"] = rep.c;
    reps.push_back(std::move(one));
  }
  j["representations"] = std::move(reps);
  j["method"] = method_name(method);
  return j;
}

OutputRecord OutputRecord::from_json(const nlohmann::ordered_json& j) {
  OutputRecord rec;
  rec.m = j.at("m").get<std::int64_t>();
  rec.t = j.at("t").get<std::int64_t>();
  rec.n = j.at("n").get<std::uint64_t>();
  rec.r = j.at("r").get<std::uint64_t>();
  rec.r_prime = j.at("r_prime").get<std::uint64_t>();
  for (const auto& one : j.at("representations")) {
    rec.representations.push_back({one.at("a").get<std::uint64_t>(),
                                   one.at("b").get<std::uint64_t>(),
                                   one.at("c").get<std::int64_t>()});
  }
  const auto method = parse_method(j.at("method").get<std::string>());
  if (!method) throw std::invalid_argument("OutputRecord: unknown method");
  rec.method = *method;
  return rec;
}

const char* OutputRecord::csv_header() { return "m,t,n,r,r_prime,method,reps"; }

std::string OutputRecord::csv_row() const {
  std::string reps;
  for (const auto& rep : representations) {
    if (!reps.empty()) reps += ';';
    reps += std::to_string(rep.a) + ':' + std::to_string(rep.b) + ':' +
            std::to_string(rep.c);
  }
  return std::to_string(m) + ',' + std::to_string(t) + ',' + std::to_string(n) +
         ',' + std::to_string(r) + ',' + std::to_string(r_prime) + ',' +
         method_name(method) + ',' + reps;
}

}  // namespace polyrep::cli
