#include "bifree/io.hpp"

#include "bifree/error.hpp"

#include <fstream>

namespace bifree {

namespace {

Rational rational_from(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw Error(ErrorCode::ParseError, "expected a rational as \"p/q\" or an integer, got " + v.dump());
}

}  // namespace

PairDistribution pair_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("trunc")) throw Error(ErrorCode::ParseError, "missing \"trunc\"");
    const int trunc = j.at("trunc").get<int>();
    if (trunc < 1) throw Error(ErrorCode::ParseError, "\"trunc\" must be at least 1");
    PairDistribution d(trunc);
    for (const auto& entry : j.value("kappa", nlohmann::json::array())) {
      const int n = entry.at("n").get<int>();
      const int m = entry.at("m").get<int>();
      if (n < 0 || m < 0 || n + m > trunc) {
        throw Error(ErrorCode::ParseError,
                    "entry (" + std::to_string(n) + "," + std::to_string(m) + ") outside the truncation");
      }
      if (n + m > 0) d.set_kappa(n, m, rational_from(entry.at("value")));
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

nlohmann::json to_json(const PairDistribution& d) {
  nlohmann::json kappa = nlohmann::json::array();
  for (int total = 1; total <= d.trunc(); ++total) {
    for (int n = total; n >= 0; --n) {
      const Rational& v = d.kappa(n, total - n);
      if (v != 0) kappa.push_back({{"n", n}, {"m", total - n}, {"value", format_rational(v)}});
    }
  }
  return {{"trunc", d.trunc()}, {"kappa", kappa}};
}

PairDistribution load_pair(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return pair_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

MultFn multfn_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of rationals");
  std::vector<Rational> values;
  for (const auto& v : j) values.push_back(rational_from(v));
  return MultFn(std::move(values));
}

nlohmann::json to_json(const MultFn& f) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& v : f.values()) j.push_back(format_rational(v));
  return j;
}

}  // namespace bifree
