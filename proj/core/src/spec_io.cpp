#include "lrslab/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lrslab/errors.hpp"

namespace lrslab {

namespace {

using nlohmann::json;

BigInt read_integer(const json& v, const char* field) {
  if (v.is_string()) return parse_bigint(v.get<std::string>());
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
  throw ValidationError(std::string("field '") + field + "' must hold integers as decimal strings");
}

std::vector<BigInt> read_list(const json& doc, const char* field) {
  if (!doc.contains(field) || !doc[field].is_array()) {
    throw ValidationError(std::string("spec is missing list field '") + field + "'");
  }
  std::vector<BigInt> out;
  for (const auto& v : doc[field]) out.push_back(read_integer(v, field));
  return out;
}

}  // namespace

RecurrenceSpec parse_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("spec must be a JSON object");
  RecurrenceSpec spec;
  spec.coeffs = read_list(doc, "coeffs");
  spec.initial = read_list(doc, "initial");
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw ValidationError("spec label must be a string");
    spec.label = doc["label"].get<std::string>();
  }
  if (!doc.contains("order") || !doc["order"].is_number_integer()) {
    throw ValidationError("spec is missing integer field 'order'");
  }
  const long long order = doc["order"].get<long long>();
  if (order < 1) throw ValidationError("spec order must be >= 1");
  if (static_cast<std::size_t>(order) != spec.coeffs.size()) {
    throw ValidationError("spec order " + std::to_string(order) + " does not match " +
                          std::to_string(spec.coeffs.size()) + " coefficients");
  }
  spec.validate();
  return spec;
}

RecurrenceSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open spec file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::string format_spec(const RecurrenceSpec& spec) {
  json doc;
  doc["label"] = spec.label;
  doc["order"] = spec.order();
  doc["coeffs"] = json::array();
  for (const auto& c : spec.coeffs) doc["coeffs"].push_back(to_decimal(c));
  doc["initial"] = json::array();
  for (const auto& c : spec.initial) doc["initial"].push_back(to_decimal(c));
  return doc.dump(2) + "\n";
}

void save_spec(const RecurrenceSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write spec file " + path.string());
  out << format_spec(spec);
}

RecurrenceSpec fibonacci_spec() { return {{1, 1}, {1, 1}, "Fibonacci F_n, F_1 = F_2 = 1"}; }

RecurrenceSpec n_squared_plus_one_spec() { return {{3, -3, 1}, {2, 5, 10}, "n^2 + 1"}; }

RecurrenceSpec complex_lucas_spec() { return {{1, -2}, {1, 1}, "Lucas sequence for X^2 - X + 2"}; }

RecurrenceSpec power_of_two_minus_spec(const BigInt& a) {
  return {{3, -2}, {BigInt(2 - a), BigInt(4 - a)}, "2^n - " + to_decimal(a)};
}

}  // namespace lrslab
