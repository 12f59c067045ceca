#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "yaogame/game.hpp"
#include "yaogame/types.hpp"

namespace yaogame {

using json = nlohmann::json;

/// A problem as ingested from disk: either raw ratios or an online/offline
/// cost pair, plus the flag permitting sub-unit ratios.
struct Problem {
  std::variant<RatioMatrix, CostModel> payload;
  bool raw_game = false;

  bool has_costs() const { return std::holds_alternative<CostModel>(payload); }

  const Labels& row_labels() const {
    return has_costs() ? std::get<CostModel>(payload).row_labels()
                       : std::get<RatioMatrix>(payload).row_labels();
  }
  const Labels& col_labels() const {
    return has_costs() ? std::get<CostModel>(payload).col_labels()
                       : std::get<RatioMatrix>(payload).col_labels();
  }

  RatioMatrix ratio() const {
    if (has_costs()) return ratio_from_costs(std::get<CostModel>(payload), raw_game);
    return std::get<RatioMatrix>(payload);
  }
};

namespace detail {

inline std::vector<std::vector<double>> numeric_table(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("field '" + field + "' must be a nonempty 2-D numeric array");
  }
  std::vector<std::vector<double>> rows;
  for (const json& row : j) {
    if (!row.is_array() || row.empty()) {
      throw ParseError("field '" + field + "' must contain nonempty numeric rows");
    }
    std::vector<double> out;
    for (const json& x : row) {
      if (!x.is_number()) throw ParseError("field '" + field + "' contains a non-numeric entry");
      out.push_back(x.get<double>());
    }
    if (!rows.empty() && out.size() != rows.front().size()) {
      throw ParseError("field '" + field + "' is ragged");
    }
    rows.push_back(std::move(out));
  }
  return rows;
}

inline std::vector<double> numeric_vector(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("field '" + field + "' must be a nonempty numeric array");
  }
  std::vector<double> out;
  for (const json& x : j) {
    if (!x.is_number()) throw ParseError("field '" + field + "' contains a non-numeric entry");
    out.push_back(x.get<double>());
  }
  return out;
}

inline Labels label_array(const json& j, const std::string& field, char prefix, std::size_t n) {
  if (!j.contains(field)) return default_labels(prefix, n);
  const json& arr = j.at(field);
  if (!arr.is_array()) throw ParseError("field '" + field + "' must be a string array");
  Labels out;
  for (const json& x : arr) {
    if (!x.is_string()) throw ParseError("field '" + field + "' contains a non-string entry");
    out.push_back(x.get<std::string>());
  }
  if (out.size() != n) {
    throw ParseError("field '" + field + "' has " + std::to_string(out.size()) +
                     " entries, expected " + std::to_string(n));
  }
  return out;
}

}  // namespace detail

inline Problem problem_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("problem file must contain a top-level object");
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    throw ParseError("field 'kind' must be \"ratio\" or \"costs\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  bool raw_game = false;
  if (j.contains("raw_game")) {
    if (!j.at("raw_game").is_boolean()) throw ParseError("field 'raw_game' must be a boolean");
    raw_game = j.at("raw_game").get<bool>();
  }

  if (kind == "ratio") {
    if (!j.contains("ratio")) throw ParseError("kind \"ratio\" requires field 'ratio'");
    Matrix m = Matrix::from_rows(detail::numeric_table(j.at("ratio"), "ratio"));
    Labels rows = detail::label_array(j, "row_labels", 's', m.rows());
    Labels cols = detail::label_array(j, "col_labels", 'p', m.cols());
    return Problem{RatioMatrix(std::move(rows), std::move(cols), std::move(m)), raw_game};
  }
  if (kind == "costs") {
    if (!j.contains("cost_on") || !j.contains("cost_off")) {
      throw ParseError("kind \"costs\" requires fields 'cost_on' and 'cost_off'");
    }
    Matrix on = Matrix::from_rows(detail::numeric_table(j.at("cost_on"), "cost_on"));
    std::vector<double> off = detail::numeric_vector(j.at("cost_off"), "cost_off");
    Labels rows = detail::label_array(j, "row_labels", 's', on.rows());
    Labels cols = detail::label_array(j, "col_labels", 'p', on.cols());
    return Problem{CostModel(std::move(rows), std::move(cols), std::move(on), std::move(off)),
                   raw_game};
  }
  throw ParseError("unknown kind '" + kind + "'; expected \"ratio\" or \"costs\"");
}

inline json problem_to_json(const Problem& problem) {
  json j;
  j["row_labels"] = problem.row_labels();
  j["col_labels"] = problem.col_labels();
  if (problem.raw_game) j["raw_game"] = true;
  if (problem.has_costs()) {
    const CostModel& model = std::get<CostModel>(problem.payload);
    j["kind"] = "costs";
    json on = json::array();
    for (std::size_t s = 0; s < model.cost_on().rows(); ++s) {
      json row = json::array();
      for (std::size_t p = 0; p < model.cost_on().cols(); ++p) row.push_back(model.cost_on()(s, p));
      on.push_back(std::move(row));
    }
    j["cost_on"] = std::move(on);
    j["cost_off"] = model.cost_off();
  } else {
    const RatioMatrix& r = std::get<RatioMatrix>(problem.payload);
    j["kind"] = "ratio";
    json rows = json::array();
    for (std::size_t s = 0; s < r.rows(); ++s) {
      json row = json::array();
      for (std::size_t p = 0; p < r.cols(); ++p) row.push_back(r.at(s, p));
      rows.push_back(std::move(row));
    }
    j["ratio"] = std::move(rows);
  }
  return j;
}

inline Problem problem_from_string(const std::string& text, const std::string& origin = "input") {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  return problem_from_json(j);
}

/// Reads a problem from a file path; "-" reads standard input.
inline Problem problem_from_file(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open problem file: " + path);
    buffer << in.rdbuf();
  }
  return problem_from_string(buffer.str(), path);
}

inline void problem_to_file(const Problem& problem, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write problem file: " + path);
  out << problem_to_json(problem).dump(2) << '\n';
}

/// FNV-1a 64-bit over the canonical serialized problem; stable content id
/// for reports.
inline std::string problem_digest(const Problem& problem) {
  const std::string bytes = problem_to_json(problem).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hex[h & 0xF];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string("fnv1a64:") + buf;
}

namespace detail {

inline double parse_weight(const std::string& token, const std::string& origin, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(origin + ":" + std::to_string(line) + ": bad weight '" + token + "'");
  }
  return value;
}

}  // namespace detail

/// Parses "label weight" lines ('#' starts a comment); weights are
/// normalized, labels must belong to the given axis, absent labels get zero.
inline MixedStrategy strategy_from_stream(std::istream& in, const Labels& labels,
                                          const std::string& origin) {
  std::vector<double> mass(labels.size(), 0.0);
  std::vector<bool> seen(labels.size(), false);
  std::string line;
  std::size_t line_no = 0, assigned = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string label, weight_token, extra;
    if (!(fields >> label)) continue;  // blank line
    if (!(fields >> weight_token) || (fields >> extra)) {
      throw ParseError(origin + ":" + std::to_string(line_no) +
                       ": expected 'label weight' per line");
    }
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
      throw LabelMismatch(origin + ":" + std::to_string(line_no) + ": unknown label '" + label +
                          "'");
    }
    std::size_t idx = static_cast<std::size_t>(it - labels.begin());
    if (seen[idx]) {
      throw ParseError(origin + ":" + std::to_string(line_no) + ": duplicate label '" + label +
                       "'");
    }
    seen[idx] = true;
    mass[idx] = detail::parse_weight(weight_token, origin, line_no);
    ++assigned;
  }
  if (assigned == 0) throw ParseError(origin + ": no weights found");
  return MixedStrategy::normalized(labels, std::move(mass));
}

/// Resolves a distribution argument: "uniform", "point:<label>", or a path
/// to a weights file.
inline MixedStrategy strategy_from_spec(const std::string& spec, const Labels& labels) {
  if (spec == "uniform") return MixedStrategy::uniform(labels);
  if (spec.rfind("point:", 0) == 0) return MixedStrategy::point(labels, spec.substr(6));
  std::ifstream in(spec);
  if (!in) throw ParseError("cannot open distribution file: " + spec);
  return strategy_from_stream(in, labels, spec);
}

}  // namespace yaogame
