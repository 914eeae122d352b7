#pragma once

// JSON input-document parsing and deterministic serialization.  Reports
// are emitted with a fixed-format float renderer (17 significant digits in
// JSON, 12 in CSV) so identical inputs produce byte-identical output.

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hodgebound/bounds.hpp"
#include "hodgebound/report.hpp"
#include "hodgebound/submanifold.hpp"

namespace hodgebound {

using Json = nlohmann::ordered_json;

// Ambient curvature data: a single constant c (c_lower == c_upper) or a
// two-sided pinching c_lower <= c_upper.
struct AmbientSpec {
  double c_lower = 0.0;
  double c_upper = 0.0;
  bool two_sided = false;
};

struct InputDocument {
  int n = 0;
  int m = 0;
  SecondFundamentalFormd B;
  std::optional<AmbientSpec> ambient;
  std::optional<double> ric_min;
};

// Parses and validates the second-fundamental-form document
//   {"n": int, "m": int, "h": [[..n x n..] x m],
//    "ambient": {"kind":"constant","c":x} | {"c_lower":x,"c_upper":y},
//    "ric_min": x}
// (ambient and ric_min optional).  Throws std::invalid_argument with a
// description on any malformed field; symmetry tolerance 1e-12.
inline InputDocument parse_input_document(const Json& j) {
  InputDocument doc;
  if (!j.is_object()) throw std::invalid_argument("input: top level must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("input: missing integer field 'n'");
  if (!j.contains("m") || !j["m"].is_number_integer())
    throw std::invalid_argument("input: missing integer field 'm'");
  doc.n = j["n"].get<int>();
  doc.m = j["m"].get<int>();
  if (doc.n < 1 || doc.n > kMaxDimension)
    throw std::invalid_argument("input: n out of supported range");
  if (doc.m < 1) throw std::invalid_argument("input: m must be positive");
  if (!j.contains("h") || !j["h"].is_array() || j["h"].size() != size_t(doc.m))
    throw std::invalid_argument("input: 'h' must be an array of m matrices");
  doc.B.n = doc.n;
  doc.B.m = doc.m;
  for (const auto& ha : j["h"]) {
    if (!ha.is_array() || ha.size() != size_t(doc.n))
      throw std::invalid_argument("input: each h[a] must be an n x n matrix");
    Eigen::MatrixXd Ma(doc.n, doc.n);
    for (int i = 0; i < doc.n; ++i) {
      const auto& row = ha[i];
      if (!row.is_array() || row.size() != size_t(doc.n))
        throw std::invalid_argument("input: each h[a] must be an n x n matrix");
      for (int k = 0; k < doc.n; ++k) {
        if (!row[k].is_number())
          throw std::invalid_argument("input: h entries must be numbers");
        Ma(i, k) = row[k].get<double>();
      }
    }
    if ((Ma - Ma.transpose()).lpNorm<Eigen::Infinity>() > 1e-12)
      throw std::invalid_argument("input: h[a] not symmetric within 1e-12");
    doc.B.h.push_back(std::move(Ma));
  }
  if (j.contains("ambient")) {
    const auto& amb = j["ambient"];
    if (!amb.is_object()) throw std::invalid_argument("input: 'ambient' must be an object");
    AmbientSpec spec;
    if (amb.contains("kind")) {
      if (amb["kind"] != "constant")
        throw std::invalid_argument("input: ambient.kind must be 'constant'");
      if (!amb.contains("c") || !amb["c"].is_number())
        throw std::invalid_argument("input: constant ambient requires numeric 'c'");
      spec.c_lower = spec.c_upper = amb["c"].get<double>();
    } else if (amb.contains("c_lower") && amb.contains("c_upper")) {
      if (!amb["c_lower"].is_number() || !amb["c_upper"].is_number())
        throw std::invalid_argument("input: ambient bounds must be numbers");
      spec.c_lower = amb["c_lower"].get<double>();
      spec.c_upper = amb["c_upper"].get<double>();
      spec.two_sided = true;
      if (spec.c_upper < spec.c_lower)
        throw std::invalid_argument("input: ambient c_upper < c_lower");
    } else {
      throw std::invalid_argument("input: ambient needs kind/c or c_lower/c_upper");
    }
    doc.ambient = spec;
  }
  if (j.contains("ric_min")) {
    if (!j["ric_min"].is_number())
      throw std::invalid_argument("input: ric_min must be a number");
    doc.ric_min = j["ric_min"].get<double>();
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Deterministic serialization

// Shortest-faithful rendering at a fixed significant-digit budget.
inline std::string format_double(double x, int digits) {
  if (std::isnan(x)) return "null";
  if (std::isinf(x)) return x > 0 ? "1e999" : "-1e999";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

inline void append_json_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

// Recursive pretty-printer with pinned float formatting; key order is the
// insertion order of the ordered_json input.
inline void write_json(std::string& out, const Json& j, int digits, int indent) {
  const std::string pad(2 * indent, ' ');
  const std::string pad_in(2 * (indent + 1), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) { out += "{}"; return; }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        append_json_escaped(out, it.key());
        out += ": ";
        write_json(out, it.value(), digits, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) { out += "[]"; return; }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        write_json(out, v, digits, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::string: append_json_escaped(out, j.get<std::string>()); return;
    case Json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; return;
    case Json::value_t::number_integer: out += std::to_string(j.get<long long>()); return;
    case Json::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      return;
    case Json::value_t::number_float: out += format_double(j.get<double>(), digits); return;
    default: out += "null"; return;
  }
}

inline std::string serialize_json(const Json& j, int digits = 17) {
  std::string out;
  write_json(out, j, digits, 0);
  out += "\n";
  return out;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

}  // namespace hodgebound
