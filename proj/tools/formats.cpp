#include "formats.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace momsolve::cli {

using nlohmann::json;

namespace {

std::pair<int, int> parse_mono_key(const std::string& key) {
  int i = -1, j = -1;
  char extra;
  if (std::sscanf(key.c_str(), "%d,%d%c", &i, &j, &extra) != 2 || i < 0 || j < 0)
    throw ParseError("bad moment key \"" + key + "\": expected \"i,j\" with nonnegative integers");
  return {i, j};
}

// A value is exact when written as a rational string or an integer literal;
// float literals select the float pipeline but still parse to their exact
// binary value.
std::pair<Rational, bool> parse_value(const json& v, const std::string& where) {
  if (v.is_string()) {
    auto r = Rational::parse(v.get<std::string>());
    if (!r) throw ParseError(where + ": malformed rational \"" + v.get<std::string>() + "\"");
    return {*r, true};
  }
  if (v.is_number_integer()) return {Rational(static_cast<long>(v.get<std::int64_t>())), true};
  if (v.is_number_float()) {
    double d = v.get<double>();
    if (!std::isfinite(d)) throw ParseError(where + ": non-finite number");
    return {Rational(d), false};
  }
  throw ParseError(where + ": expected a number or a \"p/q\" string");
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string mono_key(Mono m) { return std::to_string(m.i) + "," + std::to_string(m.j); }

// Exact rationals print as JSON integers when safely representable and as
// quoted "p/q" strings otherwise, so that re-parsing is lossless.
std::string exact_value(const Rational& r) {
  static const mpz_class safe = mpz_class(1) << 53;
  if (r.is_integer() && ::abs(r.num()) < safe) return r.num().get_str();
  return "\"" + r.str() + "\"";
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw ParseError("problem file: top level must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "beta" && key != "tol")
      throw ParseError("problem file: unknown key \"" + key + "\"");
  if (!j.contains("beta") || !j["beta"].is_object())
    throw ParseError("problem file: required object key \"beta\" is missing");

  std::map<Mono, Rational> moments;
  for (const auto& [key, value] : j["beta"].items()) {
    auto [i, mj] = parse_mono_key(key);
    if (i + mj > 3)
      throw ParseError("beta key \"" + key + "\": degree exceeds 3");
    moments[Mono{i, mj}] = parse_value(value, "beta[\"" + key + "\"]").first;
  }
  if (moments.size() != 10)
    throw ParseError("beta: expected all ten moments with i+j <= 3, found " +
                     std::to_string(moments.size()));
  if (moments.at(Mono{0, 0}).sign() <= 0)
    throw ParseError("beta[\"0,0\"]: beta_00 > 0 is required");

  std::optional<double> tol;
  if (j.contains("tol")) {
    if (!j["tol"].is_number() || !(j["tol"].get<double>() > 0))
      throw ParseError("tol: must be a positive number");
    tol = j["tol"].get<double>();
  }
  return ProblemFile{MomentSequence3::from_map(moments), tol};
}

MeasureFile parse_measure(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw ParseError("measure file: top level must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "atoms" && key != "weights" && key != "certificate")
      throw ParseError("measure file: unknown key \"" + key + "\"");
  if (!j.contains("atoms") || !j["atoms"].is_array())
    throw ParseError("measure file: required array key \"atoms\" is missing");
  if (!j.contains("weights") || !j["weights"].is_array())
    throw ParseError("measure file: required array key \"weights\" is missing");
  if (j["atoms"].size() != j["weights"].size())
    throw ParseError("measure file: atoms and weights must have equal length");
  if (j["atoms"].empty()) throw ParseError("measure file: at least one atom is required");

  MeasureFile out;
  out.exact = true;
  for (std::size_t k = 0; k < j["atoms"].size(); ++k) {
    const json& atom = j["atoms"][k];
    if (!atom.is_array() || atom.size() != 2)
      throw ParseError("atoms[" + std::to_string(k) + "]: expected a pair [x, y]");
    auto [x, xe] = parse_value(atom[0], "atoms[" + std::to_string(k) + "][0]");
    auto [y, ye] = parse_value(atom[1], "atoms[" + std::to_string(k) + "][1]");
    auto [w, we] = parse_value(j["weights"][k], "weights[" + std::to_string(k) + "]");
    if (w.sign() <= 0)
      throw ParseError("weights[" + std::to_string(k) + "]: weights must be positive");
    out.atoms.push_back({x, y});
    out.weights.push_back(w);
    out.exact = out.exact && xe && ye && we;
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

template <typename EntryFn>
std::string sym_matrix_json(const SymMatrix& m, EntryFn entry) {
  std::string s = "[";
  for (int i = 0; i < m.dim(); ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < m.dim(); ++j) {
      if (j) s += ", ";
      s += entry(m.at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

std::string relations_json(const std::vector<RelationPoly>& relations, bool exact) {
  std::string s = "[";
  bool first_rel = true;
  for (const auto& rel : relations) {
    if (!first_rel) s += ", ";
    first_rel = false;
    s += "{\"dependent\": \"" + mono_key(rel.dependent) + "\", \"coefficients\": {";
    bool first = true;
    for (const auto& [m, c] : rel.poly.terms()) {
      if (!first) s += ", ";
      first = false;
      s += "\"" + mono_key(m) + "\": " + (exact ? exact_value(c) : format_double(c.to_double()));
    }
    s += "}}";
  }
  return s + "]";
}

}  // namespace

std::string write_solution(const Solution& sol, bool with_certificate, bool exact) {
  std::string s = "{\"atoms\": [";
  for (std::size_t k = 0; k < sol.measure.size(); ++k) {
    if (k) s += ", ";
    s += "[" + format_double(sol.measure.atoms[k][0]) + ", " +
         format_double(sol.measure.atoms[k][1]) + "]";
  }
  s += "], \"weights\": [";
  for (std::size_t k = 0; k < sol.measure.size(); ++k) {
    if (k) s += ", ";
    s += format_double(sol.measure.weights[k]);
  }
  s += "]";
  if (with_certificate) {
    auto entry = [&](const Rational& r) {
      return exact ? exact_value(r) : format_double(r.to_double());
    };
    const auto& cert = sol.certificate;
    s += ", \"certificate\": {\"M2\": " + sym_matrix_json(cert.M2.mat(), entry);
    s += ", \"M3\": " + sym_matrix_json(cert.M3.mat(), entry);
    s += ", \"rank_M2\": " + std::to_string(cert.rank_M2);
    s += ", \"rank_M3\": " + std::to_string(cert.rank_M3);
    s += ", \"relations\": " + relations_json(cert.relations, exact) + "}";
  }
  return s + "}";
}

std::string write_no_measure(const NoMeasure& nm) {
  return std::string("{\"no_measure\": \"") + reason_name(nm.reason) + "\", \"witness\": \"" +
         json_escape(nm.witness) + "\"}";
}

std::string write_verify(const VerifyReport& rep) {
  std::string s = std::string("{\"pass\": ") + (rep.pass ? "true" : "false");
  s += ", \"tolerance\": " + format_double(rep.tolerance);
  s += ", \"max_abs_error\": " + format_double(rep.max_abs_error);
  s += ", \"moments\": [";
  for (std::size_t k = 0; k < rep.moments.size(); ++k) {
    const MomentCheck& c = rep.moments[k];
    if (k) s += ", ";
    s += "{\"moment\": \"" + mono_key(c.m) + "\"";
    s += ", \"expected\": " + format_double(c.expected);
    s += ", \"computed\": " + format_double(c.computed);
    s += ", \"abs_error\": " + format_double(c.abs_error);
    s += ", \"rel_error\": " + format_double(c.rel_error) + "}";
  }
  return s + "]}";
}

std::string write_problem_exact(const std::map<Mono, Rational>& beta) {
  const MonomialIndex idx(3);
  std::string s = "{\"beta\": {";
  for (int k = 0; k < idx.size(); ++k) {
    Mono m = idx.at(k);
    if (k) s += ", ";
    s += "\"" + mono_key(m) + "\": " + exact_value(beta.at(m));
  }
  return s + "}}";
}

std::string write_problem_float(const std::map<Mono, double>& beta) {
  const MonomialIndex idx(3);
  std::string s = "{\"beta\": {";
  for (int k = 0; k < idx.size(); ++k) {
    Mono m = idx.at(k);
    if (k) s += ", ";
    s += "\"" + mono_key(m) + "\": " + format_double(beta.at(m));
  }
  return s + "}}";
}

}  // namespace momsolve::cli
