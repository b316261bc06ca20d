#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lieext/algebra.hpp"
#include "lieext/error.hpp"
#include "lieext/poisson.hpp"
#include "lieext/spectral.hpp"
#include "lieext/wtensor.hpp"

// JSON file formats. Indices are 0-based; rationals are canonical "p/q"
// strings; unknown fields are rejected; writers emit entries in sorted order.

namespace lieext::io {

using Json = nlohmann::ordered_json;

namespace detail {

using lieext::detail::require;

inline void only_fields(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  require(j.is_object(), where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    require(known, where + ": unknown field '" + key + "'");
  }
}

inline const Json& field(const Json& j, const char* name, const std::string& where) {
  require(j.contains(name), where + ": missing field '" + name + "'");
  return j.at(name);
}

inline std::size_t index_field(const Json& j, const char* name, const std::string& where) {
  const Json& v = field(j, name, where);
  require(v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0),
          where + ": field '" + name + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

inline Rational rational_field(const Json& j, const char* name, const std::string& where) {
  const Json& v = field(j, name, where);
  require(v.is_string(), where + ": field '" + name + "' must be a \"p/q\" string");
  return Rational::parse_canonical(v.get<std::string>());
}

/// Rounds to 12 decimals and folds -0 into 0 for stable reports.
inline double clean(double x) {
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

}  // namespace detail

inline Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(where + ": malformed JSON: " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --- structure constants -----------------------------------------------------

inline Json to_json(const StructureConstants& c) {
  Json brackets = Json::array();
  for (const auto& [key, vec] : c.table()) {
    Json coeffs = Json::array();
    for (const auto& [e, v] : vec) coeffs.push_back(Json{{"e", e}, {"value", v.to_string()}});
    brackets.push_back(Json{{"a", key.first}, {"b", key.second}, {"coeffs", coeffs}});
  }
  return Json{{"dim", c.dim()}, {"name", c.name()}, {"brackets", brackets}};
}

inline StructureConstants structure_constants_from_json(const Json& j) {
  const std::string where = "structure constants";
  detail::only_fields(j, {"dim", "name", "brackets"}, where);
  const std::size_t dim = detail::index_field(j, "dim", where);
  detail::require(dim >= 1, where + ": dim must be >= 1");
  std::string name;
  if (j.contains("name")) {
    detail::require(j.at("name").is_string(), where + ": name must be a string");
    name = j.at("name").get<std::string>();
  }
  StructureConstants c(dim, name);
  const Json& brackets = detail::field(j, "brackets", where);
  detail::require(brackets.is_array(), where + ": brackets must be an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Json& br : brackets) {
    detail::only_fields(br, {"a", "b", "coeffs"}, where + " bracket");
    const std::size_t a = detail::index_field(br, "a", where), b = detail::index_field(br, "b", where);
    detail::require(a < b, where + ": bracket entries need a < b");
    detail::require(b < dim, where + ": bracket index out of range");
    detail::require(seen.emplace(a, b).second, where + ": duplicate bracket entry");
    const Json& coeffs = detail::field(br, "coeffs", where);
    detail::require(coeffs.is_array(), where + ": coeffs must be an array");
    std::set<std::size_t> es;
    for (const Json& co : coeffs) {
      detail::only_fields(co, {"e", "value"}, where + " coefficient");
      const std::size_t e = detail::index_field(co, "e", where);
      detail::require(e < dim, where + ": coefficient index out of range");
      detail::require(es.insert(e).second, where + ": duplicate coefficient index");
      c.add(a, b, e, detail::rational_field(co, "value", where));
    }
  }
  return c;
}

// --- W-tensors ---------------------------------------------------------------

inline Json to_json(const WTensor& w) {
  Json entries = Json::array();
  for (const auto& [idx, v] : w.entries())
    entries.push_back(Json{{"i", idx[0]}, {"j", idx[1]}, {"k", idx[2]}, {"value", v.to_string()}});
  return Json{{"n", w.n()}, {"entries", entries}};
}

/// Entries are kept as listed (sorted, zeros dropped). Listing the same
/// (i,j,k) twice with different values, or listing both (i,j,k) and (j,i,k)
/// with different values, is rejected. A one-sided entry is accepted and
/// later reported by validation as a symmetry violation.
inline WTensor wtensor_from_json(const Json& j) {
  const std::string where = "W-tensor";
  detail::only_fields(j, {"n", "entries"}, where);
  const std::size_t n = detail::index_field(j, "n", where);
  detail::require(n >= 1, where + ": n must be >= 1");
  const Json& entries = detail::field(j, "entries", where);
  detail::require(entries.is_array(), where + ": entries must be an array");
  std::map<WIndex, Rational> listed;
  for (const Json& en : entries) {
    detail::only_fields(en, {"i", "j", "k", "value"}, where + " entry");
    const WIndex idx{detail::index_field(en, "i", where), detail::index_field(en, "j", where),
                     detail::index_field(en, "k", where)};
    for (auto x : idx) detail::require(x < n, where + ": index out of range");
    const Rational v = detail::rational_field(en, "value", where);
    auto [it, inserted] = listed.emplace(idx, v);
    detail::require(inserted || it->second == v, where + ": contradictory duplicate entry");
  }
  WTensor w(n);
  for (const auto& [idx, v] : listed) {
    auto mirror = listed.find({idx[1], idx[0], idx[2]});
    detail::require(mirror == listed.end() || mirror->second == v,
                    where + ": entries (i,j,k) and (j,i,k) disagree at (" + std::to_string(idx[0]) + "," +
                        std::to_string(idx[1]) + "," + std::to_string(idx[2]) + ")");
    w.set(idx[0], idx[1], idx[2], v);
  }
  return w;
}

// --- polynomials -------------------------------------------------------------

inline Json to_json(const PolyFunction& f) {
  Json terms = Json::array();
  for (const auto& [e, v] : f.terms()) terms.push_back(Json{{"exps", e}, {"value", v.to_string()}});
  return Json{{"dim", f.dim()}, {"terms", terms}};
}

inline PolyFunction poly_from_json(const Json& j) {
  const std::string where = "polynomial";
  detail::only_fields(j, {"dim", "terms"}, where);
  const std::size_t dim = detail::index_field(j, "dim", where);
  detail::require(dim >= 1, where + ": dim must be >= 1");
  PolyFunction f(dim);
  const Json& terms = detail::field(j, "terms", where);
  detail::require(terms.is_array(), where + ": terms must be an array");
  for (const Json& t : terms) {
    detail::only_fields(t, {"exps", "value"}, where + " term");
    const Json& exps = detail::field(t, "exps", where);
    detail::require(exps.is_array() && exps.size() == dim, where + ": exps must list dim exponents");
    Exponents e;
    for (const Json& x : exps) {
      detail::require(x.is_number_unsigned() || (x.is_number_integer() && x.get<long long>() >= 0),
                      where + ": exponents must be non-negative integers");
      e.push_back(x.get<std::uint32_t>());
    }
    f.add_term(e, detail::rational_field(t, "value", where));
  }
  return f;
}

// --- spectrum report ---------------------------------------------------------

inline Json spectrum_report(const CirculantClassification& c) {
  Json mu = Json::array();
  for (const auto& z : c.spectrum.values) mu.push_back(Json{{"re", detail::clean(z.real())}, {"im", detail::clean(z.imag())}});
  return Json{{"n", c.spectrum.n}, {"mu", mu}, {"zero_count", c.spectrum.exact_zero_count}, {"m_nonabelian", c.m_nonabelian}};
}

}  // namespace lieext::io
