#pragma once

// JSON input and export: field, Hopf algebra, module, carrier and C-action blocks.
// Scalars are strings in the printed form of the coefficient type ("3/4", "1-2*z^2").
// Indices are 0-based; sparse blocks list [index..., "scalar"] rows and repeated
// rows add up.

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "errors.hpp"
#include "field.hpp"
#include "hopf.hpp"
#include "pairing.hpp"
#include "sayd.hpp"

namespace hopfcyclic {

using Json = nlohmann::ordered_json;

inline Error parse_error(const std::string& where, const std::string& reason) {
  return Error(ErrorCode::parse_error, where + ": " + reason);
}

// ---------------------------------------------------------------------------
// Scalars

inline Rational parse_rational(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::division_by_zero) throw Error(ErrorCode::parse_error, "zero denominator in '" + text + "'");
    throw;
  }
}

inline Rational parse_scalar(const std::string& text, const RationalField&) { return parse_rational(text); }

/// Sums of terms c, c*z, c*z^k, z^k and their negatives.
inline Cyclotomic parse_scalar(const std::string& text, const CyclotomicField& field) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorCode::parse_error, "empty scalar");
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= s.size(); ++i)
    if (i == s.size() || ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '^')) {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  RatPoly poly;
  for (std::string t : terms) {
    bool neg = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
      neg = t[0] == '-';
      t.erase(t.begin());
    }
    if (t.empty()) throw Error(ErrorCode::parse_error, "malformed scalar '" + text + "'");
    Rational coef(1);
    std::size_t power = 0;
    auto z = t.find('z');
    if (z == std::string::npos) {
      coef = parse_rational(t);
    } else {
      std::string head = t.substr(0, z), tail = t.substr(z + 1);
      if (!head.empty()) {
        if (head.back() != '*') throw Error(ErrorCode::parse_error, "malformed scalar '" + text + "'");
        head.pop_back();
        coef = parse_rational(head);
      }
      if (tail.empty()) power = 1;
      else if (tail[0] == '^' && tail.size() > 1 &&
               tail.find_first_not_of("0123456789", 1) == std::string::npos && tail.size() < 8)
        power = std::stoul(tail.substr(1));
      else throw Error(ErrorCode::parse_error, "malformed scalar '" + text + "'");
    }
    if (poly.size() <= power) poly.resize(power + 1);
    poly[power] += neg ? -coef : coef;
  }
  return field.from_coeffs(std::move(poly));
}

inline FieldSpec parse_field_flag(const std::string& text) {
  if (text == "Q") return FieldSpec::rationals();
  const std::string prefix = "cyclotomic:";
  if (text.rfind(prefix, 0) == 0) {
    std::string n = text.substr(prefix.size());
    if (!n.empty() && n.size() < 6 && n.find_first_not_of("0123456789") == std::string::npos && std::stoi(n) >= 1)
      return FieldSpec::cyclotomic(std::stoi(n));
  }
  throw Error(ErrorCode::parse_error, "field must be Q or cyclotomic:N, got '" + text + "'");
}

inline FieldSpec field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw parse_error("field", "needs a \"kind\"");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "cyclotomic") {
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 1 || j["n"].get<long long>() > 10000)
      throw parse_error("field.n", "needs a positive integer");
    return FieldSpec::cyclotomic(j["n"].get<int>());
  }
  throw parse_error("field.kind", "unknown field '" + kind + "'");
}

inline Json field_to_json(const FieldSpec& f) {
  if (f.kind == FieldSpec::Kind::rationals) return Json{{"kind", "Q"}};
  return Json{{"kind", "cyclotomic"}, {"n", f.order}};
}

inline RationalField make_field(const FieldSpec&, const Rational*) { return {}; }
inline CyclotomicField make_field(const FieldSpec& f, const Cyclotomic*) { return CyclotomicField(f.order); }

/// The field object for coefficient type F described by `f`.
template <class F>
typename F::field_type field_for(const FieldSpec& f) {
  return make_field(f, static_cast<const F*>(nullptr));
}

// ---------------------------------------------------------------------------
// Reading helpers

namespace detail {

inline std::size_t get_index(const Json& j, const std::string& where, std::size_t bound) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || static_cast<std::size_t>(j.get<long long>()) >= bound)
    throw parse_error(where, "index out of range [0, " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(j.get<long long>());
}

inline std::size_t get_dim(const Json& obj, const std::string& where) {
  if (!obj.is_object()) throw parse_error(where, "expected an object");
  if (!obj.contains("dim") || !obj["dim"].is_number_integer() || obj["dim"].get<long long>() < 1 ||
      obj["dim"].get<long long>() > 4096)
    throw parse_error(where + ".dim", "expected a positive integer");
  return static_cast<std::size_t>(obj["dim"].get<long long>());
}

template <class F>
F get_scalar(const Json& j, const std::string& where, const typename F::field_type& field) {
  if (!j.is_string() && !j.is_number_integer()) throw parse_error(where, "scalar must be a string");
  try {
    return parse_scalar(j.is_string() ? j.get<std::string>() : std::to_string(j.get<long long>()), field);
  } catch (const Error& e) {
    throw parse_error(where, e.message());
  }
}

inline const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw parse_error(where, std::string("missing \"") + key + "\"");
  return obj[key];
}

/// Rows [i_1, ..., i_k, "scalar"] accumulated through `add(indices, value)`.
template <class F, class Add>
void read_sparse(const Json& rows, const std::string& where, const std::vector<std::size_t>& bounds,
                 const typename F::field_type& field, Add&& add) {
  if (!rows.is_array()) throw parse_error(where, "expected an array of rows");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string at = where + "[" + std::to_string(r) + "]";
    const Json& row = rows[r];
    if (!row.is_array() || row.size() != bounds.size() + 1)
      throw parse_error(at, "expected " + std::to_string(bounds.size()) + " indices and a scalar");
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < bounds.size(); ++k) idx.push_back(get_index(row[k], at, bounds[k]));
    add(idx, get_scalar<F>(row[bounds.size()], at, field));
  }
}

template <class F>
std::vector<F> read_dense(const Json& j, const std::string& where, std::size_t dim, const typename F::field_type& field) {
  if (!j.is_array() || j.size() != dim) throw parse_error(where, "shape: expected " + std::to_string(dim) + " scalars");
  std::vector<F> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(get_scalar<F>(j[i], where + "[" + std::to_string(i) + "]", field));
  return out;
}

template <class F>
Vec<F> dense_to_vec(const std::vector<F>& v) {
  std::vector<typename Vec<F>::Entry> t;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) t.emplace_back(i, v[i]);
  return Vec<F>::from_terms(std::move(t));
}

inline std::vector<std::string> read_labels(const Json& obj, const std::string& where, std::size_t dim,
                                            const std::string& stem) {
  std::vector<std::string> out;
  if (!obj.contains("basis")) {
    for (std::size_t i = 0; i < dim; ++i) out.push_back(stem + std::to_string(i));
    return out;
  }
  const Json& b = obj["basis"];
  if (!b.is_array() || b.size() != dim) throw parse_error(where + ".basis", "shape: expected " + std::to_string(dim) + " labels");
  for (const auto& l : b) {
    if (!l.is_string()) throw parse_error(where + ".basis", "labels must be strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

inline Side read_side(const Json& obj, const char* key, const std::string& where) {
  const Json& s = require(obj, key, where);
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw parse_error(where + "." + key, "expected \"left\" or \"right\"");
}

/// Accumulates sparse triples into dim-indexed columns.
template <class F>
struct ColumnAccumulator {
  std::vector<std::vector<typename Vec<F>::Entry>> cols;
  explicit ColumnAccumulator(std::size_t n) : cols(n) {}
  void add(std::size_t col, std::size_t row, const F& v) { cols[col].emplace_back(row, v); }
  std::vector<Vec<F>> finish() {
    std::vector<Vec<F>> out;
    for (auto& c : cols) out.push_back(Vec<F>::from_terms(std::move(c)));
    return out;
  }
};

template <class F>
AlgebraData<F> read_algebra(const Json& obj, const std::string& where, std::size_t dim,
                            const typename F::field_type& field, const std::string& stem) {
  AlgebraData<F> a;
  a.dim = dim;
  a.labels = read_labels(obj, where, dim, stem);
  ColumnAccumulator<F> mult(dim * dim);
  read_sparse<F>(require(obj, "mult", where), where + ".mult", {dim, dim, dim}, field,
                 [&](const auto& i, const F& v) { mult.add(i[0] * dim + i[1], i[2], v); });
  a.mult = mult.finish();
  a.unit = dense_to_vec(read_dense<F>(require(obj, "unit", where), where + ".unit", dim, field));
  return a;
}

template <class F>
CoalgebraData<F> read_coalgebra(const Json& obj, const std::string& where, std::size_t dim,
                                const typename F::field_type& field) {
  CoalgebraData<F> c;
  c.dim = dim;
  ColumnAccumulator<F> co(dim);
  read_sparse<F>(require(obj, "comult", where), where + ".comult", {dim, dim, dim}, field,
                 [&](const auto& i, const F& v) { co.add(i[0], i[1] * dim + i[2], v); });
  c.comult = co.finish();
  c.counit = read_dense<F>(require(obj, "counit", where), where + ".counit", dim, field);
  return c;
}

/// Action rows [h, i, j, s]: e_h acting on basis i has coefficient s on basis j.
template <class F>
ActionData<F> read_action(const Json& obj, const std::string& where, std::size_t dh, std::size_t dim,
                          const typename F::field_type& field) {
  ActionData<F> a;
  a.side = read_side(obj, "action_side", where);
  std::vector<ColumnAccumulator<F>> acc(dh, ColumnAccumulator<F>(dim));
  read_sparse<F>(require(obj, "action", where), where + ".action", {dh, dim, dim}, field,
                 [&](const auto& i, const F& v) { acc[i[0]].add(i[1], i[2], v); });
  for (auto& c : acc) a.mats.push_back(Matrix<F>::from_columns(dim, c.finish()));
  return a;
}

/// Coaction rows [i, h, j, s]: basis i has coefficient s on e_h (x) basis j (left)
/// or basis j (x) e_h (right).
template <class F>
CoactionData<F> read_coaction(const Json& obj, const std::string& where, std::size_t dh, std::size_t dim,
                              const typename F::field_type& field) {
  CoactionData<F> c;
  c.side = read_side(obj, "coaction_side", where);
  ColumnAccumulator<F> acc(dim);
  read_sparse<F>(require(obj, "coaction", where), where + ".coaction", {dim, dh, dim}, field,
                 [&](const auto& i, const F& v) { acc.add(i[0], c.side == Side::left ? i[1] * dim + i[2] : i[2] * dh + i[1], v); });
  c.map = Matrix<F>::from_columns(dh * dim, acc.finish());
  return c;
}

template <class F>
Json scalar_json(const F& v) {
  return v.str();
}

template <class F>
void write_algebra(Json& out, const AlgebraData<F>& a) {
  out["basis"] = a.labels;
  Json mult = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (const auto& [k, c] : a.mult[i * a.dim + j]) mult.push_back(Json::array({i, j, k, scalar_json(c)}));
  out["mult"] = std::move(mult);
  Json unit = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i) unit.push_back(scalar_json(a.unit.at(i)));
  out["unit"] = std::move(unit);
}

template <class F>
void write_coalgebra(Json& out, const CoalgebraData<F>& c) {
  Json co = Json::array();
  for (std::size_t k = 0; k < c.dim; ++k)
    for (const auto& [ij, s] : c.comult[k]) co.push_back(Json::array({k, ij / c.dim, ij % c.dim, scalar_json(s)}));
  out["comult"] = std::move(co);
  Json counit = Json::array();
  for (const auto& e : c.counit) counit.push_back(scalar_json(e));
  out["counit"] = std::move(counit);
}

template <class F>
void write_action(Json& out, const ActionData<F>& a) {
  out["action_side"] = to_string(a.side);
  Json rows = Json::array();
  for (std::size_t h = 0; h < a.mats.size(); ++h)
    for (std::size_t i = 0; i < a.mats[h].cols(); ++i)
      for (const auto& [j, s] : a.mats[h].col(i)) rows.push_back(Json::array({h, i, j, scalar_json(s)}));
  out["action"] = std::move(rows);
}

template <class F>
void write_coaction(Json& out, const CoactionData<F>& c, std::size_t dh, std::size_t dim) {
  out["coaction_side"] = to_string(c.side);
  Json rows = Json::array();
  for (std::size_t i = 0; i < dim; ++i)
    for (const auto& [idx, s] : c.map.col(i)) {
      std::size_t h = c.side == Side::left ? idx / dim : idx % dh;
      std::size_t j = c.side == Side::left ? idx % dim : idx / dh;
      rows.push_back(Json::array({i, h, j, scalar_json(s)}));
    }
  out["coaction"] = std::move(rows);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Hopf algebras and modules

template <class F>
HopfData<F> hopf_from_json(const Json& j, const typename F::field_type& field) {
  const std::string where = "hopf";
  const std::size_t d = detail::get_dim(j, where);
  HopfData<F> h{field, detail::read_algebra<F>(j, where, d, field, "e"), detail::read_coalgebra<F>(j, where, d, field),
                Matrix<F>(d, d), std::nullopt};
  const Json& s = detail::require(j, "antipode", where);
  if (!s.is_array() || s.size() != d) throw parse_error("hopf.antipode", "shape: expected " + std::to_string(d) + " rows");
  std::vector<std::vector<typename Vec<F>::Entry>> cols(d);
  for (std::size_t r = 0; r < d; ++r) {
    const std::string at = "hopf.antipode[" + std::to_string(r) + "]";
    if (!s[r].is_array() || s[r].size() != d)
      throw parse_error(at, "shape: expected a square " + std::to_string(d) + "x" + std::to_string(d) + " grid");
    for (std::size_t c = 0; c < d; ++c) {
      F v = detail::get_scalar<F>(s[r][c], at, field);
      if (!v.is_zero()) cols[c].emplace_back(r, v);
    }
  }
  std::vector<Vec<F>> vc;
  for (auto& c : cols) vc.push_back(Vec<F>::from_terms(std::move(c)));
  h.antipode = Matrix<F>::from_columns(d, vc);
  return h;
}

template <class F>
Json hopf_to_json(const HopfData<F>& h) {
  Json out;
  out["dim"] = h.dim();
  detail::write_algebra(out, h.algebra);
  detail::write_coalgebra(out, h.coalgebra);
  Json s = Json::array();
  for (std::size_t r = 0; r < h.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < h.dim(); ++c) row.push_back(detail::scalar_json(h.antipode.at(r, c)));
    s.push_back(std::move(row));
  }
  out["antipode"] = std::move(s);
  return out;
}

template <class F>
SaydCandidate<F> module_from_json(const Json& j, const HopfData<F>& h) {
  const std::string where = "module";
  SaydCandidate<F> m;
  m.dim = detail::get_dim(j, where);
  m.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "M";
  m.labels = detail::read_labels(j, where, m.dim, "m");
  m.action = detail::read_action<F>(j, where, h.dim(), m.dim, h.field);
  m.coaction = detail::read_coaction<F>(j, where, h.dim(), m.dim, h.field);
  return m;
}

template <class F>
Json module_to_json(const SaydCandidate<F>& m, std::size_t dh) {
  Json out;
  out["name"] = m.name;
  out["dim"] = m.dim;
  out["basis"] = m.labels;
  detail::write_action(out, m.action);
  detail::write_coaction(out, m.coaction, dh, m.dim);
  return out;
}

// ---------------------------------------------------------------------------
// Carriers and C-actions

inline const std::vector<std::string>& carrier_presets() {
  static const std::vector<std::string> names{"regular", "adjoint", "regular_comodule", "trivial_action"};
  return names;
}

/// Either a preset name (resolved against H) or an explicit algebra/coalgebra block
/// with optional "action" and "coaction".
template <class F>
Carrier<F> carrier_from_json(const Json& j, const HopfData<F>& h) {
  if (j.is_string() || (j.is_object() && j.contains("preset"))) {
    const std::string p = j.is_string() ? j.get<std::string>() : j["preset"].is_string() ? j["preset"].get<std::string>() : "";
    if (p == "regular") return regular_module_carrier(h);
    if (p == "adjoint") return adjoint_module_carrier(h);
    if (p == "regular_comodule") return regular_comodule_algebra(h, Side::right);
    if (p == "trivial_action") return with_trivial_action(h, carrier_of(h));
    throw parse_error("carrier.preset", "unknown preset '" + p + "'");
  }
  const std::string where = "carrier";
  Carrier<F> c;
  c.dim = detail::get_dim(j, where);
  c.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "A";
  if (j.contains("mult")) c.algebra = detail::read_algebra<F>(j, where, c.dim, h.field, "a");
  c.labels = detail::read_labels(j, where, c.dim, "a");
  if (j.contains("comult")) c.coalgebra = detail::read_coalgebra<F>(j, where, c.dim, h.field);
  if (j.contains("action")) c.action = detail::read_action<F>(j, where, h.dim(), c.dim, h.field);
  if (j.contains("coaction")) c.coaction = detail::read_coaction<F>(j, where, h.dim(), c.dim, h.field);
  if (!c.algebra && !c.coalgebra) throw parse_error(where, "needs \"mult\" or \"comult\"");
  return c;
}

template <class F>
Json carrier_to_json(const Carrier<F>& c, std::size_t dh) {
  Json out;
  out["name"] = c.name;
  out["dim"] = c.dim;
  if (c.algebra) detail::write_algebra(out, *c.algebra);
  else out["basis"] = c.labels;
  if (c.coalgebra) detail::write_coalgebra(out, *c.coalgebra);
  if (c.action) detail::write_action(out, *c.action);
  if (c.coaction) detail::write_coaction(out, *c.coaction, dh, c.dim);
  return out;
}

/// "adjoint" (C = A = H acting adjointly) or rows [c, a, j, s]: c acting on basis a has
/// coefficient s on basis j.
template <class F>
CoalgebraActionOnAlgebra<F> c_action_from_json(const Json& j, const HopfData<F>& h, std::size_t dc, std::size_t da) {
  if (j.is_string()) {
    if (j.get<std::string>() == "adjoint") return adjoint_coalgebra_action(h);
    throw parse_error("c_action", "unknown preset '" + j.get<std::string>() + "'");
  }
  detail::ColumnAccumulator<F> acc(dc * da);
  detail::read_sparse<F>(j, "c_action", {dc, da, da}, h.field,
                         [&](const auto& i, const F& v) { acc.add(i[0] * da + i[1], i[2], v); });
  return CoalgebraActionOnAlgebra<F>{Matrix<F>::from_columns(da, acc.finish())};
}

// ---------------------------------------------------------------------------
// Whole documents

/// Byte offset to 1-based line number.
inline std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::parse_error, "line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON");
  }
}

template <class F>
struct Document {
  FieldSpec field;
  HopfData<F> hopf;
  std::optional<SaydCandidate<F>> module;
  std::optional<Json> carrier;   // resolved per command
  std::optional<Json> c_action;  // resolved per command
  std::optional<Json> algebra;   // second carrier for pairings
};

inline FieldSpec document_field(const Json& doc) {
  if (!doc.is_object()) throw parse_error("document", "expected an object");
  return doc.contains("field") ? field_from_json(doc["field"]) : FieldSpec::rationals();
}

template <class F>
Document<F> document_from_json(const Json& doc) {
  FieldSpec fs = document_field(doc);
  auto field = field_for<F>(fs);
  HopfData<F> h = hopf_from_json<F>(detail::require(doc, "hopf", "document"), field);
  Document<F> out{fs, std::move(h), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  if (doc.contains("module")) out.module = module_from_json(doc["module"], out.hopf);
  if (doc.contains("carrier")) out.carrier = doc["carrier"];
  if (doc.contains("algebra")) out.algebra = doc["algebra"];
  if (doc.contains("c_action")) out.c_action = doc["c_action"];
  return out;
}

template <class F>
Json document_to_json(const HopfData<F>& h, const SaydCandidate<F>* module = nullptr, const Json* carrier = nullptr) {
  Json out;
  out["field"] = field_to_json(h.field.spec());
  out["hopf"] = hopf_to_json(h);
  if (module) out["module"] = module_to_json(*module, h.dim());
  if (carrier) out["carrier"] = *carrier;
  return out;
}

}  // namespace hopfcyclic
