#pragma once

// JSON encodings of the library's inputs and results (requires nlohmann/json).
//
// Integers are plain JSON numbers when they fit in int64 and decimal strings
// otherwise; both forms are accepted on input. Indices in triple lists are
// 1-based. Unknown keys are rejected. Every parse error is a MalformedInput.

#include "conjspace/bordism/tables.hpp"
#include "conjspace/bordism/zubr.hpp"
#include "conjspace/conjugation.hpp"
#include "conjspace/lambda.hpp"
#include "conjspace/threefold.hpp"
#include "conjspace/wall.hpp"

#include <json.hpp>

#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace conjspace::json_io {

using json = nlohmann::ordered_json;

struct MalformedInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Largest rank accepted for trilinear forms and Lambda-modules read from JSON.
inline constexpr std::size_t kMaxInputRank = 64;

inline void check_input_rank(std::size_t n, const std::string& what) {
  if (n > kMaxInputRank)
    throw std::length_error(what + ": rank " + std::to_string(n) + " exceeds the input limit " + std::to_string(kMaxInputRank));
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

inline void expect_keys(const json& j, const std::string& what, std::initializer_list<const char*> required,
                        std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw MalformedInput(what + ": expected a JSON object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!j.contains(k)) throw MalformedInput(what + ": missing key \"" + k + "\"");
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& item : j.items())
    if (!allowed.count(item.key())) throw MalformedInput(what + ": unknown key \"" + item.key() + "\"");
}

inline Int to_int(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw MalformedInput(what + ": \"" + s + "\" is not a decimal integer");
    return Int(s);
  }
  throw MalformedInput(what + ": expected an integer, got " + std::string(j.type_name()) +
                       (j.is_number_float() ? " (floats are not accepted)" : ""));
}

inline std::size_t to_count(const json& j, const std::string& what) {
  const Int v = to_int(j, what);
  if (v < 0 || v > 1000000) throw MalformedInput(what + ": expected a nonnegative count, got " + v.str());
  return static_cast<std::size_t>(v);
}

inline const json& to_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw MalformedInput(what + ": expected an array");
  return j;
}

inline IntVector to_int_vector(const json& j, const std::string& what) {
  IntVector out;
  for (const auto& x : to_array(j, what)) out.push_back(to_int(x, what));
  return out;
}

inline json from_int(const Int& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.str();
}

inline json from_int_vector(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(from_int(x));
  return out;
}

inline json from_f2_vector(const F2Vector& v) {
  json out = json::array();
  for (auto x : v) out.push_back(static_cast<int>(x & 1u));
  return out;
}

inline json from_f2_matrix(const F2Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string row;
    for (std::size_t c = 0; c < m.cols(); ++c) row += m.get(r, c) ? '1' : '0';
    out.push_back(row);
  }
  return out;
}

inline json from_int_matrix(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(from_int_vector(m.row(r)));
  return out;
}

namespace detail {

inline Triple to_triple(const json& entry, std::size_t m, const std::string& what) {
  Triple t{};
  for (std::size_t a = 0; a < 3; ++a) {
    const std::size_t i = to_count(entry[a], what);
    if (i < 1 || i > m) throw MalformedInput(what + ": index " + std::to_string(i) + " outside 1.." + std::to_string(m));
    t[a] = i - 1;
  }
  return sorted_triple(t[0], t[1], t[2]);
}

}  // namespace detail

/// [[i,j,k,val],...]; each unordered triple at most once.
inline TriFormZ to_triform_z(const json& j, std::size_t m, const std::string& what) {
  check_input_rank(m, what);
  TriFormZ t(m);
  std::set<Triple> seen;
  for (const auto& entry : to_array(j, what)) {
    if (!entry.is_array() || entry.size() != 4) throw MalformedInput(what + ": entries must be [i,j,k,value]");
    const Triple tr = detail::to_triple(entry, m, what);
    if (!seen.insert(tr).second) throw MalformedInput(what + ": triple listed twice");
    t.set(tr[0], tr[1], tr[2], to_int(entry[3], what));
  }
  return t;
}

/// [[i,j,k],...] listing the triples with coefficient 1.
inline TriFormF2 to_triform_f2(const json& j, std::size_t m, const std::string& what) {
  check_input_rank(m, what);
  TriFormF2 t(m);
  std::set<Triple> seen;
  for (const auto& entry : to_array(j, what)) {
    if (!entry.is_array() || entry.size() != 3) throw MalformedInput(what + ": entries must be [i,j,k]");
    const Triple tr = detail::to_triple(entry, m, what);
    if (!seen.insert(tr).second) throw MalformedInput(what + ": triple listed twice");
    t.set(tr[0], tr[1], tr[2], 1);
  }
  return t;
}

/// Nonzero coefficients as [i,j,k,val], 1-based sorted triples.
inline json from_triform(const TriFormZ& t) {
  json out = json::array();
  for (const auto& [i, j, k] : sorted_triples(t.rank()))
    if (t(i, j, k) != 0) out.push_back(json::array({i + 1, j + 1, k + 1, from_int(t(i, j, k))}));
  return out;
}

inline json from_triform(const TriFormF2& t) {
  json out = json::array();
  for (const auto& [i, j, k] : sorted_triples(t.rank()))
    if (t(i, j, k)) out.push_back(json::array({i + 1, j + 1, k + 1}));
  return out;
}

struct WallInput {
  std::size_t m = 0;
  TriFormZ mu;
  IntVector p1;
};

inline WallInput to_wall_input(const json& j) {
  expect_keys(j, "wall data", {"m", "mu", "p1"});
  WallInput w;
  w.m = to_count(j["m"], "m");
  w.mu = to_triform_z(j["mu"], w.m, "mu");
  w.p1 = to_int_vector(j["p1"], "p1");
  if (w.p1.size() != w.m)
    throw MalformedInput("p1: length " + std::to_string(w.p1.size()) + " does not match m = " + std::to_string(w.m));
  return w;
}

inline WallValidation validate(const WallInput& w, const WallOptions& opts = {}) {
  return WallData::validate(w.m, w.mu, w.p1, opts);
}

inline json from_wall_data(const WallData& W) {
  return {{"m", W.m()}, {"mu", from_triform(W.mu())}, {"p1", from_int_vector(W.p1())}};
}

inline json from_wall_validation(const WallValidation& v) {
  json violations = json::array();
  for (const auto& x : v.violations) {
    json item = {{"kind", to_string(x.kind)}, {"x", from_int_vector(x.x)}};
    if (!x.y.empty()) item["y"] = from_int_vector(x.y);
    item["message"] = x.message;
    violations.push_back(std::move(item));
  }
  return {{"valid", v.ok()}, {"violations", violations}};
}

inline M3Data to_m3(const json& j) {
  expect_keys(j, "3-manifold data", {"b1", "t"}, {"torsion"});
  const std::size_t b1 = to_count(j["b1"], "b1");
  IntVector torsion = j.contains("torsion") ? to_int_vector(j["torsion"], "torsion") : IntVector{};
  return M3Data::make(b1, std::move(torsion), to_triform_f2(j["t"], b1, "t"));
}

inline json from_m3(const M3Data& M) {
  return {{"b1", M.b1()}, {"torsion", from_int_vector(M.torsion())}, {"t", from_triform(M.t())}};
}

inline ZubrClass to_zubr(const json& j) {
  expect_keys(j, "bordism class", {"m", "lambda", "mu"});
  const std::size_t m = to_count(j["m"], "m");
  IntVector lambda = to_int_vector(j["lambda"], "lambda");
  if (lambda.size() != m)
    throw MalformedInput("lambda: length " + std::to_string(lambda.size()) + " does not match m = " + std::to_string(m));
  return {std::move(lambda), to_triform_z(j["mu"], m, "mu")};
}

inline json from_zubr(const ZubrClass& z) {
  return {{"m", z.m()}, {"lambda", from_int_vector(z.lambda)}, {"mu", from_triform(z.mu)}};
}

inline json from_verdict(const Verdict& v) {
  json out = {{"outcome", to_string(v.outcome)}};
  out["certificate"] = v.certificate ? from_f2_matrix(*v.certificate) : json(nullptr);
  out["reasons"] = v.reasons;
  return out;
}

inline LambdaModule to_lambda_module(const json& j) {
  expect_keys(j, "Lambda-module", {"rank", "T"});
  const std::size_t n = to_count(j["rank"], "rank");
  check_input_rank(n, "Lambda-module");
  const json& rows = to_array(j["T"], "T");
  if (rows.size() != n) throw MalformedInput("T: expected " + std::to_string(n) + " rows");
  IntMatrix T(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const IntVector row = to_int_vector(rows[r], "T");
    if (row.size() != n) throw MalformedInput("T: row " + std::to_string(r + 1) + " has the wrong length");
    T.set_row(r, row);
  }
  return LambdaModule::make(std::move(T));
}

inline json from_decomposition(const LambdaDecomposition& d) {
  return {{"a", d.a}, {"b", d.b}, {"c", d.c}, {"certificate", from_int_matrix(d.certificate)}};
}

inline LambdaElem to_lambda_elem(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw MalformedInput(what + ": entries must be [a,b] for a+bT");
  return {to_int(j[0], what), to_int(j[1], what)};
}

inline LambdaForm to_lambda_form(const json& j, std::initializer_list<const char*> extra_keys = {}) {
  expect_keys(j, "Lambda-form", {"rank", "gram"}, extra_keys);
  const std::size_t n = to_count(j["rank"], "rank");
  check_input_rank(n, "Lambda-form");
  const json& rows = to_array(j["gram"], "gram");
  if (rows.size() != n) throw MalformedInput("gram: expected " + std::to_string(n) + " rows");
  LambdaForm F = LambdaForm::zero(n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = to_array(rows[r], "gram");
    if (row.size() != n) throw MalformedInput("gram: row " + std::to_string(r + 1) + " has the wrong length");
    for (std::size_t c = 0; c < n; ++c) F(r, c) = to_lambda_elem(row[c], "gram");
  }
  return F;
}

inline json from_hyperbolic(const HyperbolicBasis& hb) {
  json pairs = json::array(), radical = json::array();
  for (const auto& [e, f] : hb.pairs) pairs.push_back({{"e", from_f2_vector(e)}, {"f", from_f2_vector(f)}});
  for (const auto& r : hb.radical) radical.push_back(from_f2_vector(r));
  return {{"pairs", pairs}, {"radical", radical}};
}

inline json from_lattice(const IntLattice& l) {
  return {{"rank", l.rank()}, {"index", from_int(l.index())}, {"hnf", from_int_matrix(l.basis())}};
}

inline json from_table_report(const TableReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"m", r.m}, {"all_passed", r.all_passed()}, {"checks", checks}};
}

}  // namespace conjspace::json_io
