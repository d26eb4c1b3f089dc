/*
  Copyright (c) 2026 The rkcd Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "rkcd/json_io.hpp"

#include <algorithm>
#include <cmath>

#include "rkcd/errors.hpp"

namespace rkcd {

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::Parse, "field '" + path + "': " + what);
}

const Json& require(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) field_error(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) field_error(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

int int_field(const Json& j, const std::string& key, const std::string& path, int lo) {
  const Json& v = require(j, key, path);
  const std::string where = path.empty() ? key : path + "." + key;
  if (!v.is_number_integer()) field_error(where, "expected an integer");
  const auto x = v.get<long long>();
  if (x < lo || x > 1'000'000) field_error(where, "value " + std::to_string(x) + " out of range");
  return static_cast<int>(x);
}

double number(const Json& v, const std::string& path) {
  if (!v.is_number()) field_error(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) field_error(path, "not finite");
  return x;
}

Json shape_json(const Shape& s) {
  Json out = Json::array();
  for (const auto& [n, m] : s) out.push_back({{"rank", n}, {"multiplicity", m}});
  return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::Parse, source + ": malformed JSON at line " + std::to_string(line) + ", column " +
                                      std::to_string(column));
  }
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = -1;
  ComplexMatrix m;
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!row.is_array()) field_error(rp, "expected an array of entries");
    if (cols < 0) {
      cols = static_cast<Eigen::Index>(row.size());
      m.resize(rows, cols);
    } else if (static_cast<Eigen::Index>(row.size()) != cols) {
      field_error(rp, "row length " + std::to_string(row.size()) + " differs from " + std::to_string(cols));
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& e = row[static_cast<std::size_t>(c)];
      const std::string ep = rp + "[" + std::to_string(c) + "]";
      if (!e.is_array() || e.size() != 2) field_error(ep, "expected [re, im]");
      m(i, c) = Complex(number(e[0], ep + "[0]"), number(e[1], ep + "[1]"));
    }
  }
  if (cols < 0) m.resize(0, 0);
  return m;
}

Json kernel_to_json(const KernelSeries& k) {
  Json coeffs = Json::array();
  for (int m = 0; m <= k.degree(); ++m)
    for (int q = 0; q <= k.degree(); ++q) {
      const ComplexMatrix& a = k.coeff(m, q);
      if (a.isZero(0.0)) continue;
      coeffs.push_back({{"m", m}, {"q", q}, {"matrix", matrix_to_json(a)}});
    }
  return {{"rank", k.rank()}, {"degree", k.degree()}, {"coefficients", coeffs}};
}

KernelSeries kernel_from_json(const Json& j) {
  const int rank = int_field(j, "rank", "", 0);
  const int degree = int_field(j, "degree", "", 0);
  KernelSeries k(rank, degree);
  const Json& coeffs = require(j, "coefficients", "");
  if (!coeffs.is_array()) field_error("coefficients", "expected an array");
  std::vector<bool> seen(static_cast<std::size_t>((degree + 1) * (degree + 1)), false);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string path = "coefficients[" + std::to_string(i) + "]";
    const Json& c = coeffs[i];
    const int m = int_field(c, "m", path, 0);
    const int q = int_field(c, "q", path, 0);
    if (m > degree || q > degree) field_error(path, "index (" + std::to_string(m) + "," + std::to_string(q) +
                                                        ") exceeds degree " + std::to_string(degree));
    const std::size_t slot = static_cast<std::size_t>(m * (degree + 1) + q);
    if (seen[slot]) field_error(path, "duplicate coefficient");
    seen[slot] = true;
    const ComplexMatrix a = matrix_from_json(require(c, "matrix", path), path + ".matrix");
    if (a.rows() != rank || a.cols() != rank) field_error(path + ".matrix", "expected " + std::to_string(rank) +
                                                                                "x" + std::to_string(rank));
    k.set(m, q, a);
  }
  return k;
}

Json holo_to_json(const HoloSeries& h) {
  Json coeffs = Json::array();
  for (int m = 0; m <= h.degree(); ++m) {
    if (h.coeff(m).isZero(0.0)) continue;
    coeffs.push_back({{"m", m}, {"matrix", matrix_to_json(h.coeff(m))}});
  }
  return {{"rows", h.rows()}, {"cols", h.cols()}, {"degree", h.degree()}, {"coefficients", coeffs}};
}

HoloSeries holo_from_json(const Json& j) {
  int rows = 0;
  int cols = 0;
  if (j.is_object() && j.contains("rank")) {
    rows = cols = int_field(j, "rank", "", 0);
  } else {
    rows = int_field(j, "rows", "", 0);
    cols = int_field(j, "cols", "", 0);
  }
  const int degree = int_field(j, "degree", "", 0);
  HoloSeries h(rows, cols, degree);
  const Json& coeffs = require(j, "coefficients", "");
  if (!coeffs.is_array()) field_error("coefficients", "expected an array");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string path = "coefficients[" + std::to_string(i) + "]";
    const int m = int_field(coeffs[i], "m", path, 0);
    if (m > degree) field_error(path, "index " + std::to_string(m) + " exceeds degree " + std::to_string(degree));
    const ComplexMatrix a = matrix_from_json(require(coeffs[i], "matrix", path), path + ".matrix");
    if (a.rows() != rows || a.cols() != cols)
      field_error(path + ".matrix", "expected " + std::to_string(rows) + "x" + std::to_string(cols));
    h.set(m, a);
  }
  return h;
}

Json bi_series_to_json(const BiSeries& s) {
  const Box box = s.box();
  Json coeffs = Json::array();
  for (int p = 0; p <= box.hol; ++p)
    for (int q = 0; q <= box.antihol; ++q) {
      if (s.coeff(p, q).isZero(0.0)) continue;
      coeffs.push_back({{"p", p}, {"q", q}, {"matrix", matrix_to_json(s.coeff(p, q))}});
    }
  return {{"rows", s.rows()}, {"cols", s.cols()}, {"box", {box.hol, box.antihol}}, {"coefficients", coeffs}};
}

Json validation_to_json(const ValidationReport& r) {
  return {{"passed", r.passed()},
          {"hermitian", r.hermitian},
          {"non_negative", r.non_negative},
          {"constant_term_invertible", r.constant_term_invertible},
          {"hermitian_residual", r.hermitian_residual},
          {"gram_min_eigenvalue", r.gram_min_eigenvalue},
          {"gram_max_eigenvalue", r.gram_max_eigenvalue},
          {"constant_term_condition", r.constant_term_condition}};
}

Json decomposition_to_json(const Decomposition& d) {
  Json comps = Json::array();
  for (const Component& c : d.components) comps.push_back({{"rank", c.rank}, {"multiplicity", c.multiplicity}});
  Json out = {{"t", d.t},
              {"components", comps},
              {"commutant_dim", d.commutant_dim},
              {"unitary", matrix_to_json(d.unitary)},
              {"residual", d.residual},
              {"verified", d.verified}};
  if (!d.verified) out["failure"] = d.failure;
  return out;
}

Json verdict_to_json(const EquivalenceVerdict& v) {
  Json out = {{"verdict", to_string(v.verdict)},
              {"equivalent", v.equivalent()},
              {"degree", v.degree},
              {"residual", v.residual},
              {"components_a", shape_json(v.shape_t)},
              {"components_b", shape_json(v.shape_s)},
              {"permutation", v.permutation}};
  if (v.verdict == Verdict::Equivalent || v.verdict == Verdict::Undecided) {
    out["witness"] = holo_to_json(v.witness);
    out["unitary"] = matrix_to_json(v.unitary);
  }
  if (!v.reason.empty()) out["reason"] = v.reason;
  return out;
}

Json kk1_to_json(const Kk1Report& r) {
  return {{"holds", r.holds}, {"residual", r.residual}, {"leading", {r.leading_p, r.leading_q}}};
}

Json intertwiner_report_to_json(const IntertwinerReport& r) {
  Json c = Json::array();
  for (Eigen::Index i = 0; i < r.c.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < r.c.cols(); ++j) row.push_back(r.c(i, j));
    c.push_back(std::move(row));
  }
  Json classes = Json::array();
  for (const auto& row : r.classes) {
    Json jr = Json::array();
    for (BlockClass b : row) jr.push_back(to_string(b));
    classes.push_back(std::move(jr));
  }
  return {{"partition_a", r.partition_t},
          {"partition_b", r.partition_s},
          {"C", c},
          {"blocks", classes},
          {"inverse_residual", r.inverse_residual},
          {"scalar_residual", r.scalar_residual},
          {"row_sum_residual", r.row_sum_residual},
          {"column_sum_residual", r.column_sum_residual},
          {"permutation_pattern", r.permutation_pattern},
          {"passed", r.passed}};
}

Json truth_to_json(const GroundTruth& t) {
  return {{"t", t.t}, {"ranks", t.ranks}, {"multiplicities", t.multiplicities}, {"unitary", matrix_to_json(t.unitary)}};
}

GeneratorSpec generator_spec_from_json(const Json& j) {
  if (!j.is_object()) field_error("", "expected an object");
  GeneratorSpec s;
  const Json& kind = require(j, "kind", "");
  if (!kind.is_string()) field_error("kind", "expected a string");
  const auto k = parse_generator_kind(kind.get<std::string>());
  if (!k) field_error("kind", "unknown generator '" + kind.get<std::string>() + "'");
  s.kind = *k;
  if (j.contains("degree")) s.degree = int_field(j, "degree", "", 0);
  if (j.contains("alpha")) s.alpha = number(j["alpha"], "alpha");
  if (j.contains("weights")) {
    const Json& w = j["weights"];
    if (!w.is_array()) field_error("weights", "expected an array");
    for (std::size_t i = 0; i < w.size(); ++i) s.weights.push_back(number(w[i], "weights[" + std::to_string(i) + "]"));
  }
  if (j.contains("base")) {
    if (!j["base"].is_string()) field_error("base", "expected a string");
    s.base = j["base"].get<std::string>();
  }
  if (j.contains("components")) {
    const Json& c = j["components"];
    if (!c.is_array()) field_error("components", "expected an array");
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_string()) field_error("components[" + std::to_string(i) + "]", "expected a string");
      s.components.push_back(c[i].get<std::string>());
    }
  }
  if (j.contains("rank")) s.rank = int_field(j, "rank", "", 1);
  if (j.contains("width")) s.width = int_field(j, "width", "", 0);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) field_error("seed", "expected an integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  return s;
}

}  // namespace rkcd
