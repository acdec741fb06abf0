// Copyright 2026 The aqnn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aqnn/serialization.hpp"

#include <string>

namespace aqnn {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

Eigen::MatrixXd real_grid(const Json& j, Index rows, Index cols, const char* what) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) {
    bad(std::string(what) + " must be an array of " + std::to_string(rows) + " rows");
  }
  Eigen::MatrixXd out(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      bad(std::string(what) + " row " + std::to_string(r) + " must have " +
          std::to_string(cols) + " entries");
    }
    for (Index c = 0; c < cols; ++c) out(r, c) = number(row[static_cast<std::size_t>(c)], what);
  }
  return out;
}

Json grid(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Index dimension(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    bad(std::string("\"") + key + "\" must be a positive integer");
  }
  return static_cast<Index>(v.get<long long>());
}

ComplexMatrix square_from(const Json& j, Index n) {
  ComplexMatrix m = real_grid(field(j, "re"), n, n, "re").cast<Complex>();
  if (j.contains("im")) m += Complex(0.0, 1.0) * real_grid(j.at("im"), n, n, "im").cast<Complex>();
  return m;
}

Variant variant_from(const std::string& s) {
  if (s == "ideal") return Variant::Ideal;
  if (s == "eps_gamma") return Variant::FaultyEpsGamma;
  if (s == "eps_gamma_lambda") return Variant::FaultyEpsGammaLambda;
  bad("unknown variant \"" + s + "\"");
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", grid(m.real())}, {"im", grid(m.imag())}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const Index rows = dimension(j, "rows");
  const Index cols = dimension(j, "cols");
  ComplexMatrix m = real_grid(field(j, "re"), rows, cols, "re").cast<Complex>();
  if (j.contains("im")) {
    m += Complex(0.0, 1.0) * real_grid(j.at("im"), rows, cols, "im").cast<Complex>();
  }
  return m;
}

Json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_object()) bad("complex value must be a number or {\"re\", \"im\"}");
  const double re = j.contains("re") ? number(j.at("re"), "re") : 0.0;
  const double im = j.contains("im") ? number(j.at("im"), "im") : 0.0;
  return {re, im};
}

Json to_json(const DensityMatrix& rho) {
  return {{"dim", rho.dim()}, {"re", grid(rho.matrix().real())}, {"im", grid(rho.matrix().imag())}};
}

DensityMatrix density_from_json(const Json& j) {
  return DensityMatrix(square_from(j, dimension(j, "dim")));
}

Json to_json(const ChannelSpec& spec) {
  Json alpha;
  if (const auto u = spec.alpha().uniform_value(0.0); u && u->imag() == 0.0) {
    alpha = {{"uniform", u->real()}};
  } else if (u) {
    alpha = {{"uniform", complex_to_json(*u)}};
  } else {
    alpha = {{"re", grid(spec.alpha().matrix().real())}, {"im", grid(spec.alpha().matrix().imag())}};
  }
  return {{"dim", spec.dim()},
          {"variant", std::string(to_string(spec.variant()))},
          {"alpha", alpha},
          {"epsilon", spec.epsilon()},
          {"gamma", complex_to_json(spec.gamma())},
          {"lambda", complex_to_json(spec.lambda_shift())}};
}

ChannelSpec spec_from_json(const Json& j) {
  const Index n = dimension(j, "dim");
  const Json& v = field(j, "variant");
  if (!v.is_string()) bad("\"variant\" must be a string");
  const Variant variant = variant_from(v.get<std::string>());

  const Json& a = field(j, "alpha");
  const auto build_alpha = [&]() {
    if (a.is_object() && a.contains("uniform")) {
      return AlphaMatrix::uniform(n, complex_from_json(a.at("uniform")));
    }
    return AlphaMatrix(square_from(a, n));
  };
  AlphaMatrix alpha = build_alpha();
  const double eps = j.contains("epsilon") ? number(j.at("epsilon"), "epsilon") : 0.0;
  const Complex gamma = j.contains("gamma") ? complex_from_json(j.at("gamma")) : 0.0;
  const Complex lambda = j.contains("lambda") ? complex_from_json(j.at("lambda")) : 0.0;
  return ChannelSpec(variant, std::move(alpha), eps, gamma, lambda);
}

Json to_json(const ChoiState& j) {
  return {{"dim_in", j.dim_in()}, {"matrix", matrix_to_json(j.matrix())}};
}

Json to_json(const KrausSet& kraus) {
  Json ops = Json::array();
  for (const auto& k : kraus.operators()) ops.push_back(matrix_to_json(k));
  return {{"dim", kraus.dim()}, {"operators", ops}};
}

Json to_json(const CptpVerdict& verdict) {
  return {{"cptp", verdict.cptp},
          {"min_eigenvalue", verdict.min_eigenvalue},
          {"tp_residual", verdict.tp_residual}};
}

Json to_json(const ClassReport& report) {
  Json out = {{"is_ncg", report.is_ncg},
              {"is_gio", report.is_gio},
              {"activates_coherence", report.activates_coherence},
              {"residuals", report.residuals},
              {"search_iterations", report.search_iterations}};
  out["sio_certificate"] = report.sio_certificate ? to_json(*report.sio_certificate) : Json();
  out["io_certificate"] = report.io_certificate ? to_json(*report.io_certificate) : Json();
  return out;
}

Json to_json(const DilationUnitary& u) {
  return {{"system_dim", u.system_dim()},
          {"ancilla_dim", u.ancilla_dim()},
          {"ancilla_start_index", u.ancilla_start()},
          {"matrix", matrix_to_json(u.matrix())}};
}

Json to_json(const DiamondResult& result) {
  return {{"value", result.value},
          {"lambda_opt", result.lambda_opt},
          {"dual_gap_estimate", result.dual_gap_estimate},
          {"method", std::string(to_string(result.method))},
          {"newton_steps", result.newton_steps},
          {"feasibility_residual", result.feasibility_residual},
          {"z_opt", matrix_to_json(result.z_opt)}};
}

}  // namespace aqnn
