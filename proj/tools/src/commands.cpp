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

#include "commands.hpp"

#include <fstream>
#include <iostream>

#include "aqnn/coherence.hpp"
#include "experiments.hpp"

namespace aqnn::cli {

namespace {

ChannelSpec load_spec(const std::string& path) { return spec_from_json(read_json_file(path)); }

const std::string& single_spec(const Options& o) {
  if (o.specs.size() != 1) throw Error(ErrorCode::InvalidArgument, "expected exactly one --spec");
  return o.specs.front();
}

Json state_report(const DensityMatrix& rho) {
  return {{"state", to_json(rho)},
          {"c_l1", c_l1(rho)},
          {"c_relative_entropy", c_relative_entropy(rho)}};
}

DensityMatrix load_state_for(const ChannelSpec& spec, const std::string& path) {
  const auto rho = density_from_json(read_json_file(path));
  if (rho.dim() != spec.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state dimension " + std::to_string(rho.dim()) +
                                                  " differs from channel dimension " +
                                                  std::to_string(spec.dim()));
  }
  return rho;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch:
    case ErrorCode::BadDimension:
    case ErrorCode::DimensionTooLarge:
      return kDimension;
    case ErrorCode::NotCPTP:
    case ErrorCode::NotPSD:
      return kNotCptp;
    case ErrorCode::ConstraintInfeasible:
    case ErrorCode::WrongVariant:
      return kInfeasible;
    case ErrorCode::SolverDidNotConverge:
    case ErrorCode::DepthExceeded:
    case ErrorCode::NotUnitary:
      return kSolver;
    default:
      return kParse;
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void emit(const Json& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << doc.dump(2) << '\n';
}

int cmd_apply(const Options& o) {
  const auto spec = load_spec(single_spec(o));
  const auto rho = load_state_for(spec, o.state);
  Json doc = state_report(iterate(spec, rho, o.iterations));
  doc["iterations"] = o.iterations;
  emit(doc, o.out);
  return kOk;
}

int cmd_iterate(const Options& o) {
  const auto spec = load_spec(single_spec(o));
  auto rho = load_state_for(spec, o.state);
  if (o.iterations < 1) throw Error(ErrorCode::InvalidArgument, "--iterations must be >= 1");
  require_cptp(spec);
  Json trajectory = Json::array();
  trajectory.push_back({{"r", 0}, {"c_l1", c_l1(rho)}, {"c_relative_entropy", c_relative_entropy(rho)}});
  for (int r = 1; r <= o.iterations; ++r) {
    rho = apply(spec, rho, Safety::Unchecked);
    trajectory.push_back({{"r", r}, {"c_l1", c_l1(rho)}, {"c_relative_entropy", c_relative_entropy(rho)}});
  }
  Json doc = state_report(rho);
  doc["iterations"] = o.iterations;
  doc["trajectory"] = std::move(trajectory);
  emit(doc, o.out);
  return kOk;
}

int cmd_choi(const Options& o) {
  emit(to_json(choi(load_spec(single_spec(o)))), o.out);
  return kOk;
}

int cmd_cptp_check(const Options& o) {
  const auto verdict = is_cptp(load_spec(single_spec(o)));
  emit(to_json(verdict), o.out);
  return verdict.cptp ? kOk : kNotCptp;
}

int cmd_classify(const Options& o) {
  SearchOptions search;
  search.budget = o.budget;
  search.seed = o.seed;
  emit(to_json(classify(load_spec(single_spec(o)), search)), o.out);
  return kOk;
}

int cmd_dilate(const Options& o) {
  const auto spec = load_spec(single_spec(o));
  const std::string method = o.method.empty() ? "generic" : o.method;
  const auto unitary = [&] {
    if (method == "gio") return build_gio_dilation(spec);
    if (method == "sio") return build_sio_dilation(spec);
    if (method == "generic") return build_generic_dilation(kraus_from_choi(choi(spec)));
    throw Error(ErrorCode::InvalidArgument, "unknown dilation method '" + method + "'");
  }();
  const double residual = verify_dilation(unitary, spec, o.trials > 0 ? o.trials : 100, o.seed);
  emit({{"method", method}, {"unitary", to_json(unitary)}, {"residual", residual}}, o.out);
  if (residual > 1e-8) {
    std::cerr << "aqnn: dilation residual " << residual << " exceeds 1e-8\n";
    return kSolver;
  }
  return kOk;
}

int cmd_diamond(const Options& o) {
  if (o.specs.size() != 2) throw Error(ErrorCode::InvalidArgument, "diamond needs two --spec files");
  const auto a = load_spec(o.specs[0]);
  const auto b = load_spec(o.specs[1]);
  DiamondMethod method = DiamondMethod::Auto;
  if (o.method == "analytic") {
    method = DiamondMethod::Analytic;
  } else if (o.method == "interior_point") {
    method = DiamondMethod::InteriorPoint;
  } else if (!o.method.empty() && o.method != "auto") {
    throw Error(ErrorCode::InvalidArgument, "unknown diamond method '" + o.method + "'");
  }
  const auto result = diamond_distance(a, b, method);
  Json doc = to_json(result);
  doc["lower_bound"] = diamond_lower_bound(a, b, o.trials > 0 ? o.trials : 200, o.seed);
  emit(doc, o.out);
  return kOk;
}

int cmd_experiment(const Options& o) {
  const auto config = read_json_file(o.config);
  emit(run_experiment(config, o.out, o.seed), "");
  return kOk;
}

}  // namespace aqnn::cli
