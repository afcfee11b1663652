// Copyright 2026 The pcc Authors.
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

#pragma once

#include <json.hpp>

#include "pcc/certify.hpp"
#include "pcc/linops.hpp"
#include "pcc/solver.hpp"

namespace pcc {

inline nlohmann::json report_to_json(const CertificateReport& report) {
  nlohmann::json diag;
  diag["per_restart"] = report.diagnostics.per_restart;
  diag["restart_iterations"] = report.diagnostics.restart_iterations;
  diag["breakdown_redraws"] = report.diagnostics.breakdown_redraws;
  diag["psd_tol"] = report.diagnostics.psd_tol;
  diag["note"] = report.diagnostics.note;

  nlohmann::json j;
  j["status"] = to_string(report.status);
  j["reason"] = to_string(report.reason);
  j["lambda2"] = report.lambda2;  // NaN serializes as null
  j["method"] = report.method;
  j["objective"] = report.objective;
  j["uniqueness"] = report.uniqueness_claimed;
  j["randomized"] = report.randomized;
  j["diagnostics"] = diag;
  j["seed"] = report.seed;
  return j;
}

inline nlohmann::json solver_to_json(const SolveResult& result) {
  nlohmann::json j;
  j["iterations"] = result.spectral.iterations;
  j["residual"] = result.spectral.residual;
  j["converged"] = result.spectral.converged;
  j["ritz_value"] = result.spectral.ritz_value;
  j["swaps"] = result.refinement.swaps;
  j["objective"] = result.objective;
  return j;
}

inline nlohmann::json dual_diagonal_to_json(const DualDiagonal& d) {
  return nlohmann::json(d.d);
}

}  // namespace pcc
