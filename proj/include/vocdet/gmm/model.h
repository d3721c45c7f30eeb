// include/vocdet/gmm/model.h

// Copyright 2026  vocdet authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef VOCDET_GMM_MODEL_H_
#define VOCDET_GMM_MODEL_H_

#include <span>
#include <vector>

#include <json.hpp>

#include "vocdet/common/matrix.h"

namespace vocdet::gmm {

// Diagonal-covariance Gaussian mixture.
struct GmmModel {
  std::vector<double> weights;  // M, on the simplex
  Matrix means;                 // M x D
  Matrix variances;             // M x D, strictly positive

  std::size_t components() const { return weights.size(); }
  std::size_t dim() const { return means.cols(); }

  // Checks the simplex and positivity invariants; throws DataError.
  void validate() const;
};

double log_sum_exp(std::span<const double> values);

// Per-component joint terms log w_m + log N(x; mu_m, diag var_m).
void component_log_joint(const GmmModel& model, std::span<const double> x,
                         std::vector<double>& out);

// log sum_m w_m N(x; mu_m, diag var_m), via log-sum-exp. Finite for any
// finite x. Throws ShapeError on a dimension mismatch.
double log_density(const GmmModel& model, std::span<const double> x);

// Gradient of log_density with respect to x:
//   d/dx_d = sum_m r_m (mu_md - x_d) / var_md, r_m the responsibilities.
std::vector<double> log_density_grad_x(const GmmModel& model,
                                       std::span<const double> x);

// Mean per-frame log density over the rows of `frames`.
double mean_log_likelihood(const GmmModel& model, const Matrix& frames);

// Model JSON: {"m", "d", "weights", "means", "variances"}; doubles print in
// shortest round-trip form.
nlohmann::json model_to_json(const GmmModel& model);
GmmModel model_from_json(const nlohmann::json& doc);

}  // namespace vocdet::gmm

#endif  // VOCDET_GMM_MODEL_H_
