// src/gmm/model.cc

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

#include "vocdet/gmm/model.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vocdet/common/error.h"

namespace vocdet::gmm {

namespace {
constexpr double kLogTwoPi = 1.8378770664093453;  // log(2*pi)
}

void GmmModel::validate() const {
  const std::size_t m = components();
  if (m == 0) throw DataError("gmm: no components");
  if (means.rows() != m || variances.rows() != m ||
      means.cols() != variances.cols())
    throw ShapeError("gmm: parameter shapes disagree");
  double sum = 0.0;
  for (const double w : weights) {
    if (!(w > 0.0)) throw DataError("gmm: weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw DataError("gmm: weights must sum to 1");
  for (const double v : variances.data())
    if (!(v > 0.0) || !std::isfinite(v))
      throw DataError("gmm: variances must be positive and finite");
}

double log_sum_exp(std::span<const double> values) {
  double peak = -std::numeric_limits<double>::infinity();
  for (const double v : values) peak = std::max(peak, v);
  if (!std::isfinite(peak)) return peak;
  double acc = 0.0;
  for (const double v : values) acc += std::exp(v - peak);
  return peak + std::log(acc);
}

void component_log_joint(const GmmModel& model, std::span<const double> x,
                         std::vector<double>& out) {
  const std::size_t m = model.components();
  const std::size_t d = model.dim();
  if (x.size() != d) throw ShapeError("gmm: input dimension mismatch");
  out.resize(m);
  for (std::size_t c = 0; c < m; ++c) {
    double acc = std::log(model.weights[c]);
    for (std::size_t j = 0; j < d; ++j) {
      const double var = model.variances(c, j);
      const double diff = x[j] - model.means(c, j);
      acc += -0.5 * (kLogTwoPi + std::log(var)) - 0.5 * diff * diff / var;
    }
    out[c] = acc;
  }
}

double log_density(const GmmModel& model, std::span<const double> x) {
  std::vector<double> joint;
  component_log_joint(model, x, joint);
  return log_sum_exp(joint);
}

std::vector<double> log_density_grad_x(const GmmModel& model,
                                       std::span<const double> x) {
  std::vector<double> joint;
  component_log_joint(model, x, joint);
  const double total = log_sum_exp(joint);
  const std::size_t d = model.dim();
  std::vector<double> grad(d, 0.0);
  for (std::size_t c = 0; c < model.components(); ++c) {
    const double resp = std::exp(joint[c] - total);
    for (std::size_t j = 0; j < d; ++j)
      grad[j] += resp * (model.means(c, j) - x[j]) / model.variances(c, j);
  }
  return grad;
}

double mean_log_likelihood(const GmmModel& model, const Matrix& frames) {
  if (frames.rows() == 0) throw EmptyError("gmm: no frames");
  double acc = 0.0;
  for (std::size_t t = 0; t < frames.rows(); ++t)
    acc += log_density(model, frames.row(t));
  return acc / static_cast<double>(frames.rows());
}

nlohmann::json model_to_json(const GmmModel& model) {
  nlohmann::json means = nlohmann::json::array();
  nlohmann::json variances = nlohmann::json::array();
  for (std::size_t c = 0; c < model.components(); ++c) {
    nlohmann::json mu = nlohmann::json::array();
    nlohmann::json var = nlohmann::json::array();
    for (std::size_t j = 0; j < model.dim(); ++j) {
      mu.push_back(model.means(c, j));
      var.push_back(model.variances(c, j));
    }
    means.push_back(std::move(mu));
    variances.push_back(std::move(var));
  }
  return nlohmann::json{{"m", model.components()},
                        {"d", model.dim()},
                        {"weights", model.weights},
                        {"means", std::move(means)},
                        {"variances", std::move(variances)}};
}

GmmModel model_from_json(const nlohmann::json& doc) {
  const std::size_t m = doc.at("m").get<std::size_t>();
  const std::size_t d = doc.at("d").get<std::size_t>();
  GmmModel model;
  model.weights = doc.at("weights").get<std::vector<double>>();
  model.means = Matrix(m, d);
  model.variances = Matrix(m, d);
  const auto& means = doc.at("means");
  const auto& variances = doc.at("variances");
  if (model.weights.size() != m || means.size() != m || variances.size() != m)
    throw FormatError("gmm model: component count mismatch");
  for (std::size_t c = 0; c < m; ++c) {
    if (means[c].size() != d || variances[c].size() != d)
      throw FormatError("gmm model: dimension mismatch");
    for (std::size_t j = 0; j < d; ++j) {
      model.means(c, j) = means[c][j].get<double>();
      model.variances(c, j) = variances[c][j].get<double>();
    }
  }
  model.validate();
  return model;
}

}  // namespace vocdet::gmm
