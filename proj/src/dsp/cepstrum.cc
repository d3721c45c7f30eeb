// src/dsp/cepstrum.cc

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

#include "vocdet/dsp/cepstrum.h"

#include <cmath>
#include <cstdint>
#include <numbers>

#include "vocdet/common/error.h"

namespace vocdet::dsp {

Matrix cepstrum(const MelSpectrogram& mel, std::size_t n_coeffs,
                double log_floor) {
  const std::size_t n_filters = mel.values.cols();
  if (n_coeffs < 1 || n_coeffs > n_filters)
    throw RangeError("cepstrum: need 1 <= R <= S");
  if (log_floor <= 0.0) throw RangeError("cepstrum: log_floor must be > 0");

  const std::size_t n_frames = mel.values.rows();
  Matrix out(n_frames, n_coeffs);
  for (std::size_t t = 0; t < n_frames; ++t) {
    for (std::size_t r = 0; r < n_coeffs; ++r) {
      double acc = 0.0;
      for (std::size_t s = 0; s < n_filters; ++s) {
        const double v = std::max(mel.values(t, s), log_floor);
        acc += std::log(v) *
               std::cos(std::numbers::pi * static_cast<double>(r) *
                        (static_cast<double>(s) + 0.5) /
                        static_cast<double>(n_filters));
      }
      out(t, r) = acc;
    }
  }
  return out;
}

Matrix delta(const Matrix& c, int window_n) {
  if (window_n < 1) throw RangeError("delta: window must be >= 1");
  if (c.rows() == 0) throw EmptyError("delta: empty input");

  const std::int64_t n_frames = static_cast<std::int64_t>(c.rows());
  const std::size_t n_coeffs = c.cols();
  double denom = 0.0;
  for (int n = 1; n <= window_n; ++n) denom += static_cast<double>(n) * n;
  denom *= 2.0;

  Matrix out(c.rows(), n_coeffs);
  for (std::int64_t t = 0; t < n_frames; ++t) {
    for (std::size_t r = 0; r < n_coeffs; ++r) {
      double acc = 0.0;
      for (int n = 1; n <= window_n; ++n) {
        // Frames beyond the ends replicate the first / last frame.
        const std::int64_t fwd = std::min<std::int64_t>(t + n, n_frames - 1);
        const std::int64_t bwd = std::max<std::int64_t>(t - n, 0);
        acc += static_cast<double>(n) *
               (c(static_cast<std::size_t>(fwd), r) -
                c(static_cast<std::size_t>(bwd), r));
      }
      out(static_cast<std::size_t>(t), r) = acc / denom;
    }
  }
  return out;
}

std::string feature_kind_name(FeatureKind kind) {
  return kind == FeatureKind::kMfcc ? "mfcc" : "lfcc";
}

FeatureKind parse_feature_kind(const std::string& name) {
  if (name == "mfcc") return FeatureKind::kMfcc;
  if (name == "lfcc") return FeatureKind::kLfcc;
  throw FormatError("unknown feature kind \"" + name + "\"");
}

CepstralFeatures extract_features(const audio::AudioClip& clip,
                                  const FeatureConfig& cfg) {
  const Spectrogram spec = compute_spectrogram(clip, cfg.frame);
  const FilterScale scale =
      cfg.kind == FeatureKind::kMfcc ? FilterScale::kMel : FilterScale::kLinear;
  const Filterbank fb =
      build_filterbank(scale, cfg.n_filters, cfg.f_min,
                       cfg.effective_f_max(clip.sample_rate), cfg.frame.dft_size,
                       clip.sample_rate);
  const MelSpectrogram mel = apply_filterbank(spec, fb);

  CepstralFeatures feats;
  feats.kind = cfg.kind;
  feats.delta_window = cfg.delta_window;
  feats.base = cepstrum(mel, cfg.n_coeffs, cfg.log_floor);
  feats.delta = delta(feats.base, cfg.delta_window);
  feats.delta2 = delta(feats.delta, cfg.delta_window);
  return feats;
}

}  // namespace vocdet::dsp
