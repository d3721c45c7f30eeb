// include/vocdet/dsp/cepstrum.h

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

#ifndef VOCDET_DSP_CEPSTRUM_H_
#define VOCDET_DSP_CEPSTRUM_H_

#include <string>

#include "vocdet/audio/clip.h"
#include "vocdet/common/matrix.h"
#include "vocdet/dsp/filterbank.h"
#include "vocdet/dsp/spectrogram.h"

namespace vocdet::dsp {

// Unnormalized DCT-II of the log filter energies:
//   c(t, r) = sum_s log(X(t, s)) * cos(pi * r * (s + 0.5) / S)
// Entries are floored at log_floor before the logarithm.
Matrix cepstrum(const MelSpectrogram& mel, std::size_t n_coeffs,
                double log_floor);

// Central-difference derivative with edge replication:
//   d(t) = sum_{n=1..N} n * (c(t+n) - c(t-n)) / (2 * sum n^2)
Matrix delta(const Matrix& c, int window_n);

enum class FeatureKind { kMfcc, kLfcc };

std::string feature_kind_name(FeatureKind kind);
FeatureKind parse_feature_kind(const std::string& name);

// Per-frame cepstral coefficients plus first and second derivatives.
struct CepstralFeatures {
  Matrix base;    // T x R
  Matrix delta;   // T x R
  Matrix delta2;  // T x R
  int delta_window = 2;
  FeatureKind kind = FeatureKind::kLfcc;
};

struct FeatureConfig {
  FeatureKind kind = FeatureKind::kLfcc;
  FrameConfig frame;
  std::size_t n_filters = 40;  // S
  std::size_t n_coeffs = 20;   // R
  int delta_window = 2;        // N
  double log_floor = 1e-10;
  double f_min = 0.0;
  double f_max = 0.0;  // 0 means Nyquist

  double effective_f_max(int sample_rate) const {
    return f_max > 0.0 ? f_max : 0.5 * sample_rate;
  }
};

// Full pipeline: spectrogram -> triangular filterbank (Mel for MFCC, linear
// for LFCC) -> log-DCT cepstrum -> delta -> double delta. Deterministic.
CepstralFeatures extract_features(const audio::AudioClip& clip,
                                  const FeatureConfig& cfg);

}  // namespace vocdet::dsp

#endif  // VOCDET_DSP_CEPSTRUM_H_
