// src/dsp/filterbank.cc

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

#include "vocdet/dsp/filterbank.h"

#include <cmath>

#include "vocdet/common/error.h"

namespace vocdet::dsp {

double hz_to_mel(double f_hz) {
  if (f_hz < 0.0) throw RangeError("hz_to_mel: negative frequency");
  return 2595.0 * std::log10(1.0 + f_hz / 700.0);
}

double mel_to_hz(double mel) {
  if (mel < 0.0) throw RangeError("mel_to_hz: negative mel value");
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

std::string scale_name(FilterScale scale) {
  return scale == FilterScale::kMel ? "mel" : "linear";
}

FilterScale parse_scale(const std::string& name) {
  if (name == "mel") return FilterScale::kMel;
  if (name == "linear") return FilterScale::kLinear;
  throw FormatError("unknown filter scale \"" + name + "\"");
}

Filterbank build_filterbank(FilterScale scale, std::size_t n_filters,
                            double f_min, double f_max, std::size_t dft_size,
                            int sample_rate) {
  if (n_filters < 1) throw RangeError("filterbank: need at least one filter");
  const double nyquist = 0.5 * sample_rate;
  if (f_min < 0.0 || f_min >= f_max || f_max > nyquist)
    throw RangeError("filterbank: need 0 <= f_min < f_max <= Nyquist");
  if (dft_size < 2) throw RangeError("filterbank: dft_size too small");

  // S + 2 edge points, equally spaced on the chosen scale.
  const std::size_t n_edges = n_filters + 2;
  std::vector<double> edges_hz(n_edges);
  if (scale == FilterScale::kMel) {
    const double lo = hz_to_mel(f_min);
    const double hi = hz_to_mel(f_max);
    for (std::size_t i = 0; i < n_edges; ++i)
      edges_hz[i] = mel_to_hz(lo + (hi - lo) * static_cast<double>(i) /
                                       static_cast<double>(n_edges - 1));
  } else {
    for (std::size_t i = 0; i < n_edges; ++i)
      edges_hz[i] = f_min + (f_max - f_min) * static_cast<double>(i) /
                                static_cast<double>(n_edges - 1);
  }

  const double bin_width = static_cast<double>(sample_rate) /
                           static_cast<double>(dft_size);
  std::vector<long> edge_bins(n_edges);
  for (std::size_t i = 0; i < n_edges; ++i)
    edge_bins[i] = std::lround(edges_hz[i] / bin_width);
  for (std::size_t i = 1; i < n_edges; ++i)
    if (edge_bins[i] <= edge_bins[i - 1])
      throw ResolutionError(
          "filterbank: too many filters for the DFT resolution");

  const std::size_t n_bins = dft_size / 2 + 1;
  Filterbank fb;
  fb.scale = scale;
  fb.f_min = f_min;
  fb.f_max = f_max;
  fb.dft_size = dft_size;
  fb.sample_rate = sample_rate;
  fb.center_freqs_hz.assign(edges_hz.begin() + 1, edges_hz.end() - 1);
  fb.weights = Matrix(n_filters, n_bins);
  for (std::size_t s = 0; s < n_filters; ++s) {
    const long left = edge_bins[s];
    const long center = edge_bins[s + 1];
    const long right = edge_bins[s + 2];
    for (long k = left; k <= right; ++k) {
      if (k < 0 || static_cast<std::size_t>(k) >= n_bins) continue;
      const double w =
          k <= center
              ? static_cast<double>(k - left) / static_cast<double>(center - left)
              : static_cast<double>(right - k) /
                    static_cast<double>(right - center);
      fb.weights(s, static_cast<std::size_t>(k)) = w;
    }
  }
  return fb;
}

MelSpectrogram apply_filterbank(const Spectrogram& spec, const Filterbank& fb) {
  if (spec.values.cols() != fb.weights.cols())
    throw ShapeError("apply_filterbank: bin count mismatch");
  const std::size_t n_frames = spec.values.rows();
  const std::size_t n_filters = fb.weights.rows();
  const std::size_t n_bins = spec.values.cols();

  MelSpectrogram out;
  out.scale = fb.scale;
  out.values = Matrix(n_frames, n_filters);
  for (std::size_t t = 0; t < n_frames; ++t) {
    for (std::size_t s = 0; s < n_filters; ++s) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n_bins; ++k) {
        const double v = spec.values(t, k);
        const double mag = spec.power ? std::sqrt(v) : v;
        acc += mag * fb.weights(s, k);
      }
      out.values(t, s) = acc;
    }
  }
  return out;
}

}  // namespace vocdet::dsp
