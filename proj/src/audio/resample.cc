// src/audio/resample.cc

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

#include "vocdet/audio/resample.h"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

#include "vocdet/common/error.h"

namespace vocdet::audio {

namespace {

// Zeroth-order modified Bessel function, power series.
double bessel_i0(double x) {
  double sum = 1.0;
  double term = 1.0;
  const double half_x = 0.5 * x;
  for (int k = 1; k < 64; ++k) {
    term *= (half_x / k) * (half_x / k);
    sum += term;
    if (term < 1e-14 * sum) break;
  }
  return sum;
}

double sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

// Prototype lowpass for interpolation by L: Kaiser-windowed sinc with
// normalized cutoff `cutoff` (1 = upsampled Nyquist) and passband gain L.
std::vector<double> design_prototype(int length, int up, double cutoff,
                                     double beta) {
  std::vector<double> h(length);
  const double center = 0.5 * (length - 1);
  const double i0_beta = bessel_i0(beta);
  for (int n = 0; n < length; ++n) {
    const double m = n - center;
    const double frac = m / center;
    const double window =
        bessel_i0(beta * std::sqrt(std::max(0.0, 1.0 - frac * frac))) /
        i0_beta;
    h[n] = up * cutoff * sinc(cutoff * m) * window;
  }
  return h;
}

}  // namespace

AudioClip resample(const AudioClip& clip, int target_rate,
                   const ResampleOptions& opts) {
  if (target_rate <= 0)
    throw RangeError("resample: target rate must be positive");
  if (clip.sample_rate <= 0)
    throw RangeError("resample: clip has no sample rate");
  if (clip.sample_rate == target_rate) return clip;
  if (clip.samples.empty()) {
    AudioClip out = clip;
    out.sample_rate = target_rate;
    return out;
  }

  const int g = std::gcd(clip.sample_rate, target_rate);
  const int up = target_rate / g;
  const int down = clip.sample_rate / g;

  // Filter length grows with the larger conversion factor so that the
  // transition band stays narrow relative to the retained bandwidth.
  int length = opts.taps_per_phase * std::max(up, down);
  length += (up - length % up) % up;  // multiple of `up` for phase indexing
  const double cutoff = 1.0 / std::max(up, down);
  const std::vector<double> h =
      design_prototype(length, up, cutoff, opts.kaiser_beta);

  const std::int64_t n_in = static_cast<std::int64_t>(clip.samples.size());
  const std::int64_t n_out = (n_in * up + down - 1) / down;
  const std::int64_t delay = (static_cast<std::int64_t>(length) - 1) / 2;
  const int taps = length / up;

  AudioClip out;
  out.sample_rate = target_rate;
  out.source_id = clip.source_id;
  out.samples.resize(static_cast<std::size_t>(n_out));
  for (std::int64_t j = 0; j < n_out; ++j) {
    // Position in the (virtual) upsampled stream, compensated for the
    // linear-phase group delay so output aligns with input.
    const std::int64_t u = j * down + delay;
    const int phase = static_cast<int>(u % up);
    const std::int64_t base = u / up;
    double acc = 0.0;
    for (int k = 0; k < taps; ++k) {
      const std::int64_t idx = base - k;
      if (idx < 0 || idx >= n_in) continue;
      acc += h[static_cast<std::size_t>(phase + k * up)] *
             clip.samples[static_cast<std::size_t>(idx)];
    }
    out.samples[static_cast<std::size_t>(j)] = acc;
  }
  return out;
}

}  // namespace vocdet::audio
