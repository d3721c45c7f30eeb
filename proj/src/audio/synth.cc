// src/audio/synth.cc

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

#include "vocdet/audio/clip.h"

#include <cmath>
#include <numbers>

#include "vocdet/common/error.h"
#include "vocdet/common/rng.h"

namespace vocdet::audio {

namespace {

std::size_t sample_count(double duration_s, int sample_rate) {
  if (duration_s <= 0.0) throw RangeError("synth: duration must be positive");
  if (sample_rate <= 0) throw RangeError("synth: sample rate must be positive");
  return static_cast<std::size_t>(std::llround(duration_s * sample_rate));
}

}  // namespace

AudioClip synth_sine(double freq_hz, double duration_s, int sample_rate,
                     double amplitude) {
  const std::size_t n = sample_count(duration_s, sample_rate);
  if (freq_hz >= 0.5 * sample_rate)
    throw RangeError("synth_sine: frequency at or above Nyquist");
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.source_id = "sine";
  clip.samples.resize(n);
  const double w = 2.0 * std::numbers::pi * freq_hz / sample_rate;
  for (std::size_t i = 0; i < n; ++i)
    clip.samples[i] = amplitude * std::sin(w * static_cast<double>(i));
  return clip;
}

AudioClip synth_white_noise(std::uint64_t seed, double duration_s,
                            int sample_rate, double amplitude) {
  const std::size_t n = sample_count(duration_s, sample_rate);
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.source_id = "white_noise";
  clip.samples.resize(n);
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i)
    clip.samples[i] = amplitude * (2.0 * rng.uniform() - 1.0);
  return clip;
}

AudioClip synth_chirp(double f0_hz, double f1_hz, double duration_s,
                      int sample_rate, double amplitude) {
  const std::size_t n = sample_count(duration_s, sample_rate);
  if (f0_hz >= 0.5 * sample_rate || f1_hz >= 0.5 * sample_rate)
    throw RangeError("synth_chirp: frequency at or above Nyquist");
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.source_id = "chirp";
  clip.samples.resize(n);
  // Instantaneous frequency sweeps linearly from f0 to f1; the phase is its
  // integral: 2*pi*(f0*t + (f1-f0)*t^2 / (2*T)).
  const double total_s = static_cast<double>(n) / sample_rate;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / sample_rate;
    const double phase =
        2.0 * std::numbers::pi *
        (f0_hz * t + 0.5 * (f1_hz - f0_hz) * t * t / total_s);
    clip.samples[i] = amplitude * std::sin(phase);
  }
  return clip;
}

AudioClip synth_silence(double duration_s, int sample_rate) {
  const std::size_t n = sample_count(duration_s, sample_rate);
  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.source_id = "silence";
  clip.samples.assign(n, 0.0);
  return clip;
}

}  // namespace vocdet::audio
