// src/analysis/pitch.cc

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

#include "vocdet/analysis/pitch.h"

#include <algorithm>
#include <cmath>

#include "vocdet/common/error.h"

namespace vocdet::analysis {

namespace {

// Median smoothing over voiced neighbors only: collect voiced values in the
// window around t and take the middle of the sorted list (lower middle for
// even counts), so the result is always a value present in the window.
std::vector<std::optional<double>> median_smooth(
    const std::vector<std::optional<double>>& raw, int window) {
  const int half = window / 2;
  const int n = static_cast<int>(raw.size());
  std::vector<std::optional<double>> out(raw.size());
  std::vector<double> buf;
  for (int t = 0; t < n; ++t) {
    if (!raw[static_cast<std::size_t>(t)]) continue;
    buf.clear();
    for (int i = std::max(0, t - half); i <= std::min(n - 1, t + half); ++i)
      if (raw[static_cast<std::size_t>(i)])
        buf.push_back(*raw[static_cast<std::size_t>(i)]);
    std::sort(buf.begin(), buf.end());
    out[static_cast<std::size_t>(t)] = buf[(buf.size() - 1) / 2];
  }
  return out;
}

}  // namespace

PitchTrack estimate_pitch(const audio::AudioClip& clip,
                          const PitchConfig& cfg) {
  if (clip.sample_rate <= 0)
    throw RangeError("estimate_pitch: clip has no sample rate");
  const double nyquist = 0.5 * clip.sample_rate;
  if (cfg.f_min_hz <= 0.0 || cfg.f_min_hz >= cfg.f_max_hz ||
      cfg.f_max_hz >= nyquist)
    throw RangeError("estimate_pitch: band must lie inside (0, Nyquist)");
  if (cfg.median_window < 1 || cfg.median_window % 2 == 0)
    throw RangeError("estimate_pitch: median window must be odd");

  const std::size_t frame = static_cast<std::size_t>(
      std::llround(cfg.frame_len_s * clip.sample_rate));
  const std::size_t hop = static_cast<std::size_t>(
      std::llround(cfg.hop_len_s * clip.sample_rate));
  const std::size_t lag_min = static_cast<std::size_t>(
      std::ceil(clip.sample_rate / cfg.f_max_hz));
  const std::size_t lag_max = static_cast<std::size_t>(
      std::floor(clip.sample_rate / cfg.f_min_hz));
  if (frame <= lag_max)
    throw RangeError("estimate_pitch: frame too short for the lowest pitch");
  if (hop == 0) throw RangeError("estimate_pitch: hop must be positive");

  PitchTrack track;
  track.f_min_hz = cfg.f_min_hz;
  track.f_max_hz = cfg.f_max_hz;
  if (clip.samples.size() < frame) return track;

  // Fixed correlation length so the score is comparable across lags.
  const std::size_t corr_len = frame - lag_max;
  const std::size_t n_frames = 1 + (clip.samples.size() - frame) / hop;
  track.f0_hz.resize(n_frames);

  // A periodic signal correlates with itself at every multiple of its
  // period, so the raw argmax often lands on a subharmonic. The reported
  // lag is the shortest one whose score comes within this tolerance of the
  // best; voicing still gates on the best score itself.
  constexpr double kSubharmonicTolerance = 0.01;

  std::vector<double> ncc(lag_max + 1);
  for (std::size_t t = 0; t < n_frames; ++t) {
    const double* x = clip.samples.data() + t * hop;
    double energy0 = 0.0;
    for (std::size_t i = 0; i < corr_len; ++i) energy0 += x[i] * x[i];
    if (energy0 <= 0.0) continue;

    double best_ncc = -2.0;
    for (std::size_t lag = lag_min; lag <= lag_max; ++lag) {
      double cross = 0.0, energy_lag = 0.0;
      for (std::size_t i = 0; i < corr_len; ++i) {
        cross += x[i] * x[i + lag];
        energy_lag += x[i + lag] * x[i + lag];
      }
      ncc[lag] = energy_lag > 0.0 ? cross / std::sqrt(energy0 * energy_lag)
                                  : -2.0;
      best_ncc = std::max(best_ncc, ncc[lag]);
    }
    if (best_ncc < cfg.voicing_threshold) continue;
    std::size_t chosen = 0;
    for (std::size_t lag = lag_min; lag <= lag_max && chosen == 0; ++lag) {
      if (ncc[lag] < best_ncc - kSubharmonicTolerance) continue;
      const bool left_ok = lag == lag_min || ncc[lag] >= ncc[lag - 1];
      const bool right_ok = lag == lag_max || ncc[lag] >= ncc[lag + 1];
      if (left_ok && right_ok) chosen = lag;  // shortest local peak near best
    }
    if (chosen == 0) {
      for (std::size_t lag = lag_min; lag <= lag_max; ++lag)
        if (ncc[lag] == best_ncc) {
          chosen = lag;
          break;
        }
    }
    track.f0_hz[t] = static_cast<double>(clip.sample_rate) /
                     static_cast<double>(chosen);
  }

  track.f0_hz = median_smooth(track.f0_hz, cfg.median_window);
  return track;
}

}  // namespace vocdet::analysis
