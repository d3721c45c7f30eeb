// include/vocdet/analysis/pitch.h

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

#ifndef VOCDET_ANALYSIS_PITCH_H_
#define VOCDET_ANALYSIS_PITCH_H_

#include <optional>
#include <vector>

#include "vocdet/audio/clip.h"

namespace vocdet::analysis {

struct PitchConfig {
  double f_min_hz = 50.0;
  double f_max_hz = 500.0;
  // 40 ms frames: two full periods of the lowest searched pitch.
  double frame_len_s = 0.040;
  double hop_len_s = 0.010;
  int median_window = 5;  // odd
  double voicing_threshold = 0.6;
};

// Per-frame fundamental frequency; empty optionals mark unvoiced frames.
struct PitchTrack {
  std::vector<std::optional<double>> f0_hz;
  double f_min_hz = 0.0;
  double f_max_hz = 0.0;

  std::vector<double> voiced_values() const {
    std::vector<double> out;
    for (const auto& v : f0_hz)
      if (v) out.push_back(*v);
    return out;
  }
};

// Fundamental frequency by normalized cross-correlation over the lag range
// [rate/f_max, rate/f_min], followed by median smoothing of the voiced
// track. Frames whose best correlation falls below voicing_threshold are
// unvoiced.
PitchTrack estimate_pitch(const audio::AudioClip& clip,
                          const PitchConfig& cfg = {});

}  // namespace vocdet::analysis

#endif  // VOCDET_ANALYSIS_PITCH_H_
