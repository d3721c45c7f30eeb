// src/audio/silence.cc

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

#include "vocdet/audio/silence.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "vocdet/common/error.h"

namespace vocdet::audio {

AudioClip trim_silence(const AudioClip& clip, double max_silence_s,
                       const SilenceOptions& opts) {
  if (max_silence_s < 0.0)
    throw RangeError("trim_silence: max_silence_s must be >= 0");
  if (clip.sample_rate <= 0)
    throw RangeError("trim_silence: clip has no sample rate");
  if (clip.samples.empty()) throw EmptyError("trim_silence: empty clip");

  const std::size_t n = clip.samples.size();
  const std::size_t frame =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(
                                   opts.frame_s * clip.sample_rate)));
  const double threshold = std::pow(10.0, opts.threshold_dbfs / 20.0);
  const std::int64_t max_keep =
      std::llround(max_silence_s * clip.sample_rate);

  // Classify 10 ms frames by RMS; the trailing partial frame is judged over
  // its actual length.
  const std::size_t n_frames = (n + frame - 1) / frame;
  std::vector<bool> silent(n_frames);
  bool any_loud = false;
  for (std::size_t f = 0; f < n_frames; ++f) {
    const std::size_t begin = f * frame;
    const std::size_t end = std::min(begin + frame, n);
    double energy = 0.0;
    for (std::size_t i = begin; i < end; ++i)
      energy += clip.samples[i] * clip.samples[i];
    const double rms = std::sqrt(energy / static_cast<double>(end - begin));
    silent[f] = rms < threshold;
    any_loud = any_loud || !silent[f];
  }
  if (!any_loud) throw EmptyError("trim_silence: clip is entirely silent");

  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.source_id = clip.source_id;
  out.samples.reserve(n);
  std::size_t f = 0;
  while (f < n_frames) {
    if (!silent[f]) {
      const std::size_t begin = f * frame;
      const std::size_t end = std::min(begin + frame, n);
      out.samples.insert(out.samples.end(), clip.samples.begin() + begin,
                         clip.samples.begin() + end);
      ++f;
      continue;
    }
    std::size_t run_end = f;
    while (run_end < n_frames && silent[run_end]) ++run_end;
    const std::size_t begin = f * frame;
    const std::size_t end = std::min(run_end * frame, n);
    const std::int64_t span = static_cast<std::int64_t>(end - begin);
    const std::int64_t keep = span > max_keep ? max_keep : span;
    out.samples.insert(out.samples.end(), clip.samples.begin() + begin,
                       clip.samples.begin() + begin + keep);
    f = run_end;
  }
  return out;
}

}  // namespace vocdet::audio
