// include/vocdet/audio/clip.h

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

#ifndef VOCDET_AUDIO_CLIP_H_
#define VOCDET_AUDIO_CLIP_H_

#include <cstdint>
#include <string>
#include <vector>

namespace vocdet::audio {

// Mono PCM audio. Samples are normalized amplitudes in [-1, 1].
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = 0;
  std::string source_id;

  double duration_s() const {
    return sample_rate > 0
               ? static_cast<double>(samples.size()) / sample_rate
               : 0.0;
  }
};

// Synthetic test signals. All generators are deterministic; noise is seeded.
AudioClip synth_sine(double freq_hz, double duration_s, int sample_rate,
                     double amplitude = 0.5);
AudioClip synth_white_noise(std::uint64_t seed, double duration_s,
                            int sample_rate, double amplitude = 0.5);
// Linear sweep from f0 to f1 over the clip duration.
AudioClip synth_chirp(double f0_hz, double f1_hz, double duration_s,
                      int sample_rate, double amplitude = 0.5);
AudioClip synth_silence(double duration_s, int sample_rate);

}  // namespace vocdet::audio

#endif  // VOCDET_AUDIO_CLIP_H_
