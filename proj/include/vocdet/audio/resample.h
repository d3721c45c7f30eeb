// include/vocdet/audio/resample.h

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

#ifndef VOCDET_AUDIO_RESAMPLE_H_
#define VOCDET_AUDIO_RESAMPLE_H_

#include "vocdet/audio/clip.h"

namespace vocdet::audio {

struct ResampleOptions {
  // Taps per polyphase branch. The prototype filter length scales with the
  // larger of the up/down factors so the stopband stays put when decimating.
  int taps_per_phase = 64;
  double kaiser_beta = 8.6;
};

// Band-limited rational-factor resampling (polyphase windowed-sinc, Kaiser
// window). Cutoff sits at the smaller of the two Nyquist frequencies.
// Returns the clip unchanged when it is already at target_rate.
AudioClip resample(const AudioClip& clip, int target_rate,
                   const ResampleOptions& opts = {});

}  // namespace vocdet::audio

#endif  // VOCDET_AUDIO_RESAMPLE_H_
