// include/vocdet/audio/silence.h

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

#ifndef VOCDET_AUDIO_SILENCE_H_
#define VOCDET_AUDIO_SILENCE_H_

#include "vocdet/audio/clip.h"

namespace vocdet::audio {

struct SilenceOptions {
  double threshold_dbfs = -40.0;  // frame RMS gate
  double frame_s = 0.010;         // energy frame length
};

// Shortens every run of consecutive sub-threshold frames that lasts longer
// than max_silence_s down to exactly max_silence_s. Non-silent audio is
// preserved in order. Throws EmptyError when the whole clip is silent.
AudioClip trim_silence(const AudioClip& clip, double max_silence_s = 2.0,
                       const SilenceOptions& opts = {});

}  // namespace vocdet::audio

#endif  // VOCDET_AUDIO_SILENCE_H_
