// include/vocdet/audio/wav.h

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

#ifndef VOCDET_AUDIO_WAV_H_
#define VOCDET_AUDIO_WAV_H_

#include <filesystem>

#include "vocdet/audio/clip.h"

namespace vocdet::audio {

// Reads a RIFF/WAVE file containing 16-bit PCM. Multi-channel input is
// averaged to mono; integer samples are scaled by 1/32768.
// Throws FormatError on a malformed container, UnsupportedError on non-PCM
// or non-16-bit encodings, IoError when the file cannot be read.
AudioClip load_wav(const std::filesystem::path& path);

// Writes a mono 16-bit PCM WAV. Samples are clamped to [-1, 1] and rounded
// to the nearest 16-bit level, so load_wav(write_wav(clip)) matches the
// original within one quantization step.
void write_wav(const std::filesystem::path& path, const AudioClip& clip);

}  // namespace vocdet::audio

#endif  // VOCDET_AUDIO_WAV_H_
