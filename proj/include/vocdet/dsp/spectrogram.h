// include/vocdet/dsp/spectrogram.h

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

#ifndef VOCDET_DSP_SPECTROGRAM_H_
#define VOCDET_DSP_SPECTROGRAM_H_

#include <string>
#include <vector>

#include "vocdet/audio/clip.h"
#include "vocdet/common/matrix.h"

namespace vocdet::dsp {

enum class WindowKind { kHann, kHamming, kBlackman, kRectangular };

std::string window_name(WindowKind kind);
WindowKind parse_window(const std::string& name);

// Symmetric analysis window of the given length.
std::vector<double> make_window(WindowKind kind, std::size_t length);

struct FrameConfig {
  double frame_len_s = 0.020;
  double hop_len_s = 0.010;
  WindowKind window = WindowKind::kHann;
  std::size_t dft_size = 512;  // power of two, >= frame length in samples
  bool power = true;           // store |X|^2; false stores |X|

  std::size_t frame_samples(int sample_rate) const;
  std::size_t hop_samples(int sample_rate) const;
};

// Time x frequency magnitude (or power) matrix. One-sided spectrum:
// dft_size/2 + 1 columns.
struct Spectrogram {
  Matrix values;
  std::vector<double> bin_freqs;    // Hz per column
  std::vector<double> frame_times;  // frame start, seconds
  bool power = true;
  std::size_t dft_size = 0;
  int sample_rate = 0;
};

// Frames the clip (T = 1 + floor((len - frame) / hop)), applies the window,
// zero-pads to dft_size and takes per-frame DFT magnitudes.
// Throws DataError when the clip is shorter than one frame.
Spectrogram compute_spectrogram(const audio::AudioClip& clip,
                                const FrameConfig& cfg);

}  // namespace vocdet::dsp

#endif  // VOCDET_DSP_SPECTROGRAM_H_
