// include/vocdet/dsp/filterbank.h

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

#ifndef VOCDET_DSP_FILTERBANK_H_
#define VOCDET_DSP_FILTERBANK_H_

#include <string>
#include <vector>

#include "vocdet/common/matrix.h"
#include "vocdet/dsp/spectrogram.h"

namespace vocdet::dsp {

// The perceptual frequency warp: f_mel = 2595 * log10(1 + f / 700).
double hz_to_mel(double f_hz);
double mel_to_hz(double mel);

enum class FilterScale { kMel, kLinear };

std::string scale_name(FilterScale scale);
FilterScale parse_scale(const std::string& name);

// Bank of S triangular filters evaluated on the DFT bin grid. Filter edges
// are equally spaced on the chosen scale and snapped to the nearest bin, so
// every filter peaks at exactly 1 on its center bin.
struct Filterbank {
  Matrix weights;  // S x (dft_size/2 + 1)
  FilterScale scale = FilterScale::kMel;
  double f_min = 0.0;
  double f_max = 0.0;
  // Exact (un-snapped) center frequencies; equally spaced on the scale.
  std::vector<double> center_freqs_hz;
  std::size_t dft_size = 0;
  int sample_rate = 0;
};

// Throws ResolutionError when S is too large for the bin resolution (two
// snapped edges collide, leaving a filter without support).
Filterbank build_filterbank(FilterScale scale, std::size_t n_filters,
                            double f_min, double f_max, std::size_t dft_size,
                            int sample_rate);

struct MelSpectrogram {
  Matrix values;  // T x S
  FilterScale scale = FilterScale::kMel;
};

// Per-frame filter energies: sum_k |X(t,k)| * H(s,k). Works on magnitudes;
// a power spectrogram is converted by square root first.
MelSpectrogram apply_filterbank(const Spectrogram& spec, const Filterbank& fb);

}  // namespace vocdet::dsp

#endif  // VOCDET_DSP_FILTERBANK_H_
