// include/vocdet/dsp/fft.h

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

#ifndef VOCDET_DSP_FFT_H_
#define VOCDET_DSP_FFT_H_

#include <complex>
#include <vector>

namespace vocdet::dsp {

// In-place iterative radix-2 FFT. The length must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& a);

// DFT of a real frame zero-padded to dft_size, returning the one-sided
// spectrum (dft_size/2 + 1 bins).
std::vector<std::complex<double>> real_dft_onesided(
    const std::vector<double>& frame, std::size_t dft_size);

bool is_power_of_two(std::size_t n);

}  // namespace vocdet::dsp

#endif  // VOCDET_DSP_FFT_H_
