// src/dsp/spectrogram.cc

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

#include "vocdet/dsp/spectrogram.h"

#include <cmath>
#include <numbers>

#include "vocdet/common/error.h"
#include "vocdet/dsp/fft.h"

namespace vocdet::dsp {

std::string window_name(WindowKind kind) {
  switch (kind) {
    case WindowKind::kHann: return "hann";
    case WindowKind::kHamming: return "hamming";
    case WindowKind::kBlackman: return "blackman";
    case WindowKind::kRectangular: return "rectangular";
  }
  throw RangeError("unknown window kind");
}

WindowKind parse_window(const std::string& name) {
  if (name == "hann") return WindowKind::kHann;
  if (name == "hamming") return WindowKind::kHamming;
  if (name == "blackman") return WindowKind::kBlackman;
  if (name == "rectangular") return WindowKind::kRectangular;
  throw FormatError("unknown window \"" + name + "\"");
}

std::vector<double> make_window(WindowKind kind, std::size_t length) {
  if (length == 0) throw RangeError("window: zero length");
  std::vector<double> w(length, 1.0);
  if (length == 1 || kind == WindowKind::kRectangular) return w;
  const double denom = static_cast<double>(length - 1);
  for (std::size_t i = 0; i < length; ++i) {
    const double phase = 2.0 * std::numbers::pi * static_cast<double>(i) / denom;
    switch (kind) {
      case WindowKind::kHann:
        w[i] = 0.5 - 0.5 * std::cos(phase);
        break;
      case WindowKind::kHamming:
        w[i] = 0.54 - 0.46 * std::cos(phase);
        break;
      case WindowKind::kBlackman:
        w[i] = 0.42 - 0.5 * std::cos(phase) + 0.08 * std::cos(2.0 * phase);
        break;
      case WindowKind::kRectangular:
        break;
    }
  }
  return w;
}

std::size_t FrameConfig::frame_samples(int sample_rate) const {
  return static_cast<std::size_t>(std::llround(frame_len_s * sample_rate));
}

std::size_t FrameConfig::hop_samples(int sample_rate) const {
  return static_cast<std::size_t>(std::llround(hop_len_s * sample_rate));
}

Spectrogram compute_spectrogram(const audio::AudioClip& clip,
                                const FrameConfig& cfg) {
  if (clip.sample_rate <= 0)
    throw RangeError("spectrogram: clip has no sample rate");
  const std::size_t frame = cfg.frame_samples(clip.sample_rate);
  const std::size_t hop = cfg.hop_samples(clip.sample_rate);
  if (frame == 0 || hop == 0 || hop > frame)
    throw RangeError("spectrogram: need 0 < hop <= frame");
  if (!is_power_of_two(cfg.dft_size) || cfg.dft_size < frame)
    throw RangeError("spectrogram: dft_size must be a power of two >= frame");
  if (clip.samples.size() < frame)
    throw DataError("spectrogram: clip shorter than one frame");

  const std::size_t n_frames = 1 + (clip.samples.size() - frame) / hop;
  const std::size_t n_bins = cfg.dft_size / 2 + 1;
  const std::vector<double> window = make_window(cfg.window, frame);

  Spectrogram spec;
  spec.values = Matrix(n_frames, n_bins);
  spec.power = cfg.power;
  spec.dft_size = cfg.dft_size;
  spec.sample_rate = clip.sample_rate;
  spec.bin_freqs.resize(n_bins);
  for (std::size_t k = 0; k < n_bins; ++k)
    spec.bin_freqs[k] = static_cast<double>(k) * clip.sample_rate /
                        static_cast<double>(cfg.dft_size);
  spec.frame_times.resize(n_frames);

  std::vector<double> buf(frame);
  for (std::size_t t = 0; t < n_frames; ++t) {
    const std::size_t begin = t * hop;
    spec.frame_times[t] = static_cast<double>(begin) / clip.sample_rate;
    for (std::size_t i = 0; i < frame; ++i)
      buf[i] = clip.samples[begin + i] * window[i];
    const auto bins = real_dft_onesided(buf, cfg.dft_size);
    for (std::size_t k = 0; k < n_bins; ++k) {
      const double mag = std::abs(bins[k]);
      spec.values(t, k) = cfg.power ? mag * mag : mag;
    }
  }
  return spec;
}

}  // namespace vocdet::dsp
