// tests/test_dsp.cc

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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.h"
#include "vocdet/audio/clip.h"
#include "vocdet/common/error.h"
#include "vocdet/common/rng.h"
#include "vocdet/dsp/cepstrum.h"
#include "vocdet/dsp/feature_io.h"
#include "vocdet/dsp/filterbank.h"
#include "vocdet/dsp/spectrogram.h"

using namespace vocdet;
using namespace vocdet::dsp;

TEST_CASE("hz_to_mel matches the defining formula") {
  CHECK(hz_to_mel(0.0) == 0.0);
  // Independent evaluations of 2595 * log10(1 + f/700).
  CHECK(hz_to_mel(700.0) == doctest::Approx(2595.0 * std::log10(2.0)).epsilon(1e-12));
  CHECK(std::abs(hz_to_mel(700.0) - 781.17) < 0.01);
  CHECK(std::abs(hz_to_mel(1000.0) - 999.99) < 0.01);
  CHECK_THROWS_AS(hz_to_mel(-1.0), RangeError);
}

TEST_CASE("hz_to_mel is strictly monotone and inverts within 1e-6 Hz") {
  double prev = -1.0;
  for (double f = 0.0; f <= 8000.0; f += 7.3) {
    const double mel = hz_to_mel(f);
    CHECK(mel > prev);
    prev = mel;
    CHECK(std::abs(mel_to_hz(mel) - f) < 1e-6);
  }
}

TEST_CASE("spectrogram isolates a bin-centered tone under a rectangular window") {
  const int rate = 16000;
  FrameConfig cfg;
  cfg.frame_len_s = 512.0 / rate;  // frame == dft_size, no zero padding
  cfg.hop_len_s = cfg.frame_len_s;
  cfg.window = WindowKind::kRectangular;
  cfg.dft_size = 512;
  cfg.power = false;
  const double freq = 20.0 * rate / 512.0;  // exactly bin 20
  const audio::AudioClip clip = audio::synth_sine(freq, 0.25, rate);
  const Spectrogram spec = compute_spectrogram(clip, cfg);
  for (std::size_t t = 0; t < spec.values.rows(); ++t) {
    const double peak = spec.values(t, 20);
    CHECK(peak > 1.0);
    for (std::size_t k = 0; k < spec.values.cols(); ++k) {
      if (k == 20) continue;
      CHECK(spec.values(t, k) < 1e-10 * peak);
    }
  }
}

TEST_CASE("spectrogram of silence is identically zero") {
  const audio::AudioClip clip = audio::synth_silence(0.2, 16000);
  const Spectrogram spec = compute_spectrogram(clip, FrameConfig{});
  for (const double v : spec.values.data()) CHECK(v == 0.0);
}

TEST_CASE("spectrogram frame count follows 1 + floor((len - frame) / hop)") {
  const audio::AudioClip clip = audio::synth_sine(220.0, 1.0, 16000);
  const Spectrogram spec = compute_spectrogram(clip, FrameConfig{});
  CHECK(spec.values.rows() == 99);
  CHECK(spec.values.cols() == 257);
}

TEST_CASE("power spectrogram satisfies Parseval per frame") {
  const audio::AudioClip clip = audio::synth_white_noise(17, 0.1, 16000);
  FrameConfig cfg;
  cfg.power = true;
  const Spectrogram spec = compute_spectrogram(clip, cfg);
  const std::size_t frame = cfg.frame_samples(16000);
  const std::size_t hop = cfg.hop_samples(16000);
  const auto window = make_window(cfg.window, frame);
  const double K = static_cast<double>(cfg.dft_size);
  for (std::size_t t = 0; t < spec.values.rows(); ++t) {
    // Full-spectrum energy from the one-sided rows: interior bins count twice.
    double spec_energy = spec.values(t, 0) + spec.values(t, spec.values.cols() - 1);
    for (std::size_t k = 1; k + 1 < spec.values.cols(); ++k)
      spec_energy += 2.0 * spec.values(t, k);
    double time_energy = 0.0;
    for (std::size_t i = 0; i < frame; ++i) {
      const double w = clip.samples[t * hop + i] * window[i];
      time_energy += w * w;
    }
    CHECK(spec_energy == doctest::Approx(K * time_energy).epsilon(1e-9));
  }
}

TEST_CASE("spectrogram rejects clips shorter than one frame") {
  audio::AudioClip clip;
  clip.sample_rate = 16000;
  clip.samples.assign(100, 0.1);
  CHECK_THROWS_AS(compute_spectrogram(clip, FrameConfig{}), DataError);
}

TEST_CASE("single linear filter peaks at half Nyquist") {
  const Filterbank fb =
      build_filterbank(FilterScale::kLinear, 1, 0.0, 8000.0, 16, 16000);
  REQUIRE(fb.weights.rows() == 1);
  REQUIRE(fb.weights.cols() == 9);
  CHECK(fb.weights(0, 4) == 1.0);
  CHECK(fb.center_freqs_hz[0] == doctest::Approx(4000.0));
  for (std::size_t k = 0; k < 9; ++k) CHECK(fb.weights(0, k) >= 0.0);
}

TEST_CASE("mel filterbank centers are equally spaced on the mel scale") {
  const Filterbank fb =
      build_filterbank(FilterScale::kMel, 40, 0.0, 8000.0, 512, 16000);
  REQUIRE(fb.center_freqs_hz.size() == 40);
  std::vector<double> mels;
  for (const double f : fb.center_freqs_hz) mels.push_back(hz_to_mel(f));
  const double step = mels[1] - mels[0];
  for (std::size_t i = 1; i < mels.size(); ++i)
    CHECK(std::abs(mels[i] - mels[i - 1] - step) < 1e-9);
}

TEST_CASE("linear S=4 filterbank matches hand-enumerated triangles") {
  // Edges 0,1600,3200,4800,6400,8000 Hz on a 1 kHz bin grid snap to bins
  // 0,2,3,5,6,8; each filter rises and falls linearly in index space.
  const Filterbank fb =
      build_filterbank(FilterScale::kLinear, 4, 0.0, 8000.0, 16, 16000);
  const long edges[6] = {0, 2, 3, 5, 6, 8};
  Matrix expect(4, 9);
  for (std::size_t s = 0; s < 4; ++s) {
    const long l = edges[s], c = edges[s + 1], r = edges[s + 2];
    for (long k = l; k <= c; ++k)
      expect(s, static_cast<std::size_t>(k)) =
          static_cast<double>(k - l) / static_cast<double>(c - l);
    for (long k = c; k <= r; ++k)
      expect(s, static_cast<std::size_t>(k)) =
          static_cast<double>(r - k) / static_cast<double>(r - c);
  }
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t k = 0; k < 9; ++k)
      CHECK(fb.weights(s, k) == doctest::Approx(expect(s, k)).epsilon(1e-12));
}

TEST_CASE("every filter row is unimodal with peak exactly 1") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n_filters = 1 + rng.bounded(12);
    const FilterScale scale =
        rng.uniform() < 0.5 ? FilterScale::kMel : FilterScale::kLinear;
    Filterbank fb;
    try {
      fb = build_filterbank(scale, n_filters, 0.0, 8000.0, 128, 16000);
    } catch (const ResolutionError&) {
      continue;
    }
    for (std::size_t s = 0; s < fb.weights.rows(); ++s) {
      double peak = 0.0;
      bool rising = true;
      bool ok = true;
      double prev = -1.0;
      for (std::size_t k = 0; k < fb.weights.cols(); ++k) {
        const double w = fb.weights(s, k);
        peak = std::max(peak, w);
        if (w < prev) rising = false;
        if (!rising && w > prev) ok = false;  // a second rise breaks unimodality
        prev = w;
      }
      CHECK(ok);
      CHECK(peak == 1.0);
    }
  }
}

TEST_CASE("filterbank rejects more filters than the bin grid resolves") {
  CHECK_THROWS_AS(build_filterbank(FilterScale::kLinear, 20, 0.0, 8000.0, 16, 16000),
                  ResolutionError);
}

TEST_CASE("apply_filterbank is linear and matches the double-sum oracle") {
  Rng rng(31);
  const Filterbank fb =
      build_filterbank(FilterScale::kLinear, 2, 0.0, 8000.0, 16, 16000);

  SUBCASE("zero spectrogram maps to zero") {
    Spectrogram spec;
    spec.values = Matrix(3, 9);
    spec.power = false;
    const MelSpectrogram out = apply_filterbank(spec, fb);
    for (const double v : out.values.data()) CHECK(v == 0.0);
  }

  SUBCASE("single-bin impulse picks out one filterbank column") {
    Spectrogram spec;
    spec.values = Matrix(1, 9);
    spec.power = false;
    spec.values(0, 3) = 2.5;
    const MelSpectrogram out = apply_filterbank(spec, fb);
    for (std::size_t s = 0; s < 2; ++s)
      CHECK(out.values(0, s) == doctest::Approx(2.5 * fb.weights(s, 3)));
  }

  SUBCASE("random magnitude spectrogram matches the oracle") {
    Spectrogram spec;
    spec.values = Matrix(3, 9);
    spec.power = false;
    for (auto& v : spec.values.data()) v = rng.uniform(0.0, 2.0);
    const MelSpectrogram out = apply_filterbank(spec, fb);
    const Matrix expect = oracle::naive_apply_filterbank(spec.values, fb.weights);
    for (std::size_t t = 0; t < 3; ++t)
      for (std::size_t s = 0; s < 2; ++s)
        CHECK(std::abs(out.values(t, s) - expect(t, s)) < 1e-12);
  }

  SUBCASE("power spectrograms are converted to magnitudes first") {
    Spectrogram mag;
    mag.values = Matrix(2, 9);
    mag.power = false;
    for (auto& v : mag.values.data()) v = rng.uniform(0.0, 2.0);
    Spectrogram pow = mag;
    pow.power = true;
    for (auto& v : pow.values.data()) v = v * v;
    const MelSpectrogram a = apply_filterbank(mag, fb);
    const MelSpectrogram b = apply_filterbank(pow, fb);
    for (std::size_t i = 0; i < a.values.data().size(); ++i)
      CHECK(a.values.data()[i] == doctest::Approx(b.values.data()[i]).epsilon(1e-12));
  }

  SUBCASE("bin count mismatch is a shape error") {
    Spectrogram spec;
    spec.values = Matrix(1, 5);
    CHECK_THROWS_AS(apply_filterbank(spec, fb), ShapeError);
  }
}

TEST_CASE("cepstrum of a constant row keeps only the zeroth coefficient") {
  MelSpectrogram mel;
  mel.values = Matrix(2, 8, 3.7);
  const Matrix c = cepstrum(mel, 8, 1e-10);
  CHECK(c(0, 0) == doctest::Approx(8.0 * std::log(3.7)).epsilon(1e-12));
  for (std::size_t r = 1; r < 8; ++r) CHECK(std::abs(c(0, r)) < 1e-10);
}

TEST_CASE("cepstrum matches the naive double loop") {
  Rng rng(41);
  MelSpectrogram mel;
  mel.values = Matrix(3, 4);
  for (auto& v : mel.values.data()) v = rng.uniform(0.1, 5.0);
  const Matrix got = cepstrum(mel, 4, 1e-10);
  const Matrix expect = oracle::naive_cepstrum(mel.values, 4, 1e-10);
  for (std::size_t i = 0; i < got.data().size(); ++i)
    CHECK(std::abs(got.data()[i] - expect.data()[i]) < 1e-12);
}

TEST_CASE("cepstrum floors zero energies and stays finite") {
  MelSpectrogram mel;
  mel.values = Matrix(1, 4, 1.0);
  mel.values(0, 2) = 0.0;
  const Matrix c = cepstrum(mel, 4, 1e-10);
  for (const double v : c.data()) CHECK(std::isfinite(v));
  // The floored entry contributes log(1e-10).
  CHECK(c(0, 0) == doctest::Approx(std::log(1e-10)).epsilon(1e-9));
}

TEST_CASE("delta of a constant sequence is zero") {
  const Matrix c(6, 3, 2.5);
  for (const int n : {1, 2, 3}) {
    const Matrix d = delta(c, n);
    for (const double v : d.data()) CHECK(v == doctest::Approx(0.0));
  }
}

TEST_CASE("delta of a linear ramp is one in the interior") {
  Matrix c(9, 2);
  for (std::size_t t = 0; t < 9; ++t)
    for (std::size_t r = 0; r < 2; ++r) c(t, r) = static_cast<double>(t);
  for (const int n : {1, 2, 3}) {
    const Matrix d = delta(c, n);
    for (std::size_t t = static_cast<std::size_t>(n);
         t < 9 - static_cast<std::size_t>(n); ++t)
      CHECK(d(t, 0) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("delta matches the naive oracle with edge replication") {
  Rng rng(43);
  Matrix c(5, 3);
  for (auto& v : c.data()) v = rng.uniform(-2.0, 2.0);
  const Matrix got = delta(c, 2);
  const Matrix expect = oracle::naive_delta(c, 2);
  for (std::size_t i = 0; i < got.data().size(); ++i)
    CHECK(std::abs(got.data()[i] - expect.data()[i]) < 1e-12);
}

TEST_CASE("delta is linear in its input") {
  Rng rng(47);
  Matrix x(6, 2), y(6, 2);
  for (auto& v : x.data()) v = rng.uniform(-1.0, 1.0);
  for (auto& v : y.data()) v = rng.uniform(-1.0, 1.0);
  const double a = 1.7, b = -0.4;
  Matrix combo(6, 2);
  for (std::size_t i = 0; i < combo.data().size(); ++i)
    combo.data()[i] = a * x.data()[i] + b * y.data()[i];
  const Matrix lhs = delta(combo, 2);
  const Matrix dx = delta(x, 2), dy = delta(y, 2);
  for (std::size_t i = 0; i < lhs.data().size(); ++i)
    CHECK(lhs.data()[i] ==
          doctest::Approx(a * dx.data()[i] + b * dy.data()[i]).epsilon(1e-12));
}

TEST_CASE("extract_features produces 99 frames of 20 coefficients at defaults") {
  const audio::AudioClip clip = audio::synth_sine(440.0, 1.0, 16000);
  const CepstralFeatures feats = extract_features(clip, FeatureConfig{});
  CHECK(feats.base.rows() == 99);
  CHECK(feats.base.cols() == 20);
  CHECK(feats.delta.rows() == 99);
  CHECK(feats.delta2.cols() == 20);
}

TEST_CASE("extract_features is the documented composition of stages") {
  const audio::AudioClip clip = audio::synth_sine(440.0, 0.5, 16000);
  for (const FeatureKind kind : {FeatureKind::kMfcc, FeatureKind::kLfcc}) {
    FeatureConfig cfg;
    cfg.kind = kind;
    const CepstralFeatures feats = extract_features(clip, cfg);

    const Spectrogram spec = compute_spectrogram(clip, cfg.frame);
    const FilterScale scale =
        kind == FeatureKind::kMfcc ? FilterScale::kMel : FilterScale::kLinear;
    const Filterbank fb = build_filterbank(scale, cfg.n_filters, cfg.f_min,
                                           8000.0, cfg.frame.dft_size, 16000);
    const Matrix base =
        cepstrum(apply_filterbank(spec, fb), cfg.n_coeffs, cfg.log_floor);
    CHECK(feats.base == base);
    CHECK(feats.delta == delta(base, cfg.delta_window));
    CHECK(feats.delta2 == delta(delta(base, cfg.delta_window), cfg.delta_window));
  }
}

TEST_CASE("extract_features is bit-deterministic") {
  const audio::AudioClip clip = audio::synth_sine(440.0, 1.0, 16000);
  const auto a = encode_features(extract_features(clip, FeatureConfig{}));
  const auto b = encode_features(extract_features(clip, FeatureConfig{}));
  CHECK(a == b);
}

TEST_CASE("feature cache round trips exactly") {
  const audio::AudioClip clip = audio::synth_white_noise(3, 0.3, 16000);
  const CepstralFeatures feats = extract_features(clip, FeatureConfig{});
  const auto bytes = encode_features(feats);
  const CepstralFeatures back = decode_features(bytes);
  CHECK(back.base == feats.base);
  CHECK(back.delta == feats.delta);
  CHECK(back.delta2 == feats.delta2);
  CHECK(back.kind == feats.kind);
  CHECK(back.delta_window == feats.delta_window);

  SUBCASE("bad magic is rejected") {
    auto corrupt = bytes;
    corrupt[0] = 'X';
    CHECK_THROWS_AS(decode_features(corrupt), FormatError);
  }
  SUBCASE("truncation is rejected") {
    auto corrupt = bytes;
    corrupt.resize(corrupt.size() - 5);
    CHECK_THROWS_AS(decode_features(corrupt), FormatError);
  }
}

TEST_CASE("feature fingerprint JSON round trips") {
  FeatureConfig cfg;
  cfg.kind = FeatureKind::kMfcc;
  cfg.n_coeffs = 13;
  cfg.frame.window = WindowKind::kHamming;
  const auto fp = fingerprint_json(cfg, 16000);
  const FeatureConfig back = fingerprint_config(fp);
  CHECK(fingerprint_sample_rate(fp) == 16000);
  CHECK(fingerprint_json(back, 16000) == fp);
}
