// tests/test_analysis.cc

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

#include "vocdet/analysis/pitch.h"
#include "vocdet/analysis/stats.h"
#include "vocdet/audio/clip.h"
#include "vocdet/common/error.h"
#include "vocdet/common/rng.h"

using namespace vocdet;
using namespace vocdet::analysis;

TEST_CASE("estimate_pitch finds a 220 Hz tone in every frame") {
  const audio::AudioClip clip = audio::synth_sine(220.0, 1.0, 16000);
  const PitchTrack track = estimate_pitch(clip);
  REQUIRE(!track.f0_hz.empty());
  for (const auto& f0 : track.f0_hz) {
    REQUIRE(f0.has_value());
    CHECK(std::abs(*f0 - 220.0) <= 2.0);
  }
}

TEST_CASE("estimate_pitch marks digital silence unvoiced") {
  const audio::AudioClip clip = audio::synth_silence(0.5, 16000);
  const PitchTrack track = estimate_pitch(clip);
  for (const auto& f0 : track.f0_hz) CHECK(!f0.has_value());
}

TEST_CASE("estimate_pitch leaves white noise mostly unvoiced") {
  const audio::AudioClip clip = audio::synth_white_noise(9, 1.0, 16000);
  const PitchTrack track = estimate_pitch(clip);
  std::size_t unvoiced = 0;
  for (const auto& f0 : track.f0_hz)
    if (!f0.has_value()) ++unvoiced;
  CHECK(unvoiced >= track.f0_hz.size() * 9 / 10);
}

TEST_CASE("estimate_pitch validates its band") {
  const audio::AudioClip clip = audio::synth_sine(220.0, 0.2, 16000);
  PitchConfig cfg;
  cfg.f_max_hz = 9000.0;  // above Nyquist
  CHECK_THROWS_AS(estimate_pitch(clip, cfg), RangeError);
  cfg = PitchConfig{};
  cfg.median_window = 4;
  CHECK_THROWS_AS(estimate_pitch(clip, cfg), RangeError);
}

TEST_CASE("pitch estimates always fall inside the search band") {
  Rng rng(55);
  for (int trial = 0; trial < 5; ++trial) {
    audio::AudioClip clip =
        audio::synth_sine(rng.uniform(60.0, 480.0), 0.5, 16000);
    for (auto& s : clip.samples) s += 0.05 * (2.0 * rng.uniform() - 1.0);
    const PitchTrack track = estimate_pitch(clip);
    for (const auto& f0 : track.f0_hz) {
      if (!f0) continue;
      CHECK(*f0 >= track.f_min_hz);
      CHECK(*f0 <= track.f_max_hz);
    }
  }
}

TEST_CASE("median smoothing does not invent values between two plateaus") {
  // 150 Hz then 300 Hz: after smoothing every voiced frame must still sit
  // near one of the two plateaus, never in between.
  audio::AudioClip clip = audio::synth_sine(150.0, 0.5, 16000);
  const audio::AudioClip second = audio::synth_sine(300.0, 0.5, 16000);
  clip.samples.insert(clip.samples.end(), second.samples.begin(),
                      second.samples.end());
  const PitchTrack track = estimate_pitch(clip);
  for (const auto& f0 : track.f0_hz) {
    if (!f0) continue;
    const bool near_low = std::abs(*f0 - 150.0) < 10.0;
    const bool near_high = std::abs(*f0 - 300.0) < 10.0;
    CHECK((near_low || near_high));
  }
}

TEST_CASE("pitch and centroid are invariant to amplitude scaling") {
  audio::AudioClip clip = audio::synth_sine(220.0, 0.5, 16000, 0.2);
  Rng rng(77);
  for (auto& s : clip.samples) s += 0.02 * (2.0 * rng.uniform() - 1.0);
  audio::AudioClip scaled = clip;
  for (auto& s : scaled.samples) s *= 3.0;

  const auto t1 = estimate_pitch(clip);
  const auto t2 = estimate_pitch(scaled);
  REQUIRE(t1.f0_hz.size() == t2.f0_hz.size());
  for (std::size_t i = 0; i < t1.f0_hz.size(); ++i) {
    CHECK(t1.f0_hz[i].has_value() == t2.f0_hz[i].has_value());
    if (t1.f0_hz[i])
      CHECK(*t1.f0_hz[i] == doctest::Approx(*t2.f0_hz[i]).epsilon(1e-12));
  }
  CHECK(spectral_centroid(clip) ==
        doctest::Approx(spectral_centroid(scaled)).epsilon(1e-12));
}

TEST_CASE("spectral centroid of a pure tone sits at the tone") {
  const audio::AudioClip clip = audio::synth_sine(1000.0, 1.0, 16000);
  const double bin_hz = 16000.0 / 512.0;
  CHECK(std::abs(spectral_centroid(clip) - 1000.0) <= bin_hz);
}

TEST_CASE("spectral centroid of an equal two-tone mix is the midpoint") {
  audio::AudioClip clip = audio::synth_sine(1000.0, 1.0, 16000, 0.25);
  const audio::AudioClip other = audio::synth_sine(3000.0, 1.0, 16000, 0.25);
  for (std::size_t i = 0; i < clip.samples.size(); ++i)
    clip.samples[i] += other.samples[i];
  const double bin_hz = 16000.0 / 512.0;
  CHECK(std::abs(spectral_centroid(clip) - 2000.0) <= bin_hz);
}

TEST_CASE("spectral centroid of white noise sits near half Nyquist") {
  const audio::AudioClip clip = audio::synth_white_noise(13, 2.0, 16000);
  const double centroid = spectral_centroid(clip);
  CHECK(std::abs(centroid - 4000.0) <= 0.05 * 4000.0);
}

TEST_CASE("spectral centroid is undefined for silence") {
  const audio::AudioClip clip = audio::synth_silence(0.5, 16000);
  CHECK_THROWS_AS(spectral_centroid(clip), DataError);
}

TEST_CASE("corpus stats on a single tone clip") {
  const std::vector<audio::AudioClip> clips = {
      audio::synth_sine(220.0, 1.0, 16000)};
  const CorpusStats stats = corpus_stats(clips);
  CHECK(stats.n_clips == 1);
  CHECK(std::abs(stats.avg_pitch_hz - 220.0) <= 2.0);
  CHECK(stats.std_pitch_hz < 2.0);
}

TEST_CASE("duplicating a clip does not move frame-pooled statistics") {
  const audio::AudioClip clip = audio::synth_sine(220.0, 1.0, 16000);
  const CorpusStats one = corpus_stats({clip});
  const CorpusStats two = corpus_stats({clip, clip});
  CHECK(one.avg_pitch_hz == doctest::Approx(two.avg_pitch_hz).epsilon(1e-12));
  CHECK(one.avg_centroid_hz ==
        doctest::Approx(two.avg_centroid_hz).epsilon(1e-12));
}

TEST_CASE("corpus stats reject an empty subset") {
  CHECK_THROWS_AS(corpus_stats({}), EmptyError);
  CHECK_THROWS_AS(combine_stats({}), EmptyError);
}

TEST_CASE("energy histogram peaks at a bin-centered tone") {
  const double freq = 20.0 * 16000.0 / 512.0;
  const std::vector<audio::AudioClip> clips = {
      audio::synth_sine(freq, 1.0, 16000)};
  const EnergyHistogram hist = energy_histogram(clips);
  std::size_t peak = 0;
  for (std::size_t k = 1; k < hist.energy_db.size(); ++k)
    if (hist.energy_db[k] > hist.energy_db[peak]) peak = k;
  CHECK(peak == 20);
}

TEST_CASE("energy histogram of silence sits at the floor") {
  const std::vector<audio::AudioClip> clips = {
      audio::synth_silence(0.5, 16000)};
  const EnergyHistogram hist = energy_histogram(clips);
  for (const double db : hist.energy_db) CHECK(db == -120.0);
}

TEST_CASE("energy histogram is invariant to clip order") {
  const audio::AudioClip a = audio::synth_sine(500.0, 0.3, 16000);
  const audio::AudioClip b = audio::synth_white_noise(3, 0.4, 16000);
  const EnergyHistogram h1 = energy_histogram({a, b});
  const EnergyHistogram h2 = energy_histogram({b, a});
  CHECK(h1.energy_db == h2.energy_db);
}

TEST_CASE("histogram of a concatenated corpus is the frame-weighted mean") {
  const std::vector<audio::AudioClip> corpus_a = {
      audio::synth_sine(500.0, 0.3, 16000),
      audio::synth_white_noise(3, 0.2, 16000)};
  const std::vector<audio::AudioClip> corpus_b = {
      audio::synth_sine(1500.0, 0.7, 16000)};
  std::vector<audio::AudioClip> both = corpus_a;
  both.insert(both.end(), corpus_b.begin(), corpus_b.end());

  const EnergyHistogram ha = energy_histogram(corpus_a);
  const EnergyHistogram hb = energy_histogram(corpus_b);
  const EnergyHistogram hab = energy_histogram(both);
  const double na = static_cast<double>(ha.n_frames);
  const double nb = static_cast<double>(hb.n_frames);
  REQUIRE(hab.n_frames == ha.n_frames + hb.n_frames);
  for (std::size_t k = 0; k < hab.energy_db.size(); ++k) {
    const double merged = std::pow(10.0, hab.energy_db[k] / 10.0);
    const double expect = (na * std::pow(10.0, ha.energy_db[k] / 10.0) +
                           nb * std::pow(10.0, hb.energy_db[k] / 10.0)) /
                          (na + nb);
    CHECK(merged == doctest::Approx(expect).epsilon(1e-9));
  }
}

TEST_CASE("histogram difference semantics") {
  EnergyHistogram ref;
  ref.freqs_hz = {0.0, 100.0, 200.0};
  ref.energy_db = {-20.0, -35.5, -60.0};
  ref.n_frames = 10;

  SUBCASE("identical histograms give all zeros") {
    for (const double d : histogram_difference(ref, ref))
      CHECK(d == doctest::Approx(0.0));
  }
  SUBCASE("doubled linear energy gives 1.0 everywhere") {
    EnergyHistogram test = ref;
    for (auto& db : test.energy_db) db += 10.0 * std::log10(2.0);
    for (const double d : histogram_difference(test, ref))
      CHECK(d == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("random pair matches the scalar oracle") {
    Rng rng(91);
    EnergyHistogram test = ref;
    for (auto& db : test.energy_db) db = rng.uniform(-80.0, -10.0);
    const auto diff = histogram_difference(test, ref);
    for (std::size_t k = 0; k < diff.size(); ++k) {
      const double t_lin = std::pow(10.0, test.energy_db[k] / 10.0);
      const double r_lin = std::pow(10.0, ref.energy_db[k] / 10.0);
      CHECK(std::abs(diff[k] - (t_lin - r_lin) / r_lin) < 1e-12);
    }
  }
  SUBCASE("grid mismatch is a shape error") {
    EnergyHistogram other = ref;
    other.freqs_hz = {0.0, 50.0, 100.0};
    CHECK_THROWS_AS(histogram_difference(other, ref), ShapeError);
  }
}
