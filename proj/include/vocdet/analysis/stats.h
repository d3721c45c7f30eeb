// include/vocdet/analysis/stats.h

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

#ifndef VOCDET_ANALYSIS_STATS_H_
#define VOCDET_ANALYSIS_STATS_H_

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "vocdet/analysis/pitch.h"
#include "vocdet/audio/clip.h"
#include "vocdet/dsp/spectrogram.h"

namespace vocdet::analysis {

// Mean over frames of sum_k f_k |X(t,k)| / sum_k |X(t,k)|.
// Throws DataError when every frame is silent.
double spectral_centroid(const audio::AudioClip& clip,
                         const dsp::FrameConfig& cfg = {});

struct CorpusStats {
  double avg_pitch_hz = 0.0;
  double std_pitch_hz = 0.0;
  double avg_centroid_hz = 0.0;
  std::size_t n_clips = 0;
};

// Per-clip partial results; corpus reductions combine the partials in
// manifest order so batch parallelism cannot change the outcome.
struct ClipAnalysis {
  std::vector<double> voiced_f0_hz;
  double centroid_hz = 0.0;
  bool has_centroid = false;
};

ClipAnalysis analyze_clip(const audio::AudioClip& clip,
                          const PitchConfig& pitch_cfg = {},
                          const dsp::FrameConfig& frame_cfg = {});

// Pitch statistics pool voiced frames across clips; the centroid is averaged
// per clip. Throws EmptyError for an empty subset.
CorpusStats combine_stats(const std::vector<ClipAnalysis>& parts);
CorpusStats corpus_stats(const std::vector<audio::AudioClip>& clips,
                         const PitchConfig& pitch_cfg = {},
                         const dsp::FrameConfig& frame_cfg = {});

// Mean power per DFT bin over all frames of a corpus, in dB (10*log10,
// floored). freqs_hz ascends over dft_size/2 + 1 bins.
struct EnergyHistogram {
  std::vector<double> freqs_hz;
  std::vector<double> energy_db;
  std::size_t n_frames = 0;
  double floor_db = -120.0;
};

struct EnergyAccum {
  std::vector<double> bin_sums;  // summed power per bin
  std::size_t n_frames = 0;
  int sample_rate = 0;
  std::size_t dft_size = 0;
};

EnergyAccum clip_energy(const audio::AudioClip& clip,
                        const dsp::FrameConfig& cfg = {});
EnergyHistogram combine_energy(const std::vector<EnergyAccum>& parts,
                               double floor_db = -120.0);
EnergyHistogram energy_histogram(const std::vector<audio::AudioClip>& clips,
                                 const dsp::FrameConfig& cfg = {},
                                 double floor_db = -120.0);

// Per-bin relative difference on linear energies:
// (test - reference) / reference. Grids must match.
std::vector<double> histogram_difference(const EnergyHistogram& test,
                                         const EnergyHistogram& reference);

// CSV emitters. Stats: collection,avg_pitch,std_pitch,avg_centroid.
// Histogram: freq_hz,energy_db[,rel_diff].
void write_stats_csv(
    const std::filesystem::path& path,
    const std::vector<std::pair<std::string, CorpusStats>>& rows);
void write_histogram_csv(const std::filesystem::path& path,
                         const EnergyHistogram& hist,
                         const std::vector<double>* rel_diff = nullptr);

}  // namespace vocdet::analysis

#endif  // VOCDET_ANALYSIS_STATS_H_
