// src/analysis/stats.cc

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

#include "vocdet/analysis/stats.h"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "vocdet/common/error.h"

namespace vocdet::analysis {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

double spectral_centroid(const audio::AudioClip& clip,
                         const dsp::FrameConfig& cfg) {
  dsp::FrameConfig mag_cfg = cfg;
  mag_cfg.power = false;
  const dsp::Spectrogram spec = dsp::compute_spectrogram(clip, mag_cfg);

  double acc = 0.0;
  std::size_t n_frames = 0;
  for (std::size_t t = 0; t < spec.values.rows(); ++t) {
    double weighted = 0.0, total = 0.0;
    for (std::size_t k = 0; k < spec.values.cols(); ++k) {
      weighted += spec.bin_freqs[k] * spec.values(t, k);
      total += spec.values(t, k);
    }
    if (total <= 0.0) continue;
    acc += weighted / total;
    ++n_frames;
  }
  if (n_frames == 0)
    throw DataError("spectral_centroid: undefined for a silent clip");
  return acc / static_cast<double>(n_frames);
}

ClipAnalysis analyze_clip(const audio::AudioClip& clip,
                          const PitchConfig& pitch_cfg,
                          const dsp::FrameConfig& frame_cfg) {
  ClipAnalysis out;
  out.voiced_f0_hz = estimate_pitch(clip, pitch_cfg).voiced_values();
  try {
    out.centroid_hz = spectral_centroid(clip, frame_cfg);
    out.has_centroid = true;
  } catch (const DataError&) {
    out.has_centroid = false;
  }
  return out;
}

CorpusStats combine_stats(const std::vector<ClipAnalysis>& parts) {
  if (parts.empty()) throw EmptyError("corpus_stats: empty subset");
  CorpusStats stats;
  stats.n_clips = parts.size();

  double pitch_sum = 0.0;
  std::size_t n_voiced = 0;
  for (const auto& p : parts) {
    for (const double f : p.voiced_f0_hz) pitch_sum += f;
    n_voiced += p.voiced_f0_hz.size();
  }
  if (n_voiced > 0) {
    stats.avg_pitch_hz = pitch_sum / static_cast<double>(n_voiced);
    double sq = 0.0;
    for (const auto& p : parts)
      for (const double f : p.voiced_f0_hz)
        sq += (f - stats.avg_pitch_hz) * (f - stats.avg_pitch_hz);
    stats.std_pitch_hz =
        n_voiced > 1 ? std::sqrt(sq / static_cast<double>(n_voiced - 1)) : 0.0;
  }

  double centroid_sum = 0.0;
  std::size_t n_centroid = 0;
  for (const auto& p : parts) {
    if (!p.has_centroid) continue;
    centroid_sum += p.centroid_hz;
    ++n_centroid;
  }
  if (n_centroid > 0)
    stats.avg_centroid_hz = centroid_sum / static_cast<double>(n_centroid);
  return stats;
}

CorpusStats corpus_stats(const std::vector<audio::AudioClip>& clips,
                         const PitchConfig& pitch_cfg,
                         const dsp::FrameConfig& frame_cfg) {
  std::vector<ClipAnalysis> parts;
  parts.reserve(clips.size());
  for (const auto& clip : clips)
    parts.push_back(analyze_clip(clip, pitch_cfg, frame_cfg));
  return combine_stats(parts);
}

EnergyAccum clip_energy(const audio::AudioClip& clip,
                        const dsp::FrameConfig& cfg) {
  dsp::FrameConfig power_cfg = cfg;
  power_cfg.power = true;
  const dsp::Spectrogram spec = dsp::compute_spectrogram(clip, power_cfg);
  EnergyAccum accum;
  accum.sample_rate = clip.sample_rate;
  accum.dft_size = power_cfg.dft_size;
  accum.n_frames = spec.values.rows();
  accum.bin_sums.assign(spec.values.cols(), 0.0);
  for (std::size_t t = 0; t < spec.values.rows(); ++t)
    for (std::size_t k = 0; k < spec.values.cols(); ++k)
      accum.bin_sums[k] += spec.values(t, k);
  return accum;
}

EnergyHistogram combine_energy(const std::vector<EnergyAccum>& parts,
                               double floor_db) {
  if (parts.empty()) throw EmptyError("energy_histogram: empty subset");
  const std::size_t n_bins = parts.front().bin_sums.size();
  const int rate = parts.front().sample_rate;
  const std::size_t dft_size = parts.front().dft_size;
  for (const auto& p : parts)
    if (p.bin_sums.size() != n_bins || p.sample_rate != rate)
      throw ShapeError("energy_histogram: mixed bin grids");

  std::vector<double> sums(n_bins, 0.0);
  std::size_t n_frames = 0;
  for (const auto& p : parts) {
    for (std::size_t k = 0; k < n_bins; ++k) sums[k] += p.bin_sums[k];
    n_frames += p.n_frames;
  }
  if (n_frames == 0) throw EmptyError("energy_histogram: no frames");

  EnergyHistogram hist;
  hist.floor_db = floor_db;
  hist.n_frames = n_frames;
  hist.freqs_hz.resize(n_bins);
  hist.energy_db.resize(n_bins);
  for (std::size_t k = 0; k < n_bins; ++k) {
    hist.freqs_hz[k] =
        static_cast<double>(k) * rate / static_cast<double>(dft_size);
    const double mean = sums[k] / static_cast<double>(n_frames);
    const double db = 10.0 * std::log10(mean);
    hist.energy_db[k] = std::isfinite(db) ? std::max(db, floor_db) : floor_db;
  }
  return hist;
}

EnergyHistogram energy_histogram(const std::vector<audio::AudioClip>& clips,
                                 const dsp::FrameConfig& cfg,
                                 double floor_db) {
  std::vector<EnergyAccum> parts;
  parts.reserve(clips.size());
  for (const auto& clip : clips) parts.push_back(clip_energy(clip, cfg));
  return combine_energy(parts, floor_db);
}

std::vector<double> histogram_difference(const EnergyHistogram& test,
                                         const EnergyHistogram& reference) {
  if (test.freqs_hz != reference.freqs_hz)
    throw ShapeError("histogram_difference: bin grids differ");
  std::vector<double> diff(test.energy_db.size());
  for (std::size_t k = 0; k < diff.size(); ++k) {
    const double test_linear = std::pow(10.0, test.energy_db[k] / 10.0);
    const double ref_linear = std::pow(10.0, reference.energy_db[k] / 10.0);
    diff[k] = (test_linear - ref_linear) / ref_linear;
  }
  return diff;
}

void write_stats_csv(
    const std::filesystem::path& path,
    const std::vector<std::pair<std::string, CorpusStats>>& rows) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out << "collection,avg_pitch,std_pitch,avg_centroid\n";
  for (const auto& [name, stats] : rows)
    out << name << ',' << format_double(stats.avg_pitch_hz) << ','
        << format_double(stats.std_pitch_hz) << ','
        << format_double(stats.avg_centroid_hz) << '\n';
}

void write_histogram_csv(const std::filesystem::path& path,
                         const EnergyHistogram& hist,
                         const std::vector<double>* rel_diff) {
  if (rel_diff && rel_diff->size() != hist.freqs_hz.size())
    throw ShapeError("write_histogram_csv: rel_diff size mismatch");
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out << (rel_diff ? "freq_hz,energy_db,rel_diff\n" : "freq_hz,energy_db\n");
  for (std::size_t k = 0; k < hist.freqs_hz.size(); ++k) {
    out << format_double(hist.freqs_hz[k]) << ','
        << format_double(hist.energy_db[k]);
    if (rel_diff) out << ',' << format_double((*rel_diff)[k]);
    out << '\n';
  }
}

}  // namespace vocdet::analysis
