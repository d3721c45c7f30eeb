// include/vocdet/dsp/feature_io.h

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

#ifndef VOCDET_DSP_FEATURE_IO_H_
#define VOCDET_DSP_FEATURE_IO_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include <json.hpp>

#include "vocdet/dsp/cepstrum.h"

namespace vocdet::dsp {

// Feature cache file, bit-exact across platforms. Little-endian layout:
//   magic "WFC1", u32 T, u32 R, u32 kind (0 = mfcc, 1 = lfcc), u32 N,
//   then base, delta, delta2 as T*R f64 blocks, row-major.
std::vector<std::uint8_t> encode_features(const CepstralFeatures& feats);
CepstralFeatures decode_features(const std::vector<std::uint8_t>& bytes);

void write_feature_cache(const std::filesystem::path& path,
                         const CepstralFeatures& feats);
CepstralFeatures read_feature_cache(const std::filesystem::path& path);

// Full resolved feature configuration, embedded in model files so a
// detector refuses features extracted under different settings.
nlohmann::json fingerprint_json(const FeatureConfig& cfg, int sample_rate);
FeatureConfig fingerprint_config(const nlohmann::json& fp);
int fingerprint_sample_rate(const nlohmann::json& fp);

}  // namespace vocdet::dsp

#endif  // VOCDET_DSP_FEATURE_IO_H_
