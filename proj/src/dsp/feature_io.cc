// src/dsp/feature_io.cc

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

#include "vocdet/dsp/feature_io.h"

#include <bit>
#include <cstring>
#include <fstream>

#include "vocdet/common/error.h"

namespace vocdet::dsp {

namespace {

constexpr char kMagic[4] = {'W', 'F', 'C', '1'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 |
         static_cast<std::uint32_t>(p[3]) << 24;
}

void put_f64(std::vector<std::uint8_t>& out, double v) {
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i)
    out.push_back(static_cast<std::uint8_t>((bits >> (8 * i)) & 0xff));
}

double get_f64(const std::uint8_t* p) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i)
    bits |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

void put_block(std::vector<std::uint8_t>& out, const Matrix& m) {
  for (const double v : m.data()) put_f64(out, v);
}

Matrix get_block(const std::uint8_t* p, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i)
    m.data()[i] = get_f64(p + 8 * i);
  return m;
}

}  // namespace

std::vector<std::uint8_t> encode_features(const CepstralFeatures& feats) {
  if (!feats.base.same_shape(feats.delta) ||
      !feats.base.same_shape(feats.delta2))
    throw ShapeError("feature cache: block shapes differ");
  std::vector<std::uint8_t> out;
  const std::size_t n = feats.base.rows() * feats.base.cols();
  out.reserve(20 + 3 * 8 * n);
  out.insert(out.end(), kMagic, kMagic + 4);
  put_u32(out, static_cast<std::uint32_t>(feats.base.rows()));
  put_u32(out, static_cast<std::uint32_t>(feats.base.cols()));
  put_u32(out, feats.kind == FeatureKind::kMfcc ? 0u : 1u);
  put_u32(out, static_cast<std::uint32_t>(feats.delta_window));
  put_block(out, feats.base);
  put_block(out, feats.delta);
  put_block(out, feats.delta2);
  return out;
}

CepstralFeatures decode_features(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 20 || std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw FormatError("feature cache: bad magic");
  const std::size_t rows = get_u32(bytes.data() + 4);
  const std::size_t cols = get_u32(bytes.data() + 8);
  const std::uint32_t kind = get_u32(bytes.data() + 12);
  const std::uint32_t window = get_u32(bytes.data() + 16);
  if (kind > 1) throw FormatError("feature cache: bad kind tag");
  const std::size_t block = 8 * rows * cols;
  if (bytes.size() != 20 + 3 * block)
    throw FormatError("feature cache: truncated data");

  CepstralFeatures feats;
  feats.kind = kind == 0 ? FeatureKind::kMfcc : FeatureKind::kLfcc;
  feats.delta_window = static_cast<int>(window);
  feats.base = get_block(bytes.data() + 20, rows, cols);
  feats.delta = get_block(bytes.data() + 20 + block, rows, cols);
  feats.delta2 = get_block(bytes.data() + 20 + 2 * block, rows, cols);
  return feats;
}

void write_feature_cache(const std::filesystem::path& path,
                         const CepstralFeatures& feats) {
  const auto bytes = encode_features(feats);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

CepstralFeatures read_feature_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return decode_features(bytes);
}

nlohmann::json fingerprint_json(const FeatureConfig& cfg, int sample_rate) {
  return nlohmann::json{
      {"kind", feature_kind_name(cfg.kind)},
      {"sample_rate", sample_rate},
      {"frame_len_s", cfg.frame.frame_len_s},
      {"hop_len_s", cfg.frame.hop_len_s},
      {"window", window_name(cfg.frame.window)},
      {"dft_size", cfg.frame.dft_size},
      {"power", cfg.frame.power},
      {"n_filters", cfg.n_filters},
      {"n_coeffs", cfg.n_coeffs},
      {"delta_window", cfg.delta_window},
      {"log_floor", cfg.log_floor},
      {"f_min", cfg.f_min},
      {"f_max", cfg.f_max},
  };
}

FeatureConfig fingerprint_config(const nlohmann::json& fp) {
  FeatureConfig cfg;
  cfg.kind = parse_feature_kind(fp.at("kind").get<std::string>());
  cfg.frame.frame_len_s = fp.at("frame_len_s").get<double>();
  cfg.frame.hop_len_s = fp.at("hop_len_s").get<double>();
  cfg.frame.window = parse_window(fp.at("window").get<std::string>());
  cfg.frame.dft_size = fp.at("dft_size").get<std::size_t>();
  cfg.frame.power = fp.at("power").get<bool>();
  cfg.n_filters = fp.at("n_filters").get<std::size_t>();
  cfg.n_coeffs = fp.at("n_coeffs").get<std::size_t>();
  cfg.delta_window = fp.at("delta_window").get<int>();
  cfg.log_floor = fp.at("log_floor").get<double>();
  cfg.f_min = fp.at("f_min").get<double>();
  cfg.f_max = fp.at("f_max").get<double>();
  return cfg;
}

int fingerprint_sample_rate(const nlohmann::json& fp) {
  return fp.at("sample_rate").get<int>();
}

}  // namespace vocdet::dsp
