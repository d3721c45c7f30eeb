// src/audio/wav.cc

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

#include "vocdet/audio/wav.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "vocdet/common/error.h"

namespace vocdet::audio {

namespace {

constexpr std::uint16_t kFormatPcm = 1;

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 |
         static_cast<std::uint32_t>(p[3]) << 24;
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | p[1] << 8);
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 16) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 24) & 0xff));
}

void put_u16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
}

void put_tag(std::vector<unsigned char>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

}  // namespace

AudioClip load_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed for " + path.string());

  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw FormatError(path.string() + ": not a RIFF/WAVE file");

  bool have_fmt = false;
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* data = nullptr;
  std::uint32_t data_len = 0;

  // Walk the chunk list. Chunks are word-aligned: odd sizes carry a pad byte.
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* head = bytes.data() + pos;
    const std::uint32_t size = read_u32(head + 4);
    const std::size_t body = pos + 8;
    if (body + size > bytes.size())
      throw FormatError(path.string() + ": truncated chunk");
    if (std::memcmp(head, "fmt ", 4) == 0) {
      if (size < 16) throw FormatError(path.string() + ": short fmt chunk");
      const unsigned char* f = bytes.data() + body;
      format = read_u16(f);
      channels = read_u16(f + 2);
      rate = read_u32(f + 4);
      bits = read_u16(f + 14);
      have_fmt = true;
    } else if (std::memcmp(head, "data", 4) == 0) {
      data = bytes.data() + body;
      data_len = size;
    }
    pos = body + size + (size & 1);
  }

  if (!have_fmt) throw FormatError(path.string() + ": missing fmt chunk");
  if (data == nullptr) throw FormatError(path.string() + ": missing data chunk");
  if (format != kFormatPcm)
    throw UnsupportedError(path.string() + ": only PCM (format 1) supported");
  if (bits != 16)
    throw UnsupportedError(path.string() + ": only 16-bit samples supported");
  if (channels == 0) throw FormatError(path.string() + ": zero channels");
  if (rate == 0) throw FormatError(path.string() + ": zero sample rate");

  const std::size_t frame_bytes = 2u * channels;
  const std::size_t frames = data_len / frame_bytes;
  if (frames == 0) throw FormatError(path.string() + ": empty data chunk");

  AudioClip clip;
  clip.sample_rate = static_cast<int>(rate);
  clip.source_id = path.string();
  clip.samples.resize(frames);
  const double scale = 1.0 / (32768.0 * channels);
  for (std::size_t i = 0; i < frames; ++i) {
    const unsigned char* frame = data + i * frame_bytes;
    std::int64_t acc = 0;
    for (std::uint16_t c = 0; c < channels; ++c) {
      const std::int16_t s = static_cast<std::int16_t>(
          read_u16(frame + 2u * c));
      acc += s;
    }
    clip.samples[i] = static_cast<double>(acc) * scale;
  }
  return clip;
}

void write_wav(const std::filesystem::path& path, const AudioClip& clip) {
  if (clip.sample_rate <= 0)
    throw RangeError("write_wav: sample rate must be positive");
  if (clip.samples.empty()) throw EmptyError("write_wav: no samples");

  const std::uint32_t n = static_cast<std::uint32_t>(clip.samples.size());
  const std::uint32_t data_bytes = 2u * n;

  std::vector<unsigned char> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_bytes);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(clip.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(clip.sample_rate) * 2u);
  put_u16(out, 2);   // block align
  put_u16(out, 16);  // bits per sample
  put_tag(out, "data");
  put_u32(out, data_bytes);
  for (const double x : clip.samples) {
    const double clamped = std::clamp(x, -1.0, 1.0);
    const long q = std::lround(clamped * 32768.0);
    const std::int16_t s =
        static_cast<std::int16_t>(std::clamp<long>(q, -32768, 32767));
    put_u16(out, static_cast<std::uint16_t>(s));
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot create " + path.string());
  f.write(reinterpret_cast<const char*>(out.data()),
          static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("write failed for " + path.string());
}

}  // namespace vocdet::audio
