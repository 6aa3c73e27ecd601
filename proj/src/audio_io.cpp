// src/audio_io.cpp

// Copyright 2026  The audiosum authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "audiosum/audio_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace audiosum {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatIeeeFloat = 3;

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::uint32_t v, std::string& out) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::uint16_t v, std::string& out) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

double decode_sample(const unsigned char* p, std::uint16_t format,
                     std::uint16_t bits) {
  switch (bits) {
    case 8:
      return (static_cast<int>(p[0]) - 128) / 128.0;
    case 16: {
      std::int16_t v = static_cast<std::int16_t>(read_u16(p));
      return v / 32768.0;
    }
    case 24: {
      std::int32_t v = static_cast<std::int32_t>(
          (static_cast<std::uint32_t>(p[0]) << 8) |
          (static_cast<std::uint32_t>(p[1]) << 16) |
          (static_cast<std::uint32_t>(p[2]) << 24));
      return (v >> 8) / 8388608.0;
    }
    case 32: {
      std::uint32_t raw = read_u32(p);
      if (format == kFormatIeeeFloat) {
        float f;
        std::memcpy(&f, &raw, sizeof(f));
        return static_cast<double>(f);
      }
      return static_cast<std::int32_t>(raw) / 2147483648.0;
    }
    default:
      throw std::runtime_error("unsupported WAV bit depth: " +
                               std::to_string(bits));
  }
}

}  // namespace

AudioBuffer read_wav(const std::string& path, int canonical_rate) {
  if (canonical_rate <= 0)
    throw std::invalid_argument("canonical rate must be positive");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open WAV file: " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t size = bytes.size();

  if (size < 12 || std::memcmp(data, "RIFF", 4) != 0 ||
      std::memcmp(data + 8, "WAVE", 4) != 0)
    throw std::runtime_error("malformed WAV header: " + path);

  std::uint16_t format = 0, channels = 0, bits = 0, block_align = 0;
  std::uint32_t rate = 0;
  const unsigned char* payload = nullptr;
  std::size_t payload_size = 0;
  bool have_fmt = false;

  std::size_t pos = 12;
  while (pos + 8 <= size) {
    const unsigned char* chunk = data + pos;
    std::uint32_t chunk_size = read_u32(chunk + 4);
    if (pos + 8 + chunk_size > size)
      throw std::runtime_error("truncated WAV chunk: " + path);
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw std::runtime_error("malformed fmt chunk");
      format = read_u16(chunk + 8);
      channels = read_u16(chunk + 10);
      rate = read_u32(chunk + 12);
      block_align = read_u16(chunk + 20);
      bits = read_u16(chunk + 22);
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      payload = chunk + 8;
      payload_size = chunk_size;
    }
    pos += 8 + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }

  if (!have_fmt || payload == nullptr)
    throw std::runtime_error("malformed WAV, missing fmt/data chunk: " + path);
  if (format != kFormatPcm && format != kFormatIeeeFloat)
    throw std::runtime_error("unsupported WAV format code: " +
                             std::to_string(format));
  if (format == kFormatIeeeFloat && bits != 32)
    throw std::runtime_error("IEEE float WAV must be 32-bit");
  if (channels == 0 || rate == 0 || bits % 8 != 0)
    throw std::runtime_error("malformed fmt chunk: " + path);

  const std::size_t bytes_per_sample = bits / 8;
  if (block_align == 0) block_align = static_cast<std::uint16_t>(bytes_per_sample * channels);
  const std::size_t n_frames = payload_size / block_align;
  if (n_frames == 0) throw std::runtime_error("zero-length audio: " + path);

  AudioBuffer buf;
  buf.sample_rate = static_cast<int>(rate);
  buf.samples.resize(n_frames);
  for (std::size_t f = 0; f < n_frames; ++f) {
    const unsigned char* frame = payload + f * block_align;
    double acc = 0.0;
    for (std::uint16_t c = 0; c < channels; ++c)
      acc += decode_sample(frame + c * bytes_per_sample, format, bits);
    buf.samples[f] = std::clamp(acc / channels, -1.0, 1.0);
  }

  return resample(buf, canonical_rate);
}

AudioBuffer resample(const AudioBuffer& in, int target_rate) {
  if (target_rate <= 0)
    throw std::invalid_argument("target rate must be positive");
  if (in.samples.empty()) throw std::invalid_argument("empty buffer");
  if (target_rate == in.sample_rate) return in;

  const std::size_t n = in.samples.size();
  const double step = static_cast<double>(in.sample_rate) / target_rate;
  const auto out_len = static_cast<std::size_t>(std::max<long long>(
      1, std::llround(static_cast<double>(n) * target_rate / in.sample_rate)));

  AudioBuffer out;
  out.sample_rate = target_rate;
  out.samples.resize(out_len);
  for (std::size_t i = 0; i < out_len; ++i) {
    double posn = i * step;
    auto i0 = static_cast<std::size_t>(posn);
    if (i0 >= n - 1) {
      out.samples[i] = in.samples[n - 1];
      continue;
    }
    double frac = posn - static_cast<double>(i0);
    out.samples[i] = in.samples[i0] * (1.0 - frac) + in.samples[i0 + 1] * frac;
  }
  return out;
}

void write_wav(const AudioBuffer& buf, const std::string& path) {
  if (buf.samples.empty()) throw std::invalid_argument("empty buffer");
  if (buf.sample_rate <= 0) throw std::invalid_argument("invalid sample rate");

  const auto n = static_cast<std::uint32_t>(buf.samples.size());
  const std::uint32_t data_size = n * 2;

  std::string out;
  out.reserve(44 + data_size);
  out.append("RIFF");
  put_u32(36 + data_size, out);
  out.append("WAVE");
  out.append("fmt ");
  put_u32(16, out);
  put_u16(kFormatPcm, out);
  put_u16(1, out);  // mono
  put_u32(static_cast<std::uint32_t>(buf.sample_rate), out);
  put_u32(static_cast<std::uint32_t>(buf.sample_rate) * 2, out);
  put_u16(2, out);   // block align
  put_u16(16, out);  // bits per sample
  out.append("data");
  put_u32(data_size, out);

  for (double x : buf.samples) {
    double clamped = std::clamp(x, -1.0, 1.0);
    auto q = static_cast<long>(std::lround(clamped * 32768.0));
    q = std::clamp<long>(q, -32768, 32767);
    put_u16(static_cast<std::uint16_t>(static_cast<std::int16_t>(q)), out);
  }

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write WAV file: " + path);
  os.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!os) throw std::runtime_error("short write to WAV file: " + path);
}

}  // namespace audiosum
