// src/audio.cc

// Copyright 2026  Spoofkit Authors

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

#include "spoofkit/audio.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "spoofkit/error.h"
#include "spoofkit/rng.h"

namespace spoofkit {

namespace {

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void write_u16(std::ostream& os, std::uint16_t v) {
  unsigned char b[2] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff)};
  os.write(reinterpret_cast<const char*>(b), 2);
}

void write_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

}  // namespace

AudioBuffer load_wav(const std::string& path, int required_rate) {
  if (!std::filesystem::exists(path))
    throw Error(ErrorKind::MissingFile, path);

  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);

  unsigned char riff[12];
  if (!in.read(reinterpret_cast<char*>(riff), 12))
    throw Error(ErrorKind::NotWav, path + ": truncated header");
  if (std::memcmp(riff, "RIFF", 4) != 0 || std::memcmp(riff + 8, "WAVE", 4) != 0)
    throw Error(ErrorKind::NotWav, path + ": bad RIFF/WAVE magic");

  bool have_fmt = false;
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  std::vector<char> data;

  // Walk chunks; anything other than fmt/data is skipped.
  unsigned char hdr[8];
  while (in.read(reinterpret_cast<char*>(hdr), 8)) {
    std::uint32_t size = read_u32(hdr + 4);
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (size < 16) throw Error(ErrorKind::NotWav, path + ": short fmt chunk");
      std::vector<unsigned char> fmt(size);
      if (!in.read(reinterpret_cast<char*>(fmt.data()), size))
        throw Error(ErrorKind::NotWav, path + ": truncated fmt chunk");
      format = read_u16(fmt.data());
      channels = read_u16(fmt.data() + 2);
      rate = read_u32(fmt.data() + 4);
      bits = read_u16(fmt.data() + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data.resize(size);
      if (!in.read(data.data(), size))
        throw Error(ErrorKind::NotWav, path + ": truncated data chunk");
    } else {
      in.seekg(size + (size & 1), std::ios::cur);
    }
    if (size & 1) in.seekg(1, std::ios::cur);
  }

  if (!have_fmt) throw Error(ErrorKind::NotWav, path + ": no fmt chunk");
  if (format != 1 || bits != 16)
    throw Error(ErrorKind::UnsupportedFormat,
                path + ": only PCM16 is supported");
  if (channels != 1)
    throw Error(ErrorKind::UnsupportedFormat, path + ": not mono");
  if (required_rate > 0 && rate != static_cast<std::uint32_t>(required_rate))
    throw Error(ErrorKind::UnsupportedFormat,
                path + ": sample rate " + std::to_string(rate) + " != required " +
                    std::to_string(required_rate));
  if (rate == 0) throw Error(ErrorKind::NotWav, path + ": zero sample rate");

  AudioBuffer audio;
  audio.sample_rate = static_cast<int>(rate);
  std::size_t n = data.size() / 2;
  audio.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int16_t v = static_cast<std::int16_t>(
        read_u16(reinterpret_cast<const unsigned char*>(data.data()) + 2 * i));
    audio.samples[i] = v / 32768.0;
  }
  return audio;
}

void save_wav(const AudioBuffer& audio, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot create " + path);

  std::uint32_t data_bytes = static_cast<std::uint32_t>(audio.samples.size() * 2);
  out.write("RIFF", 4);
  write_u32(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_u32(out, 16);
  write_u16(out, 1);  // PCM
  write_u16(out, 1);  // mono
  write_u32(out, static_cast<std::uint32_t>(audio.sample_rate));
  write_u32(out, static_cast<std::uint32_t>(audio.sample_rate) * 2);
  write_u16(out, 2);   // block align
  write_u16(out, 16);  // bits
  out.write("data", 4);
  write_u32(out, data_bytes);

  for (double s : audio.samples) {
    double c = std::clamp(s, -1.0, 1.0);
    long q = std::lround(c * 32768.0);  // half away from zero
    q = std::clamp(q, -32768L, 32767L);
    write_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
  }
  if (!out) throw Error(ErrorKind::IoError, "write failed: " + path);
}

AudioBuffer trim_or_pad(const AudioBuffer& audio, const TrimMode& mode,
                        std::optional<std::uint64_t> crop_seed) {
  if (audio.samples.empty())
    throw Error(ErrorKind::EmptyAudio, "trim_or_pad on empty buffer");
  if (!(mode.seconds > 0.0))
    throw Error(ErrorKind::BadConfig, "trim duration must be positive");

  const std::size_t n = audio.samples.size();
  std::size_t target = static_cast<std::size_t>(
      std::llround(mode.seconds * audio.sample_rate));

  if (mode.kind == TrimMode::Kind::CapSeconds) {
    if (n <= target) return audio;
    AudioBuffer out;
    out.sample_rate = audio.sample_rate;
    out.samples.assign(audio.samples.begin(), audio.samples.begin() + target);
    return out;
  }

  // FixedSeconds
  AudioBuffer out;
  out.sample_rate = audio.sample_rate;
  out.samples.resize(target);
  if (n >= target) {
    std::size_t offset = 0;
    if (crop_seed && n > target) {
      Rng rng(*crop_seed);
      offset = rng.index(n - target + 1);
    }
    std::copy(audio.samples.begin() + offset,
              audio.samples.begin() + offset + target, out.samples.begin());
  } else {
    for (std::size_t i = 0; i < target; ++i)
      out.samples[i] = audio.samples[i % n];
  }
  return out;
}

}  // namespace spoofkit
