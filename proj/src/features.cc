// src/features.cc

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

#include "spoofkit/features.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spoofkit/error.h"
#include "spoofkit/rng.h"

namespace spoofkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey, in place.  fft_size is a power of two by
// config invariant, so no mixed-radix stages are needed.
void fft_inplace(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * kPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<double> u = a[i + j];
        std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<double> make_window(WindowKind kind, int len) {
  std::vector<double> w(len, 1.0);
  if (len < 2) return w;
  for (int i = 0; i < len; ++i) {
    double c = std::cos(2.0 * kPi * i / (len - 1));
    w[i] = kind == WindowKind::Hamming ? 0.54 - 0.46 * c : 0.5 - 0.5 * c;
  }
  return w;
}

double principal_phase(const std::complex<double>& z) {
  if (std::abs(z) < kLogFloor) return 0.0;
  double p = std::atan2(z.imag(), z.real());
  if (p <= -kPi) p = kPi;  // (-pi, pi]
  return p;
}

double wrap_phase(double x) {
  double y = std::remainder(x, 2.0 * kPi);
  if (y <= -kPi) y += 2.0 * kPi;
  return y;
}

void write_u32le(std::ostream& os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t read_u32le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

}  // namespace

const char* feature_kind_name(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::LogMag: return "logmag";
    case FeatureKind::Phase: return "phase";
    case FeatureKind::LogFbank: return "logfbank";
    case FeatureKind::Mfcc: return "mfcc";
    case FeatureKind::LogCqt: return "logcqt";
    case FeatureKind::Mrp: return "mrp";
  }
  return "unknown";
}

FeatureKind feature_kind_from_name(const std::string& name) {
  if (name == "logmag") return FeatureKind::LogMag;
  if (name == "phase") return FeatureKind::Phase;
  if (name == "logfbank") return FeatureKind::LogFbank;
  if (name == "mfcc") return FeatureKind::Mfcc;
  if (name == "logcqt") return FeatureKind::LogCqt;
  if (name == "mrp") return FeatureKind::Mrp;
  throw Error(ErrorKind::BadConfig, "unknown feature kind: " + name);
}

int StftConfig::frame_len_samples(int sample_rate) const {
  return static_cast<int>(std::llround(frame_len_ms * sample_rate / 1000.0));
}

int StftConfig::hop_samples(int sample_rate) const {
  return static_cast<int>(std::llround(hop_ms * sample_rate / 1000.0));
}

double mel_of_hz(double f) { return 2595.0 * std::log10(1.0 + f / 700.0); }

double hz_of_mel(double m) { return 700.0 * (std::pow(10.0, m / 2595.0) - 1.0); }

ComplexSpectrogram stft(const AudioBuffer& audio, const StftConfig& cfg) {
  const int rate = audio.sample_rate;
  const int frame_len = cfg.frame_len_samples(rate);
  const int hop = cfg.hop_samples(rate);

  if (hop <= 0 || frame_len <= 0)
    throw Error(ErrorKind::BadConfig, "frame and hop must be positive");
  if (!is_power_of_two(cfg.fft_size))
    throw Error(ErrorKind::BadConfig, "fft_size must be a power of two");
  if (cfg.fft_size < frame_len)
    throw Error(ErrorKind::BadConfig, "fft_size smaller than frame length");
  if (static_cast<int>(audio.samples.size()) < frame_len)
    throw Error(ErrorKind::TooShort,
                "audio shorter than one frame (" + std::to_string(audio.samples.size()) +
                    " < " + std::to_string(frame_len) + ")");

  const int n = static_cast<int>(audio.samples.size());
  const int frames = 1 + (n - frame_len) / hop;
  const int bins = cfg.fft_size / 2 + 1;
  const std::vector<double> window = make_window(cfg.window, frame_len);

  ComplexSpectrogram spec;
  spec.frames = frames;
  spec.bins = bins;
  spec.sample_rate = rate;
  spec.fft_size = cfg.fft_size;
  spec.values.resize(static_cast<std::size_t>(frames) * bins);

  // Frames are independent; each writes its own row.
#pragma omp parallel for schedule(static)
  for (int t = 0; t < frames; ++t) {
    std::vector<std::complex<double>> buf(cfg.fft_size, {0.0, 0.0});
    const double* x = audio.samples.data() + static_cast<std::size_t>(t) * hop;
    for (int i = 0; i < frame_len; ++i) buf[i] = x[i] * window[i];
    fft_inplace(buf);
    std::complex<double>* row = spec.values.data() + static_cast<std::size_t>(t) * bins;
    for (int k = 0; k < bins; ++k) row[k] = buf[k];
  }
  return spec;
}

FeatureMatrix log_magnitude(const ComplexSpectrogram& spec) {
  FeatureMatrix f;
  f.kind = FeatureKind::LogMag;
  f.frames = spec.frames;
  f.dims = spec.bins;
  f.values.resize(spec.values.size());
  for (std::size_t i = 0; i < spec.values.size(); ++i)
    f.values[i] = std::log(std::abs(spec.values[i]) + kLogFloor);
  return f;
}

FeatureMatrix phase(const ComplexSpectrogram& spec) {
  FeatureMatrix f;
  f.kind = FeatureKind::Phase;
  f.frames = spec.frames;
  f.dims = spec.bins;
  f.values.resize(spec.values.size());
  for (std::size_t i = 0; i < spec.values.size(); ++i)
    f.values[i] = principal_phase(spec.values[i]);
  return f;
}

MelFilterbank mel_matrix(int n_mels, double fmin, double fmax, int fft_size,
                         int sample_rate) {
  if (n_mels <= 0) throw Error(ErrorKind::BadConfig, "n_mels must be positive");
  if (!(fmin >= 0.0 && fmin < fmax && fmax <= sample_rate / 2.0))
    throw Error(ErrorKind::BadConfig, "need 0 <= fmin < fmax <= nyquist");

  const int bins = fft_size / 2 + 1;
  const double bin_hz = static_cast<double>(sample_rate) / fft_size;
  const double mlo = mel_of_hz(fmin);
  const double mhi = mel_of_hz(fmax);

  std::vector<double> edges(n_mels + 2);
  for (int j = 0; j < n_mels + 2; ++j)
    edges[j] = hz_of_mel(mlo + (mhi - mlo) * j / (n_mels + 1));

  MelFilterbank fb;
  fb.n_mels = n_mels;
  fb.bins = bins;
  fb.fmin = fmin;
  fb.fmax = fmax;
  fb.weights.assign(static_cast<std::size_t>(n_mels) * bins, 0.0);
  fb.center_freqs.resize(n_mels);

  for (int m = 0; m < n_mels; ++m) {
    const double fl = edges[m], fc = edges[m + 1], fr = edges[m + 2];
    fb.center_freqs[m] = fc;
    bool any_positive = false;
    for (int k = 0; k < bins; ++k) {
      const double f = k * bin_hz;
      double w = 0.0;
      if (f >= fl && f <= fc)
        w = (f - fl) / (fc - fl);
      else if (f > fc && f <= fr)
        w = (fr - f) / (fr - fc);
      fb.weights[static_cast<std::size_t>(m) * bins + k] = w;
      if (w > 0.0) any_positive = true;
    }
    if (!any_positive)
      throw Error(ErrorKind::DegenerateFilter,
                  "filter " + std::to_string(m) + " covers no FFT bin at " +
                      std::to_string(bin_hz) + " Hz resolution");
  }
  return fb;
}

FeatureMatrix log_fbank(const AudioBuffer& audio, const StftConfig& cfg,
                        const MelFilterbank& mel) {
  const ComplexSpectrogram spec = stft(audio, cfg);
  if (mel.bins != spec.bins)
    throw Error(ErrorKind::ShapeMismatch, "mel bank built for different fft size");

  FeatureMatrix f;
  f.kind = FeatureKind::LogFbank;
  f.frames = spec.frames;
  f.dims = mel.n_mels;
  f.values.resize(static_cast<std::size_t>(spec.frames) * mel.n_mels);
  f.config_digest = stft_feature_digest(FeatureKind::LogFbank, cfg,
                                        audio.sample_rate, mel.n_mels);

#pragma omp parallel for schedule(static)
  for (int t = 0; t < spec.frames; ++t) {
    std::vector<double> power(spec.bins);
    for (int k = 0; k < spec.bins; ++k) power[k] = std::norm(spec.at(t, k));
    for (int m = 0; m < mel.n_mels; ++m) {
      double acc = 0.0;
      const double* w = mel.weights.data() + static_cast<std::size_t>(m) * mel.bins;
      for (int k = 0; k < spec.bins; ++k) acc += w[k] * power[k];
      f.at(t, m) = std::log(acc + kLogFloor);
    }
  }
  return f;
}

FeatureMatrix mfcc(const AudioBuffer& audio, const StftConfig& cfg,
                   const MelFilterbank& mel, int n_coeffs) {
  if (n_coeffs <= 0 || n_coeffs > mel.n_mels)
    throw Error(ErrorKind::BadConfig, "need 0 < n_coeffs <= n_mels");

  const FeatureMatrix lf = log_fbank(audio, cfg, mel);
  const std::vector<double> dct = dct2_matrix(mel.n_mels);

  FeatureMatrix f;
  f.kind = FeatureKind::Mfcc;
  f.frames = lf.frames;
  f.dims = n_coeffs;
  f.values.resize(static_cast<std::size_t>(lf.frames) * n_coeffs);
  f.config_digest =
      stft_feature_digest(FeatureKind::Mfcc, cfg, audio.sample_rate, n_coeffs);

#pragma omp parallel for schedule(static)
  for (int t = 0; t < lf.frames; ++t) {
    for (int c = 0; c < n_coeffs; ++c) {
      double acc = 0.0;
      const double* g = dct.data() + static_cast<std::size_t>(c) * mel.n_mels;
      for (int m = 0; m < mel.n_mels; ++m) acc += g[m] * lf.at(t, m);
      f.at(t, c) = acc;
    }
  }
  return f;
}

CqtKernels make_cqt_kernels(const CqtConfig& cfg, int sample_rate) {
  if (cfg.n_bins <= 0 || cfg.bins_per_octave <= 0 || cfg.fmin <= 0.0)
    throw Error(ErrorKind::BadConfig, "bad CQT config");
  const double top =
      cfg.fmin * std::pow(2.0, static_cast<double>(cfg.n_bins - 1) / cfg.bins_per_octave);
  if (top > sample_rate / 2.0)
    throw Error(ErrorKind::BadConfig, "top CQT bin above Nyquist");

  const double q = 1.0 / (std::pow(2.0, 1.0 / cfg.bins_per_octave) - 1.0);

  CqtKernels ker;
  ker.n_bins = cfg.n_bins;
  ker.sample_rate = sample_rate;
  ker.hop = static_cast<int>(std::llround(cfg.hop_ms * sample_rate / 1000.0));
  if (ker.hop <= 0) throw Error(ErrorKind::BadConfig, "hop must be positive");
  ker.center_freqs.resize(cfg.n_bins);
  ker.lengths.resize(cfg.n_bins);
  ker.cos_part.resize(cfg.n_bins);
  ker.sin_part.resize(cfg.n_bins);
  ker.config_digest = cqt_digest(cfg, sample_rate);

  for (int k = 0; k < cfg.n_bins; ++k) {
    const double fk =
        cfg.fmin * std::pow(2.0, static_cast<double>(k) / cfg.bins_per_octave);
    const int len = static_cast<int>(std::ceil(q * sample_rate / fk));
    ker.center_freqs[k] = fk;
    ker.lengths[k] = len;
    ker.max_len = std::max(ker.max_len, len);
    const std::vector<double> win = make_window(WindowKind::Hanning, len);
    ker.cos_part[k].resize(len);
    ker.sin_part[k].resize(len);
    for (int i = 0; i < len; ++i) {
      const double ang = 2.0 * kPi * fk * i / sample_rate;
      ker.cos_part[k][i] = win[i] * std::cos(ang) / len;
      ker.sin_part[k][i] = win[i] * std::sin(ang) / len;
    }
  }
  return ker;
}

FeatureMatrix log_cqt(const AudioBuffer& audio, const CqtKernels& ker) {
  if (audio.sample_rate != ker.sample_rate)
    throw Error(ErrorKind::RateMismatch, "kernels built for different rate");
  const int n = static_cast<int>(audio.samples.size());
  if (n < ker.max_len)
    throw Error(ErrorKind::TooShort,
                "audio shorter than longest CQT kernel (" + std::to_string(n) + " < " +
                    std::to_string(ker.max_len) + ")");

  const int frames = 1 + (n - ker.max_len) / ker.hop;

  FeatureMatrix f;
  f.kind = FeatureKind::LogCqt;
  f.frames = frames;
  f.dims = ker.n_bins;
  f.values.resize(static_cast<std::size_t>(frames) * ker.n_bins);
  f.config_digest = ker.config_digest;

#pragma omp parallel for schedule(static)
  for (int t = 0; t < frames; ++t) {
    const double* x = audio.samples.data() + static_cast<std::size_t>(t) * ker.hop;
    for (int k = 0; k < ker.n_bins; ++k) {
      const int len = ker.lengths[k];
      const double* cs = ker.cos_part[k].data();
      const double* sn = ker.sin_part[k].data();
      double re = 0.0, im = 0.0;
      for (int i = 0; i < len; ++i) {
        re += x[i] * cs[i];
        im += x[i] * sn[i];
      }
      f.at(t, k) = std::log(std::sqrt(re * re + im * im) + kLogFloor);
    }
  }
  return f;
}

FeatureMatrix log_cqt(const AudioBuffer& audio, const CqtConfig& cfg) {
  return log_cqt(audio, make_cqt_kernels(cfg, audio.sample_rate));
}

FeatureMatrix mrp(const AudioBuffer& audio, const MrpConfig& cfg) {
  const ComplexSpectrogram spec = stft(audio, cfg.stft);
  const int rate = audio.sample_rate;
  const double bin_hz = static_cast<double>(rate) / cfg.stft.fft_size;
  const int base_bin = static_cast<int>(std::llround(cfg.base_freq / bin_hz));
  if (base_bin < 1 || base_bin >= spec.bins)
    throw Error(ErrorKind::BadConfig, "base_freq does not map to a usable STFT bin");

  MelFilterbank fb = mel_matrix(cfg.n_mels, 0.0, rate / 2.0, cfg.stft.fft_size, rate);
  // sum-normalize each row so pooled cos/sin stay in [-1, 1]
  for (int m = 0; m < fb.n_mels; ++m) {
    double s = 0.0;
    for (int k = 0; k < fb.bins; ++k) s += fb.weight(m, k);
    for (int k = 0; k < fb.bins; ++k)
      fb.weights[static_cast<std::size_t>(m) * fb.bins + k] /= s;
  }

  FeatureMatrix f;
  f.kind = FeatureKind::Mrp;
  f.frames = spec.frames;
  f.dims = 2 * cfg.n_mels;
  f.values.resize(static_cast<std::size_t>(spec.frames) * f.dims);
  f.config_digest = mrp_digest(cfg, rate);

#pragma omp parallel for schedule(static)
  for (int t = 0; t < spec.frames; ++t) {
    std::vector<double> cos_psi(spec.bins), sin_psi(spec.bins);
    const double theta_base = principal_phase(spec.at(t, base_bin));
    for (int k = 0; k < spec.bins; ++k) {
      const double theta = principal_phase(spec.at(t, k));
      const double psi =
          wrap_phase(theta - (static_cast<double>(k) / base_bin) * theta_base);
      cos_psi[k] = std::cos(psi);
      sin_psi[k] = std::sin(psi);
    }
    for (int m = 0; m < cfg.n_mels; ++m) {
      const double* w = fb.weights.data() + static_cast<std::size_t>(m) * fb.bins;
      double ac = 0.0, as = 0.0;
      for (int k = 0; k < spec.bins; ++k) {
        ac += w[k] * cos_psi[k];
        as += w[k] * sin_psi[k];
      }
      f.at(t, m) = ac;
      f.at(t, cfg.n_mels + m) = as;
    }
  }
  return f;
}

std::vector<double> dct2_matrix(int n) {
  std::vector<double> g(static_cast<std::size_t>(n) * n);
  const double s0 = std::sqrt(1.0 / n);
  const double sk = std::sqrt(2.0 / n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      g[static_cast<std::size_t>(k) * n + i] =
          (k == 0 ? s0 : sk) * std::cos(kPi * (2.0 * i + 1.0) * k / (2.0 * n));
  return g;
}

void dump_features(const FeatureMatrix& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot create " + path);

  out.write("ADSF", 4);
  const unsigned char ver_kind[4] = {1, static_cast<unsigned char>(f.kind), 0, 0};
  out.write(reinterpret_cast<const char*>(ver_kind), 4);
  write_u32le(out, static_cast<std::uint32_t>(f.frames));
  write_u32le(out, static_cast<std::uint32_t>(f.dims));

  std::vector<unsigned char> buf(f.values.size() * 4);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const float v = static_cast<float>(f.values[i]);
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    buf[4 * i + 0] = static_cast<unsigned char>(bits & 0xff);
    buf[4 * i + 1] = static_cast<unsigned char>((bits >> 8) & 0xff);
    buf[4 * i + 2] = static_cast<unsigned char>((bits >> 16) & 0xff);
    buf[4 * i + 3] = static_cast<unsigned char>((bits >> 24) & 0xff);
  }
  out.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size()));
  if (!out) throw Error(ErrorKind::IoError, "write failed: " + path);
}

FeatureMatrix load_features(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);

  unsigned char hdr[16];
  if (!in.read(reinterpret_cast<char*>(hdr), 16))
    throw Error(ErrorKind::BadMagic, path + ": truncated header");
  if (std::memcmp(hdr, "ADSF", 4) != 0)
    throw Error(ErrorKind::BadMagic, path + ": bad magic");
  if (hdr[4] != 1) throw Error(ErrorKind::BadMagic, path + ": bad version");
  if (hdr[5] > 5) throw Error(ErrorKind::BadMagic, path + ": bad kind code");

  FeatureMatrix f;
  f.kind = static_cast<FeatureKind>(hdr[5]);
  f.frames = static_cast<int>(read_u32le(hdr + 8));
  f.dims = static_cast<int>(read_u32le(hdr + 12));

  const std::size_t count = static_cast<std::size_t>(f.frames) * f.dims;
  std::vector<unsigned char> buf(count * 4);
  if (!in.read(reinterpret_cast<char*>(buf.data()),
               static_cast<std::streamsize>(buf.size())))
    throw Error(ErrorKind::ShapeMismatch,
                path + ": file shorter than header promises");

  f.values.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t bits = read_u32le(buf.data() + 4 * i);
    float v;
    std::memcpy(&v, &bits, 4);
    f.values[i] = v;
  }
  return f;
}

std::uint64_t stft_feature_digest(FeatureKind kind, const StftConfig& cfg,
                                  int sample_rate, int out_dims) {
  std::ostringstream os;
  os << feature_kind_name(kind) << "|rate=" << sample_rate
     << "|frame_ms=" << cfg.frame_len_ms << "|hop_ms=" << cfg.hop_ms
     << "|fft=" << cfg.fft_size
     << "|win=" << (cfg.window == WindowKind::Hamming ? "hamming" : "hanning")
     << "|dims=" << out_dims;
  return fnv1a(os.str());
}

std::uint64_t cqt_digest(const CqtConfig& cfg, int sample_rate) {
  std::ostringstream os;
  os << "logcqt|rate=" << sample_rate << "|fmin=" << cfg.fmin
     << "|bpo=" << cfg.bins_per_octave << "|bins=" << cfg.n_bins
     << "|hop_ms=" << cfg.hop_ms;
  return fnv1a(os.str());
}

std::uint64_t mrp_digest(const MrpConfig& cfg, int sample_rate) {
  std::ostringstream os;
  os << "mrp|rate=" << sample_rate << "|base=" << cfg.base_freq
     << "|nmels=" << cfg.n_mels << "|frame_ms=" << cfg.stft.frame_len_ms
     << "|hop_ms=" << cfg.stft.hop_ms << "|fft=" << cfg.stft.fft_size;
  return fnv1a(os.str());
}

}  // namespace spoofkit
