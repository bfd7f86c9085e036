// include/spoofkit/features.h

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

#ifndef SPOOFKIT_FEATURES_H_
#define SPOOFKIT_FEATURES_H_

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "spoofkit/audio.h"

namespace spoofkit {

// Log floor added before every logarithm so silence stays finite.
constexpr double kLogFloor = 1e-10;

enum class FeatureKind : std::uint8_t {
  LogMag = 0,
  Phase = 1,
  LogFbank = 2,
  Mfcc = 3,
  LogCqt = 4,
  Mrp = 5,
};

const char* feature_kind_name(FeatureKind kind);
FeatureKind feature_kind_from_name(const std::string& name);

enum class WindowKind { Hamming, Hanning };

struct StftConfig {
  double frame_len_ms = 50.0;
  double hop_ms = 25.0;
  int fft_size = 1024;
  WindowKind window = WindowKind::Hamming;

  int frame_len_samples(int sample_rate) const;
  int hop_samples(int sample_rate) const;
};

// One-sided spectrogram, bins = fft_size/2 + 1, row-major frames x bins.
struct ComplexSpectrogram {
  int frames = 0;
  int bins = 0;
  int sample_rate = 0;
  int fft_size = 0;
  std::vector<std::complex<double>> values;

  std::complex<double>& at(int t, int k) { return values[static_cast<std::size_t>(t) * bins + k]; }
  const std::complex<double>& at(int t, int k) const {
    return values[static_cast<std::size_t>(t) * bins + k];
  }
};

// frames x dims real matrix.  Values are doubles in memory; the on-disk
// format (see dump_features) narrows to IEEE float32.
struct FeatureMatrix {
  FeatureKind kind = FeatureKind::LogMag;
  int frames = 0;
  int dims = 0;
  std::vector<double> values;
  std::uint64_t config_digest = 0;

  double& at(int t, int d) { return values[static_cast<std::size_t>(t) * dims + d]; }
  double at(int t, int d) const { return values[static_cast<std::size_t>(t) * dims + d]; }
};

// Triangular filters on the mel scale m(f) = 2595*log10(1 + f/700), with
// n_mels+2 breakpoints equally spaced in mel and peak weight 1 at each
// filter's center.  Rows are n_mels x bins.
struct MelFilterbank {
  int n_mels = 0;
  int bins = 0;
  double fmin = 0.0;
  double fmax = 0.0;
  std::vector<double> weights;
  std::vector<double> center_freqs;

  double weight(int m, int k) const { return weights[static_cast<std::size_t>(m) * bins + k]; }
};

struct CqtConfig {
  double fmin = 32.7;
  int bins_per_octave = 12;
  int n_bins = 84;
  double hop_ms = 25.0;
  // window is Hanning by contract
};

struct MrpConfig {
  double base_freq = 1000.0;
  int n_mels = 60;
  StftConfig stft;
};

double mel_of_hz(double f);
double hz_of_mel(double m);

// Frame t covers samples [t*hop, t*hop + frame_len); the window is applied
// and the frame zero-padded to fft_size.  No center padding, so
// frames = 1 + floor((N - frame_len)/hop).  Throws TooShort when the signal
// is shorter than one frame.
ComplexSpectrogram stft(const AudioBuffer& audio, const StftConfig& cfg);

// ln(|X| + eps)
FeatureMatrix log_magnitude(const ComplexSpectrogram& spec);

// Principal-value phase in (-pi, pi]; bins with |X| < eps emit 0.
FeatureMatrix phase(const ComplexSpectrogram& spec);

MelFilterbank mel_matrix(int n_mels, double fmin, double fmax, int fft_size,
                         int sample_rate);

// ln(mel . |X|^2 + eps)
FeatureMatrix log_fbank(const AudioBuffer& audio, const StftConfig& cfg,
                        const MelFilterbank& mel);

// Orthonormal DCT-II of the log-fbank rows, first n_coeffs kept.
FeatureMatrix mfcc(const AudioBuffer& audio, const StftConfig& cfg,
                   const MelFilterbank& mel, int n_coeffs = 23);

// Direct constant-Q transform.  Bin k sits at fmin*2^(k/B) with
// Q = 1/(2^(1/B) - 1); each kernel is a Hann-windowed complex exponential of
// length ceil(Q*rate/f_k), normalized by its length, correlated with the
// signal at the configured hop.  Frames are anchored at t*hop and every
// kernel must fit, so frames = 1 + floor((N - longest_kernel)/hop).
FeatureMatrix log_cqt(const AudioBuffer& audio, const CqtConfig& cfg);

// Precomputed CQT kernels, reusable across utterances of one corpus run.
struct CqtKernels {
  int n_bins = 0;
  int hop = 0;
  int max_len = 0;
  int sample_rate = 0;
  std::vector<double> center_freqs;
  std::vector<int> lengths;
  std::vector<std::vector<double>> cos_part;  // window * cos per bin
  std::vector<std::vector<double>> sin_part;  // window * sin per bin
  std::uint64_t config_digest = 0;
};

CqtKernels make_cqt_kernels(const CqtConfig& cfg, int sample_rate);
FeatureMatrix log_cqt(const AudioBuffer& audio, const CqtKernels& kernels);

// Mel relative phase.  Per frame the STFT phase of every bin is re-anchored
// to the bin nearest base_freq: psi(w) = wrap(theta(w) - (w/w_b)*theta(w_b)).
// cos(psi) and sin(psi) are each pooled with a sum-normalized n_mels-band
// filterbank and concatenated, giving 2*n_mels dims in [-1, 1].
FeatureMatrix mrp(const AudioBuffer& audio, const MrpConfig& cfg);

// "ADSF" dump: magic ADSF, version 1, kind code, 2 reserved zero bytes,
// u32le frames, u32le dims, then frames*dims float32le values row-major.
void dump_features(const FeatureMatrix& f, const std::string& path);
FeatureMatrix load_features(const std::string& path);

// Orthonormal DCT-II matrix, n x n: G[k][i] = s_k cos(pi (2i+1) k / 2n).
std::vector<double> dct2_matrix(int n);

// Digest of an extraction config; stored in FeatureMatrix and model files so
// mismatched features are detectable.
std::uint64_t stft_feature_digest(FeatureKind kind, const StftConfig& cfg,
                                  int sample_rate, int out_dims);
std::uint64_t cqt_digest(const CqtConfig& cfg, int sample_rate);
std::uint64_t mrp_digest(const MrpConfig& cfg, int sample_rate);

}  // namespace spoofkit

#endif  // SPOOFKIT_FEATURES_H_
