// src/spectral.cpp

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

#include "audiosum/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "audiosum/config.hpp"

namespace audiosum {

namespace {

// The FFTW planner is not reentrant; plan creation/destruction is
// serialized, execution on private buffers is safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class RealDft {
 public:
  explicit RealDft(int n) : n_(n) {
    real_ = fftw_alloc_real(n);
    complex_ = fftw_alloc_complex(n / 2 + 1);
    std::lock_guard lock(planner_mutex());
    forward_ = fftw_plan_dft_r2c_1d(n, real_, complex_, FFTW_ESTIMATE);
    inverse_ = fftw_plan_dft_c2r_1d(n, complex_, real_, FFTW_ESTIMATE);
  }

  ~RealDft() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(inverse_);
    fftw_free(real_);
    fftw_free(complex_);
  }

  RealDft(const RealDft&) = delete;
  RealDft& operator=(const RealDft&) = delete;

  // real_ -> complex_, n/2+1 bins
  void forward() { fftw_execute(forward_); }
  // complex_ -> real_, unnormalized (caller divides by n)
  void inverse() { fftw_execute(inverse_); }

  double* real() { return real_; }
  fftw_complex* complex_bins() { return complex_; }

 private:
  int n_;
  double* real_;
  fftw_complex* complex_;
  fftw_plan forward_;
  fftw_plan inverse_;
};

std::vector<double> hann_periodic(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * i / n));
  return w;
}

// Reflected index for centered framing, no edge duplication.
std::size_t reflect_index(long long j, std::size_t n) {
  if (j < 0) j = -j;
  if (j >= static_cast<long long>(n)) j = 2 * (static_cast<long long>(n) - 1) - j;
  return static_cast<std::size_t>(j);
}

Eigen::MatrixXd dct_ortho_matrix(int n_out, int n_in) {
  Eigen::MatrixXd d(n_out, n_in);
  const double a0 = std::sqrt(1.0 / n_in);
  const double ak = std::sqrt(2.0 / n_in);
  for (int k = 0; k < n_out; ++k)
    for (int n = 0; n < n_in; ++n)
      d(k, n) = (k == 0 ? a0 : ak) *
                std::cos(std::numbers::pi * k * (2.0 * n + 1.0) / (2.0 * n_in));
  return d;
}

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

}  // namespace

Spectrogram stft(const AudioBuffer& buffer, int n_fft, int hop) {
  if (n_fft <= 0 || hop <= 0 || hop > n_fft)
    throw std::invalid_argument("stft: need 0 < hop <= n_fft");
  const std::size_t len = buffer.samples.size();
  if (len < static_cast<std::size_t>(n_fft))
    throw std::invalid_argument("stft: buffer shorter than one window");

  const int pad = n_fft / 2;
  const auto n_frames = static_cast<Eigen::Index>(1 + len / hop);
  const std::vector<double> window = hann_periodic(n_fft);

  Spectrogram spec;
  spec.n_fft = n_fft;
  spec.hop = hop;
  spec.sample_rate = buffer.sample_rate;
  spec.frames.resize(n_fft / 2 + 1, n_frames);

  RealDft dft(n_fft);
  for (Eigen::Index t = 0; t < n_frames; ++t) {
    const long long start = static_cast<long long>(t) * hop - pad;
    for (int i = 0; i < n_fft; ++i)
      dft.real()[i] = buffer.samples[reflect_index(start + i, len)] * window[i];
    dft.forward();
    for (int k = 0; k <= n_fft / 2; ++k)
      spec.frames(k, t) = {dft.complex_bins()[k][0], dft.complex_bins()[k][1]};
  }
  return spec;
}

AudioBuffer istft(const Spectrogram& spec, std::size_t length) {
  const int n_fft = spec.n_fft;
  const int hop = spec.hop;
  if (n_fft <= 0 || hop <= 0 || hop > n_fft ||
      spec.n_bins() != n_fft / 2 + 1)
    throw std::invalid_argument("istft: inconsistent spectrogram metadata");

  const int pad = n_fft / 2;
  const std::vector<double> window = hann_periodic(n_fft);
  const std::size_t padded = length + 2 * static_cast<std::size_t>(pad);
  std::vector<double> acc(padded, 0.0);
  std::vector<double> norm(padded, 0.0);

  RealDft dft(n_fft);
  for (Eigen::Index t = 0; t < spec.n_frames(); ++t) {
    for (int k = 0; k <= n_fft / 2; ++k) {
      dft.complex_bins()[k][0] = spec.frames(k, t).real();
      dft.complex_bins()[k][1] = spec.frames(k, t).imag();
    }
    dft.inverse();
    const auto start = static_cast<std::size_t>(t) * hop;
    for (int i = 0; i < n_fft; ++i) {
      const std::size_t j = start + i;
      if (j >= padded) break;
      acc[j] += dft.real()[i] / n_fft * window[i];
      norm[j] += window[i] * window[i];
    }
  }

  AudioBuffer out;
  out.sample_rate = spec.sample_rate;
  out.samples.resize(length);
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t j = i + pad;
    out.samples[i] = norm[j] > 1e-12 ? acc[j] / norm[j] : 0.0;
  }
  return out;
}

Eigen::MatrixXd magnitude(const Spectrogram& spec) {
  return spec.frames.cwiseAbs();
}

Eigen::MatrixXd mel_filterbank(int n_mels, int n_fft, int sample_rate) {
  if (n_mels <= 0 || n_fft <= 0 || sample_rate <= 0)
    throw std::invalid_argument("mel_filterbank: non-positive parameter");
  const int n_bins = n_fft / 2 + 1;
  const double mel_max = hz_to_mel(sample_rate / 2.0);

  std::vector<double> corners(n_mels + 2);
  for (int i = 0; i < n_mels + 2; ++i)
    corners[i] = mel_to_hz(mel_max * i / (n_mels + 1));

  Eigen::MatrixXd fb = Eigen::MatrixXd::Zero(n_mels, n_bins);
  for (int b = 0; b < n_mels; ++b) {
    const double lo = corners[b], mid = corners[b + 1], hi = corners[b + 2];
    for (int k = 0; k < n_bins; ++k) {
      const double f = static_cast<double>(k) * sample_rate / n_fft;
      if (f <= lo || f >= hi) continue;
      fb(b, k) = f <= mid ? (f - lo) / std::max(mid - lo, 1e-12)
                          : (hi - f) / std::max(hi - mid, 1e-12);
    }
  }
  return fb;
}

MfccMatrix mfcc(const AudioBuffer& buffer, int n_mfcc, int n_fft, int hop) {
  if (n_mfcc <= 0 || n_mfcc > kMelBands)
    throw std::invalid_argument("mfcc: n_mfcc out of range");
  const Spectrogram spec = stft(buffer, n_fft, hop);
  const Eigen::MatrixXd power = magnitude(spec).array().square();
  const Eigen::MatrixXd fb = mel_filterbank(kMelBands, n_fft, buffer.sample_rate);
  Eigen::MatrixXd mel = fb * power;
  mel = mel.cwiseMax(kLogFloor).array().log().matrix();

  MfccMatrix out;
  out.coefficients = dct_ortho_matrix(n_mfcc, kMelBands) * mel;
  out.frame_times.resize(static_cast<std::size_t>(spec.n_frames()));
  for (Eigen::Index t = 0; t < spec.n_frames(); ++t)
    out.frame_times[static_cast<std::size_t>(t)] =
        static_cast<double>(t) * hop / buffer.sample_rate;
  return out;
}

std::pair<MfccMatrix, MfccMatrix> deltas(const MfccMatrix& m) {
  const Eigen::Index T = m.n_frames();
  if (T < 3) throw std::invalid_argument("deltas: need at least 3 frames");

  auto centered = [](const Eigen::MatrixXd& x) {
    const Eigen::Index n = x.cols();
    Eigen::MatrixXd d(x.rows(), n);
    for (Eigen::Index t = 0; t < n; ++t) {
      const Eigen::Index prev = t > 0 ? t - 1 : 0;        // edge replication
      const Eigen::Index next = t < n - 1 ? t + 1 : n - 1;
      d.col(t) = (x.col(next) - x.col(prev)) / 2.0;
    }
    return d;
  };

  MfccMatrix d1{centered(m.coefficients), m.frame_times};
  MfccMatrix d2{centered(d1.coefficients), m.frame_times};
  return {std::move(d1), std::move(d2)};
}

}  // namespace audiosum
