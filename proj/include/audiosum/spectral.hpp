// include/audiosum/spectral.hpp

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

#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "audiosum/audio_io.hpp"

namespace audiosum {

/// Complex time-frequency matrix.  Column t holds the spectrum of the
/// Hann-windowed frame centered at sample t * hop of the source signal.
struct Spectrogram {
  Eigen::MatrixXcd frames;  // n_bins x n_frames, n_bins = n_fft/2 + 1
  int n_fft = 0;
  int hop = 0;
  int sample_rate = 0;

  Eigen::Index n_bins() const { return frames.rows(); }
  Eigen::Index n_frames() const { return frames.cols(); }
};

/// Cepstral coefficients, one column per frame.
struct MfccMatrix {
  Eigen::MatrixXd coefficients;     // n_mfcc x n_frames
  std::vector<double> frame_times;  // seconds of each frame center

  Eigen::Index n_coeffs() const { return coefficients.rows(); }
  Eigen::Index n_frames() const { return coefficients.cols(); }
};

// Centered STFT with reflect padding and a periodic Hann window.
// n_frames = 1 + floor(len / hop).  Throws if the buffer is shorter than
// one window.
Spectrogram stft(const AudioBuffer& buffer, int n_fft = 2048, int hop = 512);

// Overlap-add inverse with window-square normalization, trimmed to
// `length` samples.  istft(stft(x), len(x)) reconstructs x within 1e-6
// relative RMS.
AudioBuffer istft(const Spectrogram& spec, std::size_t length);

Eigen::MatrixXd magnitude(const Spectrogram& spec);

// Triangular mel filterbank on mel(f) = 2595 log10(1 + f/700), bands
// spanning 0 .. sample_rate/2.  Shape: n_mels x (n_fft/2 + 1).
Eigen::MatrixXd mel_filterbank(int n_mels, int n_fft, int sample_rate);

// Power spectrogram -> 128-band mel filterbank -> log (floor 1e-10) ->
// orthonormal DCT-II, first n_mfcc coefficients kept.
MfccMatrix mfcc(const AudioBuffer& buffer, int n_mfcc = 25, int n_fft = 2048,
                int hop = 512);

// First and second temporal derivatives via the centered difference
// (x[t+1] - x[t-1])/2 with edge replication.  Requires >= 3 frames.
std::pair<MfccMatrix, MfccMatrix> deltas(const MfccMatrix& m);

}  // namespace audiosum
