// src/separation.cpp

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

#include "audiosum/separation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace audiosum {

namespace {

constexpr double kMaskEpsilon = 1e-10;

Eigen::Index gap_frames(double gap_seconds, int sample_rate, int hop) {
  return static_cast<Eigen::Index>(
      std::ceil(gap_seconds * sample_rate / hop));
}

// Greedy gap-constrained pick from one similarity column.  The query is
// admitted first; the rest follow in (similarity desc, index asc) order,
// each kept only when at least `gap` frames from everything already kept.
std::vector<Eigen::Index> select_similar(const Eigen::VectorXd& sims,
                                         Eigen::Index query, int n_similar,
                                         Eigen::Index gap) {
  const Eigen::Index n = sims.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (sims[a] != sims[b]) return sims[a] > sims[b];
    return a < b;
  });

  std::vector<Eigen::Index> kept;
  kept.reserve(static_cast<std::size_t>(n_similar));
  kept.push_back(query);
  for (Eigen::Index cand : order) {
    if (static_cast<int>(kept.size()) >= n_similar) break;
    bool spaced = true;
    for (Eigen::Index k : kept) {
      if (std::abs(cand - k) < gap) {
        spaced = false;
        break;
      }
    }
    if (spaced) kept.push_back(cand);
  }
  return kept;
}

// Column-normalized copy; zero columns stay zero so silent frames have
// similarity 0 with everything.
Eigen::MatrixXd normalize_columns(const Eigen::MatrixXd& mag) {
  Eigen::MatrixXd unit = mag;
  for (Eigen::Index t = 0; t < unit.cols(); ++t) {
    const double norm = unit.col(t).norm();
    if (norm > 0.0) unit.col(t) /= norm;
  }
  return unit;
}

double median_of(std::vector<double>& v) {
  const std::size_t n = v.size();
  const std::size_t mid = n / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  double hi = v[mid];
  if (n % 2 == 1) return hi;
  double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return (lo + hi) / 2.0;
}

}  // namespace

std::vector<Eigen::Index> similar_frames(const Spectrogram& spec,
                                         Eigen::Index frame, int n_similar,
                                         double gap_seconds) {
  if (frame < 0 || frame >= spec.n_frames())
    throw std::out_of_range("similar_frames: frame index out of range");
  if (n_similar <= 0)
    throw std::invalid_argument("similar_frames: n_similar must be positive");

  const Eigen::MatrixXd unit = normalize_columns(magnitude(spec));
  const Eigen::VectorXd sims = unit.transpose() * unit.col(frame);
  return select_similar(sims, frame, n_similar,
                        gap_frames(gap_seconds, spec.sample_rate, spec.hop));
}

Eigen::MatrixXd repeating_model(const Spectrogram& spec, int n_similar,
                                double gap_seconds) {
  if (n_similar <= 0)
    throw std::invalid_argument("repeating_model: n_similar must be positive");
  const Eigen::MatrixXd mag = magnitude(spec);
  const Eigen::MatrixXd unit = normalize_columns(mag);
  const Eigen::Index n_bins = mag.rows();
  const Eigen::Index n = mag.cols();
  const Eigen::Index gap = gap_frames(gap_seconds, spec.sample_rate, spec.hop);

  Eigen::MatrixXd model(n_bins, n);
  std::vector<double> scratch;

  // Similarities are evaluated in column blocks; the full gram matrix of
  // a long recording does not fit in memory.
  constexpr Eigen::Index kBlock = 256;
  for (Eigen::Index t0 = 0; t0 < n; t0 += kBlock) {
    const Eigen::Index width = std::min(kBlock, n - t0);
    const Eigen::MatrixXd sims_block =
        unit.transpose() * unit.middleCols(t0, width);
    for (Eigen::Index j = 0; j < width; ++j) {
      const Eigen::Index t = t0 + j;
      const std::vector<Eigen::Index> kept =
          select_similar(sims_block.col(j), t, n_similar, gap);
      for (Eigen::Index b = 0; b < n_bins; ++b) {
        scratch.clear();
        for (Eigen::Index k : kept) scratch.push_back(mag(b, k));
        model(b, t) = std::min(median_of(scratch), mag(b, t));
      }
    }
  }
  return model;
}

MaskPair soft_masks(const Spectrogram& spec, const Eigen::MatrixXd& model) {
  if (model.rows() != spec.n_bins() || model.cols() != spec.n_frames())
    throw std::invalid_argument("soft_masks: model/spectrogram shape mismatch");
  MaskPair masks;
  masks.background =
      (model.array() / (magnitude(spec).array() + kMaskEpsilon)).matrix();
  masks.foreground = (1.0 - masks.background.array()).matrix();
  return masks;
}

std::pair<AudioBuffer, AudioBuffer> split_channels(const AudioBuffer& buffer,
                                                   const PipelineConfig& cfg) {
  cfg.validate();
  const Spectrogram spec = stft(buffer, cfg.n_fft, cfg.hop);
  const Eigen::MatrixXd model =
      repeating_model(spec, cfg.n_similar, cfg.separation_gap);
  const MaskPair masks = soft_masks(spec, model);

  auto apply = [&](const Eigen::MatrixXd& mask) {
    Spectrogram masked = spec;
    masked.frames = spec.frames.cwiseProduct(
        mask.cast<std::complex<double>>());
    return istft(masked, buffer.samples.size());
  };
  return {apply(masks.background), apply(masks.foreground)};
}

}  // namespace audiosum
