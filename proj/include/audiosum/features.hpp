// include/audiosum/features.hpp

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
#include <array>
#include <span>

#include "audiosum/config.hpp"
#include "audiosum/segmentation.hpp"
#include "audiosum/spectral.hpp"

namespace audiosum {

// 277-entry segment descriptor.  Layout, coefficient-major for
// c in 0..24: min, max, median, mean, variance, skewness, kurtosis of
// phi_c, then mean and variance of phi'_c, then mean and variance of
// phi''_c (11 x 25 = 275); entry 275 is the frame count and entry 276 the
// segment start time in seconds.
using FeatureVector = Eigen::VectorXd;

inline constexpr int kStatsPerCoeff = 11;
inline constexpr int kFeatureDim = 277;

// Flat position of (coefficient, statistic) in the descriptor.
inline int feature_index(int coeff, int stat) {
  return coeff * kStatsPerCoeff + stat;
}

// The 11 per-coefficient statistics: min, max, median, mean, population
// variance, moment skewness and non-excess kurtosis of `series`, then
// mean/variance of `dseries` and of `ddseries`.  Zero-variance series
// yield skewness 0 and kurtosis 0.  Throws on empty input.
std::array<double, kStatsPerCoeff> stats_11(std::span<const double> series,
                                            std::span<const double> dseries,
                                            std::span<const double> ddseries);

// Assembles the descriptor from precomputed cepstra and derivatives.
FeatureVector features_from_mfcc(const MfccMatrix& phi, const MfccMatrix& d1,
                                 const MfccMatrix& d2, double start_time);

// Slices the segment from the original (unseparated) signal, computes
// MFCCs and derivatives, and applies the statistics.  The segment must
// span at least three feature frames.
FeatureVector segment_features(const AudioBuffer& buffer, const Segment& seg,
                               const PipelineConfig& cfg = {});

}  // namespace audiosum
