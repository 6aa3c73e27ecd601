// include/audiosum/separation.hpp

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
#include "audiosum/config.hpp"
#include "audiosum/spectral.hpp"

namespace audiosum {

/// Complementary time-frequency masks: background + foreground = 1
/// pointwise, every entry in [0, 1].
struct MaskPair {
  Eigen::MatrixXd background;
  Eigen::MatrixXd foreground;
};

// Up to n_similar frame indices (always including `frame` itself) ranked
// by cosine similarity of magnitude columns, greedily filtered so every
// returned pair is at least gap_seconds apart.
std::vector<Eigen::Index> similar_frames(const Spectrogram& spec,
                                         Eigen::Index frame,
                                         int n_similar = 100,
                                         double gap_seconds = 2.0);

// Repeating-spectrum estimate: per-frequency median over each frame's
// similar set, clamped by pointwise minimum with the original magnitude.
// Satisfies 0 <= result <= |spec| everywhere.
Eigen::MatrixXd repeating_model(const Spectrogram& spec, int n_similar = 100,
                                double gap_seconds = 2.0);

// Ratio masks: background = model / (|spec| + 1e-10), foreground is the
// exact complement.
MaskPair soft_masks(const Spectrogram& spec, const Eigen::MatrixXd& model);

// Full separation: background/foreground component signals whose sum
// reconstructs the input within 1e-6 relative RMS.
std::pair<AudioBuffer, AudioBuffer> split_channels(const AudioBuffer& buffer,
                                                   const PipelineConfig& cfg = {});

}  // namespace audiosum
