// include/audiosum/config.hpp

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

#include <string>

namespace audiosum {

/// Parameters shared by every stage of the pipeline.  Overriding n_mfcc
/// changes the feature layout and invalidates previously trained models;
/// the mismatch is caught through the config echo stored in model files.
struct PipelineConfig {
  int sample_rate = 22050;          // canonical mono rate, Hz
  int n_fft = 2048;                 // analysis window, samples
  int hop = 512;                    // hop length, samples
  int n_mfcc = 25;                  // cepstral coefficients kept per frame
  double segment_length_train = 10.0;  // training window, seconds
  double ratio = 0.35;              // summary budget as fraction of source
  int n_similar = 100;              // neighbour frames for the repeating model
  double separation_gap = 2.0;      // minimum spacing of similar frames, seconds

  // Throws std::invalid_argument on any non-positive field or ratio >= 1.
  void validate() const;
};

inline constexpr int kMelBands = 128;
inline constexpr double kLogFloor = 1e-10;
inline constexpr int kModelSchemaVersion = 1;

}  // namespace audiosum
