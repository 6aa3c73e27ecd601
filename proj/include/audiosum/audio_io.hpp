// include/audiosum/audio_io.hpp

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
#include <vector>

namespace audiosum {

/// Mono sample sequence with amplitudes in [-1, 1].
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate = 0;

  double duration_seconds() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// Reads a RIFF/WAVE file (PCM 8/16/24/32-bit integer or 32-bit float, any
// channel count, any rate), averages channels to mono and resamples to
// canonical_rate.  Throws std::runtime_error on missing, malformed or
// zero-length files.
AudioBuffer read_wav(const std::string& path, int canonical_rate = 22050);

// Linear-interpolation resampler.  Identity when target_rate matches the
// buffer rate; output duration equals input duration within one sample
// period.
AudioBuffer resample(const AudioBuffer& in, int target_rate);

// Writes a 16-bit PCM mono WAV.  read_wav(write_wav(b)) at the same rate
// reproduces samples within one quantization step (2^-15).
void write_wav(const AudioBuffer& buf, const std::string& path);

}  // namespace audiosum
