// include/audiosum/segmentation.hpp

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

#include <cstdint>
#include <vector>

#include "audiosum/spectral.hpp"

namespace audiosum {

/// Half-open time interval [start_time, end_time) with its ordinal
/// position in the plan.
struct Segment {
  double start_time = 0.0;
  double end_time = 0.0;
  int index = 0;

  double duration() const { return end_time - start_time; }
};

/// Contiguous, exhaustive, non-overlapping partition of [0, duration).
struct SegmentationPlan {
  int k = 0;
  std::vector<Segment> segments;
};

// Segment count for a stream of the given length: one segment per three
// seconds, floored at 2 and optionally capped at max_k (the number of
// feature frames available).  Throws on non-positive duration.
int target_k(double duration_seconds, std::int64_t max_k = -1);

// Bottom-up clustering of per-frame feature vectors where only temporally
// adjacent clusters may merge; the pair with the smallest Ward variance
// increase merges first (ties resolved toward the earliest pair) until k
// clusters remain.  Boundaries are placed midway between the last and
// first frame centers of adjacent clusters.
SegmentationPlan cluster_segments(const MfccMatrix& features, int k,
                                  double total_duration);

}  // namespace audiosum
