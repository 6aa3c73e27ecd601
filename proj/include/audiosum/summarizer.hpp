// include/audiosum/summarizer.hpp

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

#include "audiosum/audio_io.hpp"
#include "audiosum/segmentation.hpp"

namespace audiosum {

/// Candidate segment with its predicted informativeness and pertinence
/// score.
struct ScoredSegment {
  Segment segment;
  double lr = 0.0;     // predicted divergence
  double score = 0.0;  // pertinence
  int n_frames = 0;    // feature frames inside the segment
  bool selected = false;
};

/// Summary budget: theta seconds = ratio x source duration.
struct SummarySpec {
  double ratio = 0.35;
  double theta = 0.0;
};

// Pertinence of a segment: sigmoid of (duration - 5) x duration share of
// the source x exponential decay in start time (scaled by duration) x
// e^(1 - lr).  The informativeness prediction enters unclamped.
double score_segment(const Segment& seg, double lr, double source_duration);

// Admission by descending score (ties toward the earlier start): a
// segment enters iff the admitted total plus its duration stays within
// theta; scanning continues past segments that do not fit.  Flags are set
// on `scored`; the admitted segments are returned chronologically.
std::vector<Segment> select_segments(std::vector<ScoredSegment>& scored,
                                     double theta);

// Concatenates the chronological sample ranges with a 10 ms linear
// crossfade at each join.  Throws on out-of-bounds or overlapping
// segments.
AudioBuffer assemble_summary(const AudioBuffer& source,
                             const std::vector<Segment>& selected);

/// Header fields echoed at the top of a summary manifest.
struct ManifestInfo {
  std::string source_path;
  double source_duration = 0.0;
  int k = 0;
  double theta = 0.0;
  double ratio = 0.0;
  std::string model_path;
  int schema_version = 1;
  double mean_segment_length = 0.0;
};

// Deterministic text manifest: header plus one line per candidate segment
// (index, start, end, duration, n_frames, lr, score, selected).  Warns in
// the header when nothing fit the budget.
std::string render_manifest(const ManifestInfo& info,
                            const std::vector<ScoredSegment>& scored);

// Standalone SVG bar chart: one bar per segment along the timeline, bar
// height proportional to score, selected segments filled dark.
std::string render_score_svg(const std::vector<ScoredSegment>& scored,
                             double source_duration);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace audiosum
