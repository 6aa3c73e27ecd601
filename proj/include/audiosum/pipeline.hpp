// include/audiosum/pipeline.hpp

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
#include "audiosum/config.hpp"
#include "audiosum/model.hpp"
#include "audiosum/summarizer.hpp"

namespace audiosum {

/// Outcome of a training run over a corpus manifest.
struct TrainingReport {
  std::size_t files_total = 0;
  std::size_t files_used = 0;
  std::size_t rows = 0;
  std::size_t windows_skipped = 0;  // windows without spoken words
  double training_rmse = 0.0;
  bool ridge_applied = false;
  std::vector<std::string> line_errors;  // one entry per unusable manifest line
};

// Builds training pairs for every `audio<TAB>transcript` line of the
// manifest (bad lines are reported and skipped), fits the model and
// writes it to model_out.  Throws when no usable pair remains.
TrainingReport train_from_manifest(const std::string& manifest_path,
                                   const std::string& model_out,
                                   const PipelineConfig& cfg = {});

/// Everything the summarization of one buffer produces.
struct SummaryResult {
  SegmentationPlan plan;
  std::vector<ScoredSegment> scored;
  std::vector<Segment> selected;
  AudioBuffer summary;
  double theta = 0.0;
  double source_duration = 0.0;
};

// Full summarization pass: separation, background MFCCs, clustering into
// k = target_k(duration) segments, per-segment features on the original
// signal, informativeness prediction, scoring, selection, assembly.
SummaryResult summarize_buffer(const AudioBuffer& buffer,
                               const RegressionModel& model,
                               const PipelineConfig& cfg = {});

ManifestInfo manifest_info(const SummaryResult& result,
                           const std::string& source_path,
                           const std::string& model_path);

}  // namespace audiosum
