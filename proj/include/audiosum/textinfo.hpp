// include/audiosum/textinfo.hpp

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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "audiosum/audio_io.hpp"
#include "audiosum/config.hpp"
#include "audiosum/features.hpp"

namespace audiosum {

/// Smoothing parameters of the divergence: word probabilities are
/// (count + delta) / (tokens + delta * beta) with
/// beta = beta_factor * |source vocabulary|.
struct JsdParams {
  double delta = 0.0005;
  double beta_factor = 1.5;
};

/// Word-occurrence table of a document or segment.  Counts iterate in
/// lexicographic order, which keeps every divergence sum deterministic.
struct TokenDistribution {
  std::map<std::string, long long> counts;
  long long total_tokens = 0;

  static TokenDistribution from_tokens(const std::vector<std::string>& tokens);
  std::size_t vocabulary_size() const { return counts.size(); }
};

struct TimedWord {
  double start_time = 0.0;
  std::string token;
};

/// Time-aligned transcript: one word with its start time, non-decreasing.
struct TimedTranscript {
  std::vector<TimedWord> words;
};

// Lowercases (ASCII), splits on whitespace, strips leading/trailing
// punctuation, drops empty results.  No stemming, no stopword removal.
std::vector<std::string> tokenize(std::string_view text);

// Smoothed probability of `word` under `dist`; beta is derived from the
// source vocabulary size regardless of which side `dist` is.
double smoothed_prob(const TokenDistribution& dist, const std::string& word,
                     const JsdParams& params, std::size_t source_vocab_size);

// Jensen-Shannon divergence between segment and source over the union of
// their vocabularies, base-2 logs, both sides smoothed with beta from the
// source vocabulary.  Non-negative, symmetric, zero iff the smoothed
// distributions coincide.  Throws on an empty source.
double jsd(const TokenDistribution& source, const TokenDistribution& segment,
           const JsdParams& params = {});

// Reads the one-word-per-line transcript format:
// `start_seconds<TAB>token`, `#` lines ignored.
TimedTranscript read_transcript(const std::string& path);

struct TrainingPair {
  FeatureVector features;
  double divergence = 0.0;
};

// Cuts the timeline into consecutive training windows (the trailing
// remainder stands alone when >= 3 s, otherwise it extends the previous
// window), pairs each window's audio features with the divergence of its
// transcript slice against the whole document.  Windows without spoken
// words are skipped.
std::vector<TrainingPair> build_training_pairs(const AudioBuffer& audio,
                                               const TimedTranscript& transcript,
                                               const PipelineConfig& cfg = {});

}  // namespace audiosum
