// include/audiosum/model.hpp

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
#include <string>
#include <vector>

#include "audiosum/config.hpp"
#include "audiosum/textinfo.hpp"

namespace audiosum {

/// Pipeline parameters a model was trained under, stored alongside the
/// weights so stale models are detected at load time.
struct ConfigEcho {
  int sample_rate = 22050;
  int n_fft = 2048;
  int hop = 512;
  int n_mfcc = 25;
  double segment_length = 10.0;

  bool operator==(const ConfigEcho&) const = default;
};

/// Affine predictor on z-scored features:
/// prediction = weights . ((x - means) / scales) + intercept.
struct RegressionModel {
  Eigen::VectorXd weights;
  double intercept = 0.0;
  Eigen::VectorXd feature_means;
  Eigen::VectorXd feature_scales;  // > 0; zero-variance columns get 1
  int schema_version = kModelSchemaVersion;
  bool ridge_applied = false;
  double training_rmse = 0.0;
  ConfigEcho config;
};

// Least-squares fit of the rows.  Columns are z-scored (zero-variance
// columns are excluded and weighted 0); the standardized system is solved
// by column-pivoted Householder QR, falling back to ridge damping
// lambda = 1e-8 * trace(A^T A) / n_features when rank deficient.
// Requires at least 2 rows and finite values throughout.
RegressionModel fit(const std::vector<TrainingPair>& rows,
                    const ConfigEcho& config = {});

// Affine evaluation.  Throws on wrong dimensionality or non-finite input.
double predict(const RegressionModel& model, const Eigen::VectorXd& x);

// Versioned text format, 17 significant digits; load(save(m)) reproduces
// predictions bit-exactly.
void save_model(const RegressionModel& model, const std::string& path);
RegressionModel load_model(const std::string& path);

// Warning lines for fields that differ from the active configuration.
// An n_mfcc mismatch is fatal at prediction time since the feature layout
// changes; everything else is advisory.
std::vector<std::string> config_mismatches(const RegressionModel& model,
                                           const PipelineConfig& cfg);

}  // namespace audiosum
