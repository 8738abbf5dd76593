// Copyright 2026 The biozip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// RunReport rendering. Reals use shortest round-trip formatting so every
// value in a report parses back to the exact double that was measured.

#pragma once

#include <string>

#include "biozip/metrics.hpp"
#include "json.hpp"

namespace biozip::cli {

std::string format_double(double v);

nlohmann::ordered_json to_json(const RunReport& report);
nlohmann::ordered_json to_json(const StageTimings& timings);

/// transform,codec,thr,num_segments,segment_size,rmse_std,rmse_raw,
/// cr_percent,t_comp_s,t_reconst_s,t_total_s,t_min_s,compressed_bytes,
/// original_bytes,error
std::string csv_header();
std::string csv_row(const PipelineConfig& config, const RunReport& report,
                    const std::string& error);

}  // namespace biozip::cli
