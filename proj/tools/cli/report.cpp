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

#include "cli/report.hpp"

#include <array>
#include <charconv>

namespace biozip::cli {
namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += (c == '\n') ? ' ' : c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

nlohmann::ordered_json to_json(const StageTimings& t) {
  nlohmann::ordered_json j;
  j["t_lossy_s"] = t.t_lossy;
  j["t_thr_s"] = t.t_thr;
  j["t_lossless_s"] = t.t_lossless;
  j["t_ilossless_s"] = t.t_ilossless;
  j["t_ilossy_s"] = t.t_ilossy;
  return j;
}

nlohmann::ordered_json to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["transform"] = std::string(to_string(r.config.transform));
  j["codec"] = std::string(to_string(r.config.codec));
  j["thr"] = r.config.thr.ratio();
  j["dwt_levels"] = r.config.dwt_levels;
  j["num_segments"] = r.config.num_segments;
  j["segment_size"] = r.segment_size;
  j["rmse_std"] = r.rmse_std;
  j["rmse_raw"] = r.rmse_raw;
  j["cr_percent"] = r.cr_percent;
  j["compressed_bytes"] = r.compressed_bytes;
  j["original_bytes"] = r.original_bytes;
  j["retained_coefficients"] = r.retained_coefficients;
  j["t_comp_s"] = r.t_comp;
  j["t_reconst_s"] = r.t_reconst;
  j["t_total_s"] = r.t_total;
  j["t_min_s"] = r.t_min;
  j["stages"] = to_json(r.timings);
  return j;
}

std::string csv_header() {
  return "transform,codec,thr,num_segments,segment_size,rmse_std,rmse_raw,cr_percent,"
         "t_comp_s,t_reconst_s,t_total_s,t_min_s,compressed_bytes,original_bytes,error";
}

std::string csv_row(const PipelineConfig& config, const RunReport& r, const std::string& error) {
  std::string row;
  row += to_string(config.transform);
  row += ',';
  row += to_string(config.codec);
  row += ',' + format_double(config.thr.ratio());
  row += ',' + std::to_string(config.num_segments);
  if (!error.empty()) {
    // Measurements are absent for failed runs.
    row += ",,,,,,,,,,,";
    row += csv_escape(error);
    return row;
  }
  row += ',' + std::to_string(r.segment_size);
  row += ',' + format_double(r.rmse_std);
  row += ',' + format_double(r.rmse_raw);
  row += ',' + format_double(r.cr_percent);
  row += ',' + format_double(r.t_comp);
  row += ',' + format_double(r.t_reconst);
  row += ',' + format_double(r.t_total);
  row += ',' + format_double(r.t_min);
  row += ',' + std::to_string(r.compressed_bytes);
  row += ',' + std::to_string(r.original_bytes);
  row += ',';
  return row;
}

}  // namespace biozip::cli
