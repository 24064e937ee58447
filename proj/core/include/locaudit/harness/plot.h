//
// Copyright 2026 The locaudit Authors
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
//

// Static SVG charts of experiment records. Output depends only on the
// record contents, so identical records give identical bytes.

#ifndef LOCAUDIT_HARNESS_PLOT_H_
#define LOCAUDIT_HARNESS_PLOT_H_

#include <string>

#include "absl/status/status.h"
#include "json.hpp"

namespace locaudit {

// Chart for a parsed record.json. Unknown kinds and records without data
// give empty axes.
std::string RenderPlot(const nlohmann::json& record);

// Reads `record_path` and writes the SVG. Errors: RecordUnreadable when the
// file is missing or not JSON.
absl::Status PlotRecordFile(const std::string& record_path,
                            const std::string& out_path);

}  // namespace locaudit

#endif  // LOCAUDIT_HARNESS_PLOT_H_
