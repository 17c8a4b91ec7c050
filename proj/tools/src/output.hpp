// Copyright 2026 The Urnlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef URNLAB_TOOLS_OUTPUT_HPP_
#define URNLAB_TOOLS_OUTPUT_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "urnlab/monte_carlo.hpp"
#include "urnlab/paradox.hpp"
#include "urnlab/rational.hpp"

namespace urnlab::cli {

enum class Format { kJson, kCsv, kTable };

std::optional<Format> parse_format(const std::string& name);

/// One named exact value in a record's results section.
struct ResultEntry {
  std::string key;
  Rational value;
};

struct SweepRow {
  int n;
  std::string method;
  Rational value;
};

struct PosteriorRow {
  int reds;
  Rational weight;
};

struct ScenarioBlock {
  std::string name;
  std::string summary;
  std::vector<Outcome> outcomes;
  Rational answer;
};

/// Everything a command emits, in one structure the renderers share.
/// Exact values always render as reduced "num/den" strings; the paired
/// decimal renderings are approximations with exactly 12 significant digits.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, nlohmann::ordered_json>> parameters;
  std::vector<ResultEntry> results;
  std::optional<bool> agreement;
  std::optional<std::vector<PosteriorRow>> posterior;
  std::vector<SweepRow> sweep_rows;
  std::vector<ScenarioBlock> scenarios;
  std::optional<SimulationReport> simulation;
};

/// Serializes the record; JSON ends with a newline, CSV uses LF endings and
/// quotes fraction cells, the table form is aligned for reading.
std::string render(const OutputRecord& record, Format format);

}  // namespace urnlab::cli

#endif  // URNLAB_TOOLS_OUTPUT_HPP_
