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

#include "output.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>

namespace urnlab::cli {

namespace {

using nlohmann::ordered_json;

double approx(const Rational& value) {
  return std::stod(decimal_string(value));
}

std::string number_str(double value) { return ordered_json(value).dump(); }

std::string quoted_fraction(const Rational& value) {
  return "\"" + value.fraction_str() + "\"";
}

const char* verdict_str(bool pass) { return pass ? "pass" : "fail"; }

ordered_json check_json(const EstimateCheck& check) {
  return ordered_json{{"sample_count", check.sample_count},
                      {"estimate", check.estimate},
                      {"exact_target", check.exact_target.fraction_str()},
                      {"standard_error", check.standard_error},
                      {"z_score", check.z_score},
                      {"verdict", verdict_str(check.verdict)}};
}

ordered_json simulation_json(const SimulationReport& report) {
  ordered_json counts;
  for (std::size_t cell = 0; cell < 4; ++cell) {
    counts[std::string(kOrderedOutcomeLabels[cell])] =
        report.ordered_counts[cell];
  }
  return ordered_json{{"model", std::string(process_name(report.model.kind))},
                      {"n", report.model.urn_size},
                      {"trials", report.trials},
                      {"seed", report.seed},
                      {"z_threshold", report.z_threshold},
                      {"conditioning_hits", report.conditioning_hits},
                      {"ordered_counts", counts},
                      {"conditional", check_json(report.conditional)},
                      {"conditioning_rate", check_json(report.conditioning_check)},
                      {"verdict", verdict_str(report.passed())}};
}

std::string render_json(const OutputRecord& record) {
  ordered_json out;
  out["command"] = record.command;
  out["parameters"] = ordered_json::object();
  for (const auto& [key, value] : record.parameters) {
    out["parameters"][key] = value;
  }
  out["results"] = ordered_json::object();
  for (const ResultEntry& entry : record.results) {
    out["results"][entry.key] = ordered_json{
        {"exact", entry.value.fraction_str()},
        {"decimal_approx", approx(entry.value)}};
  }
  if (record.agreement) out["agreement"] = *record.agreement;
  if (record.posterior) {
    ordered_json rows = ordered_json::array();
    for (const PosteriorRow& row : *record.posterior) {
      rows.push_back(ordered_json{{"reds", row.reds},
                                  {"weight", row.weight.fraction_str()},
                                  {"decimal_approx", approx(row.weight)}});
    }
    out["posterior"] = rows;
  }
  if (record.command == "sweep") {
    ordered_json rows = ordered_json::array();
    for (const SweepRow& row : record.sweep_rows) {
      rows.push_back(ordered_json{{"n", row.n},
                                  {"method", row.method},
                                  {"exact", row.value.fraction_str()},
                                  {"decimal_approx", approx(row.value)}});
    }
    out["rows"] = rows;
  }
  if (!record.scenarios.empty()) {
    ordered_json rows = ordered_json::array();
    for (const ScenarioBlock& block : record.scenarios) {
      ordered_json outcomes = ordered_json::array();
      for (const Outcome& outcome : block.outcomes) {
        outcomes.push_back(
            ordered_json{{"label", outcome.label},
                         {"probability", outcome.probability.fraction_str()},
                         {"decimal_approx", approx(outcome.probability)}});
      }
      rows.push_back(ordered_json{{"name", block.name},
                                  {"summary", block.summary},
                                  {"outcomes", outcomes},
                                  {"answer", block.answer.fraction_str()},
                                  {"decimal_approx", approx(block.answer)}});
    }
    out["scenarios"] = rows;
  }
  if (record.simulation) out["simulation"] = simulation_json(*record.simulation);
  return out.dump(2) + "\n";
}

void append_simulation_csv(const SimulationReport& report, std::string* out) {
  auto line = [out](const std::string& metric, const std::string& value) {
    *out += metric + "," + value + "\n";
  };
  *out += "metric,value\n";
  line("model", std::string(process_name(report.model.kind)));
  line("n", std::to_string(report.model.urn_size));
  line("trials", std::to_string(report.trials));
  line("seed", std::to_string(report.seed));
  line("z_threshold", number_str(report.z_threshold));
  line("conditioning_hits", std::to_string(report.conditioning_hits));
  for (std::size_t cell = 0; cell < 4; ++cell) {
    line("count_" + std::string(kOrderedOutcomeLabels[cell]),
         std::to_string(report.ordered_counts[cell]));
  }
  line("estimate", number_str(report.conditional.estimate));
  line("exact_target", quoted_fraction(report.conditional.exact_target));
  line("standard_error", number_str(report.conditional.standard_error));
  line("z_score", number_str(report.conditional.z_score));
  line("conditional_verdict", verdict_str(report.conditional.verdict));
  line("conditioning_rate", number_str(report.conditioning_check.estimate));
  line("conditioning_rate_target",
       quoted_fraction(report.conditioning_check.exact_target));
  line("conditioning_rate_standard_error",
       number_str(report.conditioning_check.standard_error));
  line("conditioning_rate_z_score",
       number_str(report.conditioning_check.z_score));
  line("conditioning_rate_verdict",
       verdict_str(report.conditioning_check.verdict));
  line("verdict", verdict_str(report.passed()));
}

std::string render_csv(const OutputRecord& record) {
  std::string out;
  if (record.simulation) {
    append_simulation_csv(*record.simulation, &out);
    return out;
  }
  if (record.command == "sweep") {
    out += "n,method,exact,decimal_approx\n";
    for (const SweepRow& row : record.sweep_rows) {
      out += std::to_string(row.n) + "," + row.method + "," +
             quoted_fraction(row.value) + "," + decimal_string(row.value) +
             "\n";
    }
    return out;
  }
  if (!record.scenarios.empty()) {
    out += "scenario,key,exact,decimal_approx\n";
    for (const ScenarioBlock& block : record.scenarios) {
      for (const Outcome& outcome : block.outcomes) {
        out += block.name + ",outcome[" + outcome.label + "]," +
               quoted_fraction(outcome.probability) + "," +
               decimal_string(outcome.probability) + "\n";
      }
      out += block.name + ",answer," + quoted_fraction(block.answer) + "," +
             decimal_string(block.answer) + "\n";
    }
    return out;
  }
  // exact and prefix: one row per named value.
  out += record.command == "exact" ? "method,exact,decimal_approx\n"
                                   : "key,exact,decimal_approx\n";
  for (const ResultEntry& entry : record.results) {
    out += entry.key + "," + quoted_fraction(entry.value) + "," +
           decimal_string(entry.value) + "\n";
  }
  if (record.posterior) {
    for (const PosteriorRow& row : *record.posterior) {
      out += "posterior[" + std::to_string(row.reds) + "]," +
             quoted_fraction(row.weight) + "," + decimal_string(row.weight) +
             "\n";
    }
  }
  return out;
}

void append_check_table(const std::string& label, const EstimateCheck& check,
                        std::ostringstream* out) {
  *out << "  " << label << ": " << number_str(check.estimate) << " (target "
       << check.exact_target.fraction_str() << " = "
       << decimal_string(check.exact_target) << ", se "
       << number_str(check.standard_error) << ", z "
       << number_str(check.z_score) << ", " << verdict_str(check.verdict)
       << ")\n";
}

std::string render_table(const OutputRecord& record) {
  std::ostringstream out;
  out << record.command;
  if (!record.parameters.empty()) {
    out << " (";
    bool first = true;
    for (const auto& [key, value] : record.parameters) {
      if (!first) out << ", ";
      first = false;
      out << key << " = "
          << (value.is_string() ? value.get<std::string>() : value.dump());
    }
    out << ")";
  }
  out << "\n";

  if (!record.results.empty()) {
    std::size_t width = 0;
    for (const ResultEntry& entry : record.results) {
      width = std::max(width, entry.key.size());
    }
    std::size_t fraction_width = 0;
    for (const ResultEntry& entry : record.results) {
      fraction_width =
          std::max(fraction_width, entry.value.fraction_str().size());
    }
    out << "\n";
    for (const ResultEntry& entry : record.results) {
      out << "  " << std::left << std::setw(static_cast<int>(width) + 2)
          << entry.key << std::setw(static_cast<int>(fraction_width) + 2)
          << entry.value.fraction_str() << decimal_string(entry.value) << "\n";
    }
  }
  if (record.agreement) {
    out << "\n  agreement across methods: " << (*record.agreement ? "yes" : "no")
        << "\n";
  }
  if (record.posterior) {
    out << "\n  posterior over red counts:\n";
    for (const PosteriorRow& row : *record.posterior) {
      out << "    reds = " << std::left << std::setw(5) << row.reds
          << std::setw(10) << row.weight.fraction_str()
          << decimal_string(row.weight) << "\n";
    }
  }
  if (record.command == "sweep") {
    out << "\n  n     exact   decimal\n";
    for (const SweepRow& row : record.sweep_rows) {
      out << "  " << std::left << std::setw(6) << row.n << std::setw(8)
          << row.value.fraction_str() << decimal_string(row.value) << "\n";
    }
  }
  for (const ScenarioBlock& block : record.scenarios) {
    out << "\n  " << block.name << ": " << block.summary << "\n";
    for (const Outcome& outcome : block.outcomes) {
      out << "    " << outcome.label << "  "
          << outcome.probability.fraction_str() << " = "
          << decimal_string(outcome.probability) << "\n";
    }
    out << "    answer: " << block.answer.fraction_str() << " = "
        << decimal_string(block.answer) << "\n";
  }
  if (record.simulation) {
    const SimulationReport& report = *record.simulation;
    out << "\n  model " << process_name(report.model.kind) << ", n "
        << report.model.urn_size << ", trials " << report.trials << ", seed "
        << report.seed << ", z threshold " << number_str(report.z_threshold)
        << "\n";
    out << "  ordered counts:";
    for (std::size_t cell = 0; cell < 4; ++cell) {
      out << " " << kOrderedOutcomeLabels[cell] << " "
          << report.ordered_counts[cell];
    }
    out << "\n  conditioning hits: " << report.conditioning_hits << "\n";
    append_check_table("conditional estimate", report.conditional, &out);
    append_check_table("conditioning rate", report.conditioning_check, &out);
    out << "  verdict: " << verdict_str(report.passed()) << "\n";
  }
  return out.str();
}

}  // namespace

std::optional<Format> parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "table") return Format::kTable;
  return std::nullopt;
}

std::string render(const OutputRecord& record, Format format) {
  switch (format) {
    case Format::kJson:
      return render_json(record);
    case Format::kCsv:
      return render_csv(record);
    case Format::kTable:
      return render_table(record);
  }
  return {};
}

}  // namespace urnlab::cli
