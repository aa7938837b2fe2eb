#pragma once
// Experiment configuration and the serializable report record. Reports are
// plain field lists so the CLI serializers can emit them deterministically.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace friablab {

using ReportValue = std::variant<std::int64_t, double, bool, std::string>;

// Exact text form: integers verbatim, reals with up to 17 significant
// digits (round-trip exact, no exponent noise for short decimals).
std::string format_value(const ReportValue& v);

struct ReportRow {
  std::vector<std::pair<std::string, ReportValue>> fields;

  ReportRow& add(std::string name, std::int64_t v);
  ReportRow& add(std::string name, std::uint64_t v);
  ReportRow& add(std::string name, double v);
  ReportRow& add(std::string name, bool v);
  ReportRow& add(std::string name, std::string v);
  const ReportValue* find(const std::string& name) const;
  double number(const std::string& name) const;
  bool flag(const std::string& name) const;
};

struct ExperimentConfig {
  std::uint64_t seed = 1;
  int trials = 100;
  std::vector<double> x_grid;
  std::vector<double> y_grid;
  double z0 = 10.0;
  double gamma = 0.5;
  std::vector<double> levels;   // thresholds t
  double eps = 0.5;
  std::vector<double> d_grid{10.0, 100.0};
  int threads = 1;
  std::ostream* progress = nullptr;  // optional progress stream (stderr)
};

struct ExperimentReport {
  std::string name;
  std::vector<std::pair<std::string, ReportValue>> config;  // echoed knobs
  std::vector<ReportRow> rows;
  std::vector<std::uint64_t> seeds;  // per-trial derived seeds (first few)
  bool pass = true;
  // Wall time is diagnostic only; serializers skip it so equal-seed runs
  // are byte-identical.
  double wall_seconds = 0.0;
};

}  // namespace friablab
