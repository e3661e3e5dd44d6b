#pragma once

#include <swag/bench/config.hpp>
#include <swag/bench/records.hpp>
#include <swag/bench/report.hpp>

#include <iosfwd>
#include <vector>

namespace swag::bench {

/// Runs one configured experiment. Event mode consumes `records` (the
/// first cfg.rounds of them); other modes ignore it.
OpReport run_experiment(const ExperimentConfig& cfg, const std::vector<TimestampedRecord>& records);

/// Loads event-mode input: the CSV at cfg.input_path, or cfg.rounds
/// synthetic records when no path is set.
std::vector<TimestampedRecord> load_records(const ExperimentConfig& cfg);

/// Command-line entry point. Returns the process exit status.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace swag::bench
