#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "octo/ranking.hpp"
#include "octo/record.hpp"

namespace octo {

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Shortest round-trip decimal representation (used for all CSV/JSON floats so
// that replayed experiments produce byte-identical files).
std::string format_double(double value);

// CSV schemas:
//   runs.csv    algorithm,problem,seed,final_fitness,wall_time_s,evaluations
//   traces.csv  algorithm,problem,seed,evaluations,best_so_far
//   ranking.csv algorithm,total_score,rank
//   summary.csv algorithm,problem,runs,mean,median,std,q1,q3
void write_runs_csv(const std::filesystem::path& file, const std::vector<RunRecord>& records);
void write_traces_csv(const std::filesystem::path& file, const std::vector<RunRecord>& records);
void write_ranking_csv(const std::filesystem::path& file, const RankingTable& table);
void write_summary_csv(const std::filesystem::path& file, const std::vector<SummaryRow>& rows);

// One `<algorithm>__<problem>__s<seed>.csv` per run (columns
// evaluations,best_so_far) under `directory`.
void write_trace_files(const std::filesystem::path& directory,
                       const std::vector<RunRecord>& records);

// JSON mirrors of the same structures.
void write_runs_json(const std::filesystem::path& file, const std::vector<RunRecord>& records);
void write_ranking_json(const std::filesystem::path& file, const RankingTable& table);
void write_summary_json(const std::filesystem::path& file, const std::vector<SummaryRow>& rows);

// Reimports. The CSV reader combines runs.csv and traces.csv back into full
// records; the JSON reader parses runs.json directly.
std::vector<RunRecord> read_runs_csv(const std::filesystem::path& runs_file,
                                     const std::filesystem::path& traces_file);
std::vector<RunRecord> read_runs_json(const std::filesystem::path& file);

// Loads records from a results directory, preferring runs.json and falling
// back to the CSV pair.
std::vector<RunRecord> read_results_dir(const std::filesystem::path& directory);

// Writes runs/traces/per-run traces plus, when requested, ranking and summary
// in both formats into `directory`.
void export_results(const std::filesystem::path& directory, const std::vector<RunRecord>& records,
                    bool csv = true, bool json = true);

}  // namespace octo
