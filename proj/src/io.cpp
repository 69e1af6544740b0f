#include "octo/io.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace octo {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

namespace {

std::ofstream open_out(const fs::path& file) {
    if (file.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(file.parent_path(), ec);
    }
    std::ofstream out(file);
    if (!out) throw IoError("cannot write '" + file.string() + "'");
    return out;
}

std::ifstream open_in(const fs::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot read '" + file.string() + "'");
    return in;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

double parse_double(const std::string& text, const fs::path& file) {
    try {
        return std::stod(text);
    } catch (const std::exception&) {
        throw IoError("bad numeric field '" + text + "' in '" + file.string() + "'");
    }
}

json record_to_json(const RunRecord& r) {
    json trace = json::array();
    for (const TracePoint& p : r.trace) trace.push_back({p.evaluations, p.best});
    return json{{"algorithm", r.algorithm},
                {"problem", r.problem},
                {"seed", r.seed},
                {"final_fitness", r.final_fitness},
                {"wall_time_s", r.wall_time_s},
                {"evaluations", r.evaluations},
                {"budget_fault", r.budget_fault},
                {"trace", std::move(trace)}};
}

RunRecord record_from_json(const json& doc) {
    RunRecord r;
    r.algorithm = doc.at("algorithm").get<std::string>();
    r.problem = doc.at("problem").get<std::string>();
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.final_fitness = doc.at("final_fitness").get<double>();
    r.wall_time_s = doc.at("wall_time_s").get<double>();
    r.evaluations = doc.at("evaluations").get<long long>();
    r.budget_fault = doc.value("budget_fault", false);
    for (const json& p : doc.at("trace"))
        r.trace.push_back({p.at(0).get<long long>(), p.at(1).get<double>()});
    return r;
}

std::string run_stem(const RunRecord& r) {
    return r.algorithm + "__" + r.problem + "__s" + std::to_string(r.seed);
}

}  // namespace

void write_runs_csv(const fs::path& file, const std::vector<RunRecord>& records) {
    auto out = open_out(file);
    out << "algorithm,problem,seed,final_fitness,wall_time_s,evaluations\n";
    for (const RunRecord& r : records)
        out << r.algorithm << ',' << r.problem << ',' << r.seed << ','
            << format_double(r.final_fitness) << ',' << format_double(r.wall_time_s) << ','
            << r.evaluations << '\n';
}

void write_traces_csv(const fs::path& file, const std::vector<RunRecord>& records) {
    auto out = open_out(file);
    out << "algorithm,problem,seed,evaluations,best_so_far\n";
    for (const RunRecord& r : records)
        for (const TracePoint& p : r.trace)
            out << r.algorithm << ',' << r.problem << ',' << r.seed << ',' << p.evaluations << ','
                << format_double(p.best) << '\n';
}

void write_ranking_csv(const fs::path& file, const RankingTable& table) {
    auto out = open_out(file);
    out << "algorithm,total_score,rank\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        out << table.rows[i].algorithm << ',' << format_double(table.rows[i].total) << ',' << i + 1
            << '\n';
}

void write_summary_csv(const fs::path& file, const std::vector<SummaryRow>& rows) {
    auto out = open_out(file);
    out << "algorithm,problem,runs,mean,median,std,q1,q3\n";
    for (const SummaryRow& r : rows)
        out << r.algorithm << ',' << r.problem << ',' << r.runs << ',' << format_double(r.mean)
            << ',' << format_double(r.median) << ',' << format_double(r.stddev) << ','
            << format_double(r.q1) << ',' << format_double(r.q3) << '\n';
}

void write_trace_files(const fs::path& directory, const std::vector<RunRecord>& records) {
    std::error_code ec;
    fs::create_directories(directory, ec);
    for (const RunRecord& r : records) {
        auto out = open_out(directory / (run_stem(r) + ".csv"));
        out << "evaluations,best_so_far\n";
        for (const TracePoint& p : r.trace)
            out << p.evaluations << ',' << format_double(p.best) << '\n';
    }
}

void write_runs_json(const fs::path& file, const std::vector<RunRecord>& records) {
    json doc = json::array();
    for (const RunRecord& r : records) doc.push_back(record_to_json(r));
    open_out(file) << doc.dump(2) << '\n';
}

void write_ranking_json(const fs::path& file, const RankingTable& table) {
    json rows = json::array();
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        rows.push_back({{"algorithm", table.rows[i].algorithm},
                        {"total_score", table.rows[i].total},
                        {"rank", i + 1},
                        {"per_problem", table.rows[i].per_problem}});
    open_out(file) << json{{"problems", table.problems}, {"rows", std::move(rows)}}.dump(2) << '\n';
}

void write_summary_json(const fs::path& file, const std::vector<SummaryRow>& rows) {
    json doc = json::array();
    for (const SummaryRow& r : rows)
        doc.push_back({{"algorithm", r.algorithm},
                       {"problem", r.problem},
                       {"runs", r.runs},
                       {"mean", r.mean},
                       {"median", r.median},
                       {"std", r.stddev},
                       {"q1", r.q1},
                       {"q3", r.q3}});
    open_out(file) << doc.dump(2) << '\n';
}

std::vector<RunRecord> read_runs_csv(const fs::path& runs_file, const fs::path& traces_file) {
    auto runs_in = open_in(runs_file);
    std::vector<RunRecord> records;
    std::string line;
    std::getline(runs_in, line);  // header
    while (std::getline(runs_in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 6) throw IoError("bad row in '" + runs_file.string() + "': " + line);
        RunRecord r;
        r.algorithm = fields[0];
        r.problem = fields[1];
        r.seed = std::stoull(fields[2]);
        r.final_fitness = parse_double(fields[3], runs_file);
        r.wall_time_s = parse_double(fields[4], runs_file);
        r.evaluations = std::stoll(fields[5]);
        records.push_back(std::move(r));
    }

    auto traces_in = open_in(traces_file);
    std::getline(traces_in, line);  // header
    while (std::getline(traces_in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 5) throw IoError("bad row in '" + traces_file.string() + "': " + line);
        const std::uint64_t seed = std::stoull(fields[2]);
        for (RunRecord& r : records) {
            if (r.algorithm == fields[0] && r.problem == fields[1] && r.seed == seed) {
                r.trace.push_back({std::stoll(fields[3]), parse_double(fields[4], traces_file)});
                break;
            }
        }
    }
    return records;
}

std::vector<RunRecord> read_runs_json(const fs::path& file) {
    json doc;
    try {
        open_in(file) >> doc;
    } catch (const json::exception& e) {
        throw IoError("cannot parse '" + file.string() + "': " + e.what());
    }
    std::vector<RunRecord> records;
    for (const json& r : doc) records.push_back(record_from_json(r));
    return records;
}

std::vector<RunRecord> read_results_dir(const fs::path& directory) {
    if (fs::exists(directory / "runs.json")) return read_runs_json(directory / "runs.json");
    if (fs::exists(directory / "runs.csv"))
        return read_runs_csv(directory / "runs.csv", directory / "traces.csv");
    throw IoError("no runs.json or runs.csv in '" + directory.string() + "'");
}

void export_results(const fs::path& directory, const std::vector<RunRecord>& records, bool csv,
                    bool json_too) {
    std::error_code ec;
    fs::create_directories(directory, ec);
    if (csv) {
        write_runs_csv(directory / "runs.csv", records);
        write_traces_csv(directory / "traces.csv", records);
        write_trace_files(directory / "traces", records);
    }
    if (json_too) write_runs_json(directory / "runs.json", records);
}

}  // namespace octo
