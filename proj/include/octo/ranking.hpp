#pragma once

#include <string>
#include <vector>

#include "octo/record.hpp"

namespace octo {

// Competition-style ranking: per problem, the final fitness of every run of
// every algorithm is pooled and ranked ascending (ties receive the average of
// the tied positions); an algorithm's total is the sum of its run ranks over
// all problems. Lower totals are better.
struct RankingTable {
    std::vector<std::string> problems;
    struct Row {
        std::string algorithm;
        double total = 0.0;
        std::vector<double> per_problem;  // rank sum on each problem, aligned with `problems`
    };
    std::vector<Row> rows;  // sorted ascending by total (ties: algorithm name)
};

// Requires every algorithm to have the same number of runs per problem.
// Record finals are already in the minimization convention, so no direction
// handling happens here.
RankingTable cec_rank(const std::vector<RunRecord>& records);

struct SummaryRow {
    std::string algorithm;
    std::string problem;
    int runs = 0;
    double mean = 0.0;
    double median = 0.0;
    double stddev = 0.0;  // population standard deviation
    double q1 = 0.0;      // quartiles by linear interpolation
    double q3 = 0.0;
};

// Descriptive statistics of final fitness per algorithm x problem, ordered by
// (problem, algorithm).
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records);

// Linear-interpolation quantile of an unsorted sample, q in [0, 1].
double quantile(std::vector<double> values, double q);

}  // namespace octo
