#include "octo/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace octo {

namespace {

// Ascending ranks 1..n with tied values receiving the average of their
// positions.
std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double shared = 0.5 * static_cast<double>(i + j) + 1.0;  // average of positions i..j
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

RankingTable cec_rank(const std::vector<RunRecord>& records) {
    if (records.empty()) throw std::invalid_argument("cec_rank: no records");

    std::vector<std::string> problems;
    std::vector<std::string> algorithms;
    std::map<std::pair<std::string, std::string>, std::vector<double>> finals;
    for (const RunRecord& r : records) {
        if (std::find(problems.begin(), problems.end(), r.problem) == problems.end())
            problems.push_back(r.problem);
        if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end())
            algorithms.push_back(r.algorithm);
        finals[{r.problem, r.algorithm}].push_back(r.final_fitness);
    }

    std::size_t repeats = 0;
    for (const std::string& p : problems)
        for (const std::string& a : algorithms) {
            const auto it = finals.find({p, a});
            const std::size_t n = it == finals.end() ? 0 : it->second.size();
            if (repeats == 0) repeats = n;
            if (n != repeats)
                throw std::invalid_argument(
                    "cec_rank: every algorithm needs the same repeat count per problem");
        }

    RankingTable table;
    table.problems = problems;
    std::map<std::string, RankingTable::Row> rows;
    for (const std::string& a : algorithms)
        rows[a] = {a, 0.0, std::vector<double>(problems.size(), 0.0)};

    for (std::size_t pi = 0; pi < problems.size(); ++pi) {
        // Pool all runs of all algorithms on this problem.
        std::vector<double> pooled;
        std::vector<const std::string*> owner;
        for (const std::string& a : algorithms)
            for (double f : finals[{problems[pi], a}]) {
                pooled.push_back(f);
                owner.push_back(&a);
            }
        const std::vector<double> ranks = average_ranks(pooled);
        for (std::size_t k = 0; k < ranks.size(); ++k) {
            rows[*owner[k]].per_problem[pi] += ranks[k];
            rows[*owner[k]].total += ranks[k];
        }
    }

    for (auto& [name, row] : rows) table.rows.push_back(std::move(row));
    std::sort(table.rows.begin(), table.rows.end(),
              [](const RankingTable::Row& a, const RankingTable::Row& b) {
                  return a.total != b.total ? a.total < b.total : a.algorithm < b.algorithm;
              });
    return table;
}

double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw std::invalid_argument("quantile: empty sample");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = static_cast<std::size_t>(std::ceil(pos));
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records) {
    if (records.empty()) throw std::invalid_argument("summarize: no records");
    std::map<std::pair<std::string, std::string>, std::vector<double>> groups;
    for (const RunRecord& r : records) groups[{r.problem, r.algorithm}].push_back(r.final_fitness);

    std::vector<SummaryRow> rows;
    for (const auto& [key, finals] : groups) {
        SummaryRow row;
        row.problem = key.first;
        row.algorithm = key.second;
        row.runs = static_cast<int>(finals.size());
        const double n = static_cast<double>(finals.size());
        row.mean = std::accumulate(finals.begin(), finals.end(), 0.0) / n;
        double ss = 0.0;
        for (double f : finals) ss += (f - row.mean) * (f - row.mean);
        row.stddev = std::sqrt(ss / n);
        row.median = quantile(finals, 0.5);
        row.q1 = quantile(finals, 0.25);
        row.q3 = quantile(finals, 0.75);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace octo
