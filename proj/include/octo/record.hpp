#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "octo/search_space.hpp"

namespace octo {

using ObjectiveFn = std::function<double(std::span<const double>)>;
using BinaryObjectiveFn = std::function<double(std::span<const std::uint8_t>)>;

// Minimizing view of an optimization problem, the contract every optimizer in
// this library runs against. `binary_length > 0` announces a native bit-string
// view (used by HC/SA/GA on NK-style problems); `continuous` is always present.
struct Objective {
    SearchSpace space;
    ObjectiveFn continuous;
    std::size_t binary_length = 0;
    BinaryObjectiveFn binary;
};

struct TracePoint {
    long long evaluations = 0;  // strictly increasing within a trace
    double best = 0.0;          // non-increasing (minimization)

    friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

// One optimizer run. Trace values and final_fitness are in the internal
// minimization convention (maximization problems are negated by the harness).
struct RunRecord {
    std::string algorithm;
    std::string problem;
    std::uint64_t seed = 0;
    std::vector<TracePoint> trace;
    double final_fitness = std::numeric_limits<double>::infinity();
    double wall_time_s = 0.0;
    long long evaluations = 0;
    bool budget_fault = false;
};

// Thrown when an evaluation is requested past the configured budget.
class BudgetExhausted : public std::runtime_error {
  public:
    explicit BudgetExhausted(long long budget)
        : std::runtime_error("objective call past the evaluation budget of " +
                             std::to_string(budget)),
          budget_(budget) {}
    long long budget() const { return budget_; }

  private:
    long long budget_;
};

// Counts objective calls against a budget and records the best-so-far trace.
// A point is recorded on every strict improvement and at fixed milestones
// (every 1% of the budget), which bounds trace sizes without losing the
// convergence shape.
class ProgressRecorder {
  public:
    explicit ProgressRecorder(long long budget)
        : budget_(budget), milestone_(budget >= 100 ? budget / 100 : 1) {
        if (budget < 1) throw std::invalid_argument("ProgressRecorder: budget must be >= 1");
    }

    // Registers one evaluation result. Throws BudgetExhausted if the budget
    // is already spent; optimizers are expected to check remaining() first.
    double observe(double fitness) {
        if (used_ >= budget_) throw BudgetExhausted(budget_);
        ++used_;
        const bool improved = fitness < best_;
        if (improved) best_ = fitness;
        if (improved || used_ % milestone_ == 0 || used_ == budget_) record_point();
        return fitness;
    }

    long long used() const { return used_; }
    long long budget() const { return budget_; }
    long long remaining() const { return budget_ - used_; }
    bool exhausted() const { return used_ >= budget_; }
    double best() const { return best_; }
    const std::vector<TracePoint>& trace() const { return trace_; }

    // Guarantees the trace ends at the actual evaluation count.
    void finalize() {
        if (used_ > 0 && (trace_.empty() || trace_.back().evaluations != used_)) record_point();
    }

  private:
    void record_point() {
        if (!trace_.empty() && trace_.back().evaluations == used_) trace_.back().best = best_;
        else trace_.push_back({used_, best_});
    }

    long long budget_;
    long long milestone_;
    long long used_ = 0;
    double best_ = std::numeric_limits<double>::infinity();
    std::vector<TracePoint> trace_;
};

}  // namespace octo
