#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "octo/nk.hpp"
#include "octo/record.hpp"
#include "octo/search_space.hpp"

namespace octo {

enum class Direction { Minimize, Maximize };

// A named fitness function with its search box and metadata. `fn` (and the
// optional native binary view) evaluate in the problem's own direction; use
// minimizing_view() to obtain the contract every optimizer runs against.
struct Problem {
    std::string id;
    SearchSpace space;
    Direction direction = Direction::Minimize;
    std::optional<double> known_optimum;    // objective value, native direction
    std::vector<double> known_optimizer;    // empty when unknown
    ObjectiveFn fn;
    std::size_t binary_length = 0;
    BinaryObjectiveFn binary_fn;
};

// Wraps the problem into the minimization convention (maximization problems
// are negated). Evaluations stay pure and reentrant.
Objective minimizing_view(const Problem& problem);

// Continuous benchmark family on [-100, 100]^D, following the competition
// construction: every function is shifted by a seeded offset in [-80, 80]^D
// and rotated by a seeded orthogonal matrix, both derived from the function
// name so a name always denotes the same function; compositions blend three
// such components with distance-based weights. Known names: sphere, zakharov,
// rosenbrock, rastrigin, ackley, levy, griewank, schaffer-f7, composition-1,
// composition-2.
Problem continuous_suite(const std::string& name, int dimension);
const std::vector<std::string>& continuous_suite_names();

// Same family with an explicit shift and bias (used by tests and custom
// setups). The shift must have `dimension` entries; an empty shift means no
// translation.
Problem shifted_function(const std::string& base_name, int dimension, std::vector<double> shift,
                         double bias);

// Base definitions (unshifted), exposed for verification.
double sphere_fn(std::span<const double> x);
double zakharov_fn(std::span<const double> x);
double rosenbrock_fn(std::span<const double> x);
double rastrigin_fn(std::span<const double> x);
double ackley_fn(std::span<const double> x);
double levy_fn(std::span<const double> x);
double griewank_fn(std::span<const double> x);
double schaffer_f7_fn(std::span<const double> x);

// Binary NK problem exposed two ways: natively on bit strings (maximize) and
// to continuous-space optimizers through the box [-5, 5]^N with the unified
// sigmoid transfer.
Problem nk_problem(std::shared_ptr<const NkLandscape> landscape, std::string id);

}  // namespace octo
