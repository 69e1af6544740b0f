#include "octo/problem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace octo {

namespace {

constexpr double kBound = 100.0;
constexpr double kShiftBound = 80.0;

std::vector<double> seeded_shift(const std::string& name, int dimension) {
    Rng rng(substream_seed({fnv1a64("continuous-shift"), fnv1a64(name),
                            static_cast<std::uint64_t>(dimension)}));
    std::vector<double> shift(static_cast<std::size_t>(dimension));
    for (double& v : shift) v = rng.uniform(-kShiftBound, kShiftBound);
    return shift;
}

// Seeded random orthogonal matrix (row-major), via Gram-Schmidt on a Gaussian
// matrix. Suite functions are evaluated as base(Q (x - o)), the usual
// competition construction that removes coordinate-axis alignment.
std::vector<std::vector<double>> seeded_rotation(const std::string& name, int dimension) {
    Rng rng(substream_seed({fnv1a64("continuous-rotation"), fnv1a64(name),
                            static_cast<std::uint64_t>(dimension)}));
    const std::size_t n = static_cast<std::size_t>(dimension);
    std::vector<std::vector<double>> q(n, std::vector<double>(n));
    for (auto& row : q)
        for (double& v : row) v = rng.normal();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            double dot = 0.0;
            for (std::size_t d = 0; d < n; ++d) dot += q[i][d] * q[j][d];
            for (std::size_t d = 0; d < n; ++d) q[i][d] -= dot * q[j][d];
        }
        double norm = 0.0;
        for (double v : q[i]) norm += v * v;
        norm = std::sqrt(norm);
        for (double& v : q[i]) v /= norm;
    }
    return q;
}

std::vector<double> apply_rotation(const std::vector<std::vector<double>>& q,
                                   std::span<const double> z) {
    std::vector<double> out(z.size(), 0.0);
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t d = 0; d < q.size(); ++d) out[i] += q[i][d] * z[d];
    return out;
}

std::vector<double> apply_rotation_transpose(const std::vector<std::vector<double>>& q,
                                             std::span<const double> z) {
    std::vector<double> out(z.size(), 0.0);
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t d = 0; d < q.size(); ++d) out[d] += q[i][d] * z[i];
    return out;
}

std::vector<double> shifted_by(std::span<const double> x, std::span<const double> shift) {
    std::vector<double> z(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) z[d] = x[d] - (shift.empty() ? 0.0 : shift[d]);
    return z;
}

struct BaseFunction {
    const char* name;
    double (*fn)(std::span<const double>);
    double optimizer_coord;  // base optimum is at this constant vector
};

constexpr BaseFunction kBases[] = {
    {"sphere", sphere_fn, 0.0},     {"zakharov", zakharov_fn, 0.0},
    {"rosenbrock", rosenbrock_fn, 1.0}, {"rastrigin", rastrigin_fn, 0.0},
    {"ackley", ackley_fn, 0.0},     {"levy", levy_fn, 1.0},
    {"griewank", griewank_fn, 0.0}, {"schaffer-f7", schaffer_f7_fn, 0.0},
};

const BaseFunction* find_base(const std::string& name) {
    for (const BaseFunction& b : kBases)
        if (name == b.name) return &b;
    return nullptr;
}

struct CompositionComponent {
    const BaseFunction* base;
    std::vector<double> shift;
    std::vector<std::vector<double>> rotation;
    double sigma;
    double lambda;
    double bias;
};

// Distance-weighted blend of shifted bases: near a component's shift its own
// (scaled, biased) value dominates; at the first component's shift the value
// is exactly the global bias.
double composition_value(std::span<const double> x, const std::vector<CompositionComponent>& parts) {
    const std::size_t dim = x.size();
    std::vector<double> weights(parts.size());
    double weight_sum = 0.0;
    for (std::size_t c = 0; c < parts.size(); ++c) {
        const double d2 = [&] {
            double s = 0.0;
            for (std::size_t d = 0; d < dim; ++d) {
                const double diff = x[d] - parts[c].shift[d];
                s += diff * diff;
            }
            return s;
        }();
        if (d2 == 0.0) {
            // Sitting exactly on a component optimum: that component wins.
            return parts[c].lambda * parts[c].base->fn(std::vector<double>(dim, 0.0)) +
                   parts[c].bias;
        }
        weights[c] = (1.0 / std::sqrt(d2)) *
                     std::exp(-d2 / (2.0 * static_cast<double>(dim) * parts[c].sigma * parts[c].sigma));
        weight_sum += weights[c];
    }
    if (weight_sum <= 0.0) {
        // All weights underflowed; fall back to the nearest component.
        std::size_t nearest = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < parts.size(); ++c) {
            const double d2 = squared_distance(x, parts[c].shift);
            if (d2 < best) {
                best = d2;
                nearest = c;
            }
        }
        const auto z = apply_rotation(parts[nearest].rotation, shifted_by(x, parts[nearest].shift));
        return parts[nearest].lambda * parts[nearest].base->fn(z) + parts[nearest].bias;
    }
    double value = 0.0;
    for (std::size_t c = 0; c < parts.size(); ++c) {
        const auto z = apply_rotation(parts[c].rotation, shifted_by(x, parts[c].shift));
        value += (weights[c] / weight_sum) * (parts[c].lambda * parts[c].base->fn(z) + parts[c].bias);
    }
    return value;
}

Problem composition_problem(const std::string& name, int dimension,
                            const std::vector<std::string>& bases,
                            const std::vector<double>& lambdas) {
    std::vector<CompositionComponent> parts;
    const double sigmas[] = {10.0, 20.0, 30.0};
    const double biases[] = {0.0, 100.0, 200.0};
    for (std::size_t c = 0; c < bases.size(); ++c) {
        const BaseFunction* base = find_base(bases[c]);
        parts.push_back({base, seeded_shift(name + "/" + bases[c], dimension),
                         seeded_rotation(name + "/" + bases[c], dimension), sigmas[c], lambdas[c],
                         biases[c]});
    }
    Problem p{name + "-" + std::to_string(dimension) + "d",
              SearchSpace::cube(static_cast<std::size_t>(dimension), -kBound, kBound),
              Direction::Minimize,
              0.0,
              parts[0].shift,
              nullptr};
    p.fn = [parts = std::move(parts)](std::span<const double> x) {
        return composition_value(x, parts);
    };
    return p;
}

}  // namespace

double sphere_fn(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double zakharov_fn(std::span<const double> x) {
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s1 += x[i] * x[i];
        s2 += 0.5 * static_cast<double>(i + 1) * x[i];
    }
    return s1 + s2 * s2 + s2 * s2 * s2 * s2;
}

double rosenbrock_fn(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double rastrigin_fn(std::span<const double> x) {
    double s = 10.0 * static_cast<double>(x.size());
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
    return s;
}

double ackley_fn(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * std::numbers::pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

double levy_fn(std::span<const double> x) {
    const auto w = [&](std::size_t i) { return 1.0 + (x[i] - 1.0) / 4.0; };
    const double w0 = w(0);
    double s = std::sin(std::numbers::pi * w0) * std::sin(std::numbers::pi * w0);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double wi = w(i);
        const double sw = std::sin(std::numbers::pi * wi + 1.0);
        s += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * sw * sw);
    }
    const double wn = w(x.size() - 1);
    const double swn = std::sin(2.0 * std::numbers::pi * wn);
    s += (wn - 1.0) * (wn - 1.0) * (1.0 + swn * swn);
    return s;
}

double griewank_fn(std::span<const double> x) {
    double s = 0.0, p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i] / 4000.0;
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s - p + 1.0;
}

double schaffer_f7_fn(std::span<const double> x) {
    if (x.size() < 2) throw std::invalid_argument("schaffer-f7 needs dimension >= 2");
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double si = std::sqrt(x[i] * x[i] + x[i + 1] * x[i + 1]);
        s += std::sqrt(si) * (std::sin(50.0 * std::pow(si, 0.2)) + 1.0);
    }
    s /= static_cast<double>(x.size() - 1);
    return s * s;
}

Problem shifted_function(const std::string& base_name, int dimension, std::vector<double> shift,
                         double bias) {
    if (dimension < 1) throw std::invalid_argument("shifted_function: dimension must be >= 1");
    const BaseFunction* base = find_base(base_name);
    if (!base) throw std::invalid_argument("shifted_function: unknown function '" + base_name + "'");
    if (!shift.empty() && shift.size() != static_cast<std::size_t>(dimension))
        throw std::invalid_argument("shifted_function: shift length must equal dimension");

    Problem p{base_name + "-" + std::to_string(dimension) + "d",
              SearchSpace::cube(static_cast<std::size_t>(dimension), -kBound, kBound),
              Direction::Minimize,
              bias,
              {},
              nullptr};
    p.known_optimizer.assign(static_cast<std::size_t>(dimension), base->optimizer_coord);
    for (std::size_t d = 0; d < shift.size(); ++d) p.known_optimizer[d] += shift[d];
    p.fn = [fn = base->fn, shift = std::move(shift), bias](std::span<const double> x) {
        return fn(shifted_by(x, shift)) + bias;
    };
    return p;
}

Problem continuous_suite(const std::string& name, int dimension) {
    if (dimension < 1) throw std::invalid_argument("continuous_suite: dimension must be >= 1");
    if (name == "composition-1")
        return composition_problem(name, dimension, {"rastrigin", "griewank", "sphere"},
                                   {1.0, 10.0, 0.01});
    if (name == "composition-2")
        return composition_problem(name, dimension, {"ackley", "schaffer-f7", "zakharov"},
                                   {10.0, 10.0, 1e-6});
    const BaseFunction* base = find_base(name);
    if (!base) throw std::invalid_argument("continuous_suite: unknown function '" + name + "'");

    // Shifted and rotated: f(x) = base(Q (x - o)); the optimum value stays 0,
    // reached at x = o + Q^T x_base.
    auto shift = seeded_shift(name, dimension);
    auto rotation = seeded_rotation(name, dimension);
    Problem p{name + "-" + std::to_string(dimension) + "d",
              SearchSpace::cube(static_cast<std::size_t>(dimension), -kBound, kBound),
              Direction::Minimize,
              0.0,
              {},
              nullptr};
    const std::vector<double> base_optimizer(static_cast<std::size_t>(dimension),
                                             base->optimizer_coord);
    p.known_optimizer = apply_rotation_transpose(rotation, base_optimizer);
    for (std::size_t d = 0; d < shift.size(); ++d) p.known_optimizer[d] += shift[d];
    p.fn = [fn = base->fn, shift = std::move(shift),
            rotation = std::move(rotation)](std::span<const double> x) {
        return fn(apply_rotation(rotation, shifted_by(x, shift)));
    };
    return p;
}

const std::vector<std::string>& continuous_suite_names() {
    static const std::vector<std::string> names = {
        "sphere",   "zakharov", "rosenbrock",  "rastrigin",     "ackley",
        "levy",     "griewank", "schaffer-f7", "composition-1", "composition-2",
    };
    return names;
}

Problem nk_problem(std::shared_ptr<const NkLandscape> landscape, std::string id) {
    const int n = landscape->n();
    Problem p{std::move(id),
              SearchSpace::cube(static_cast<std::size_t>(n), -5.0, 5.0),
              Direction::Maximize,
              std::nullopt,
              {},
              nullptr};
    p.fn = [landscape](std::span<const double> x) {
        return landscape->fitness(binarize_sigmoid(x));
    };
    p.binary_length = static_cast<std::size_t>(n);
    p.binary_fn = [landscape](std::span<const std::uint8_t> genome) {
        return landscape->fitness(genome);
    };
    return p;
}

Objective minimizing_view(const Problem& problem) {
    Objective view{problem.space, nullptr, problem.binary_length, nullptr};
    if (problem.direction == Direction::Minimize) {
        view.continuous = problem.fn;
        view.binary = problem.binary_fn;
    } else {
        view.continuous = [fn = problem.fn](std::span<const double> x) { return -fn(x); };
        if (problem.binary_fn)
            view.binary = [fn = problem.binary_fn](std::span<const std::uint8_t> g) { return -fn(g); };
    }
    return view;
}

}  // namespace octo
