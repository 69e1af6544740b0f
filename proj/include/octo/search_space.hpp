#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "octo/rng.hpp"

namespace octo {

// Axis-aligned box [lower, upper] in R^D.
class SearchSpace {
  public:
    SearchSpace(std::vector<double> lower, std::vector<double> upper)
        : lower_(std::move(lower)), upper_(std::move(upper)) {
        if (lower_.empty() || lower_.size() != upper_.size())
            throw std::invalid_argument("SearchSpace: bounds must be non-empty and equal length");
        for (std::size_t d = 0; d < lower_.size(); ++d)
            if (!(lower_[d] < upper_[d]))
                throw std::invalid_argument("SearchSpace: lower must be < upper in every dimension");
    }

    // Uniform cube [lo, hi]^dim.
    static SearchSpace cube(std::size_t dim, double lo, double hi) {
        return SearchSpace(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
    }

    std::size_t dimension() const { return lower_.size(); }
    const std::vector<double>& lower() const { return lower_; }
    const std::vector<double>& upper() const { return upper_; }
    double range(std::size_t d) const { return upper_[d] - lower_[d]; }
    double min_range() const {
        double m = range(0);
        for (std::size_t d = 1; d < dimension(); ++d) m = std::min(m, range(d));
        return m;
    }

    // Euclidean length of the main diagonal, i.e. the diameter of the box.
    double diameter() const {
        double s = 0.0;
        for (std::size_t d = 0; d < dimension(); ++d) s += range(d) * range(d);
        return std::sqrt(s);
    }

    bool contains(std::span<const double> x) const {
        if (x.size() != dimension()) return false;
        for (std::size_t d = 0; d < x.size(); ++d)
            if (x[d] < lower_[d] || x[d] > upper_[d]) return false;
        return true;
    }

    void clamp(std::vector<double>& x) const {
        for (std::size_t d = 0; d < x.size(); ++d) {
            if (x[d] < lower_[d]) x[d] = lower_[d];
            else if (x[d] > upper_[d]) x[d] = upper_[d];
        }
    }

    std::vector<double> sample_uniform(Rng& rng) const {
        std::vector<double> x(dimension());
        for (std::size_t d = 0; d < x.size(); ++d) x[d] = rng.uniform(lower_[d], upper_[d]);
        return x;
    }

    // Uniform in the box [center - radius, center + radius] intersected with
    // the space bounds.
    std::vector<double> sample_in_box(std::span<const double> center, double radius, Rng& rng) const {
        std::vector<double> x(dimension());
        for (std::size_t d = 0; d < x.size(); ++d) {
            const double lo = std::max(lower_[d], center[d] - radius);
            const double hi = std::min(upper_[d], center[d] + radius);
            x[d] = rng.uniform(lo, hi);
        }
        return x;
    }

  private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        const double diff = a[d] - b[d];
        s += diff * diff;
    }
    return s;
}

inline double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(squared_distance(a, b));
}

}  // namespace octo
