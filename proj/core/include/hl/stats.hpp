#pragma once
#include <cmath>
#include <limits>

namespace hl {

struct TrialStats {
    long count = 0;
    double mean = 0.0;
    double variance = 0.0;  // unbiased
    double std_error = 0.0;
    double min = 0.0;
    double max = 0.0;
};

// One-pass Welford accumulator.
class RunningStats {
public:
    void push(double x) {
        ++n_;
        double d = x - mean_;
        mean_ += d / static_cast<double>(n_);
        m2_ += d * (x - mean_);
        if (n_ == 1 || x < min_) min_ = x;
        if (n_ == 1 || x > max_) max_ = x;
    }

    long count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
    double std_error() const {
        return n_ > 0 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
    }

    TrialStats snapshot() const {
        return {n_, mean_, variance(), std_error(), min_, max_};
    }

private:
    long n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
    double min_ = 0.0;
    double max_ = 0.0;
};

}  // namespace hl
