#include "hl/closed_form.hpp"

#include <cmath>
#include <stdexcept>

namespace hl::closed_form {

namespace {
void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}
}  // namespace

double c_alpha(double a) {
    require(a > 0.0 && a < 1.0, "c_alpha: a must be in (0,1)");
    return 0.5 * (std::log2(1.0 - a) - std::log2(a));
}

double expected_max_shifted(double c) {
    require(c >= 0.0, "expected_max_shifted: c must be >= 0");
    return c + 1.0 + 0.5 * std::exp(-c);
}

double expected_min_shifted_pair(double a) {
    require(a > 0.0 && a <= 0.5, "expected_min_shifted_pair: a must be in (0,1/2]");
    return 0.5 * std::exp(-c_alpha(a));
}

double g_heavy(double a) {
    require(a >= 0.0 && a <= 0.5, "g_heavy: a must be in [0,1/2]");
    if (a == 0.0) return 1.0;  // limit value
    double ratio = a / (1.0 - a);
    return 0.5 * std::log2(1.0 - a) + 1.0 +
           0.5 * std::pow(ratio, 1.0 / std::log(4.0));
}

double g_light(double a) {
    require(a >= 0.0 && a <= 0.5, "g_light: a must be in [0,1/2]");
    if (a == 0.0) return 0.0;  // limit value
    double ratio = a / (1.0 - a);
    return 0.5 * std::pow(ratio, 1.0 / std::log(4.0));
}

double fold_half(double a) {
    require(a >= 0.0 && a <= 1.0, "fold_half: a must be in [0,1]");
    return a > 0.5 ? 1.0 - a : a;
}

BoundReport bound_report(int k, double log2f) {
    require(k >= 1, "bound_report: k must be >= 1");
    require(log2f >= 0.0, "bound_report: log2f must be >= 0");
    BoundReport r;
    r.k = k;
    r.log2f = log2f;
    r.asymptotic_heavy = k + 0.5 * log2f;
    r.asymptotic_light = k - 0.5 * log2f;
    r.heavy_bound = r.asymptotic_heavy - 1.0;
    r.light_bound = r.asymptotic_light;
    return r;
}

double cubic_heavy_rate() { return 1.0 + 0.5 * std::log2(2.0 / std::sqrt(3.0)); }
double cubic_light_rate() { return 1.0 - 0.5 * std::log2(2.0 / std::sqrt(3.0)); }

}  // namespace hl::closed_form
