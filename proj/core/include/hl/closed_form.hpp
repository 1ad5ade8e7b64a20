#pragma once

namespace hl::closed_form {

// Score offset c(a) = (log2(1-a) - log2(a)) / 2, defined on (0,1).
// Antisymmetric about 1/2.
double c_alpha(double a);

// E[max{X1, X2 + c}] = c + 1 + e^(-c)/2 for X1, X2 ~ exp(1), c >= 0.
double expected_max_shifted(double c);

// E[min{X1 - log2(a)/2, X2 - log2(1-a)/2}] = e^(-c(a))/2 on (0, 1/2].
double expected_min_shifted_pair(double a);

// One-step expected gain of the heavy rule at a two-way split,
// g(a) = log2(1-a)/2 + 1 + (a/(1-a))^(1/ln 4) / 2 on [0, 1/2].
// Endpoint a = 0 is the limit value 1.
double g_heavy(double a);

// One-step expected gain of the light rule,
// g~(a) = (a/(1-a))^(1/ln 4) / 2 on [0, 1/2]; 0 at a = 0.
double g_light(double a);

// Folds (1/2, 1) onto (0, 1/2] for the symmetric functions above.
double fold_half(double a);

struct BoundReport {
    int k = 0;
    double log2f = 0.0;
    double heavy_bound = 0.0;       // k + log2f/2 - 1
    double light_bound = 0.0;       // k - log2f/2
    double asymptotic_heavy = 0.0;  // k + log2f/2
    double asymptotic_light = 0.0;  // k - log2f/2
};

BoundReport bound_report(int k, double log2f);

// Per-vertex Hamilton path/cycle rates on random cubic graphs:
// 1 +- log2(2/sqrt(3))/2.
double cubic_heavy_rate();
double cubic_light_rate();

}  // namespace hl::closed_form
