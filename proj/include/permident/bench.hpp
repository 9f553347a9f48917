#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "permident/identities.hpp"

namespace permident {

enum class BenchMethod { Naive, Ryser, RyserSerial, Determinantal };

const char* to_string(BenchMethod m);
BenchMethod bench_method_from_string(const std::string& name);  // ParseError

struct BenchRecord {
    int n = 0;
    std::string method;
    double wall_time_s = 0.0;
    int value_digits = 0;  // decimal digits of the exact numerator
    Rational value;        // sidecar JSON only; equal across methods per size
};

/*
 * Per size: one random rank <= 2 matrix with nonzero det(X_{n-1})
 * (resampled as needed), then each engine timed as the median of three
 * wall-clock runs. Values must agree exactly across engines.
 */
std::vector<BenchRecord> bench_permanent(const std::vector<int>& sizes,
                                         const std::vector<BenchMethod>& methods,
                                         std::uint64_t seed, const Guards& guards = {});

struct StabilityRecord {
    Rational epsilon;
    Rational exact_value;      // Ryser on the exact matrix
    double float_value = 0.0;  // determinantal formula in double precision
    double relative_error = 0.0;
    bool degenerate = false;  // exact determinantal path hit a zero denominator
};

/*
 * Conclusion experiment: X(eps) = u v^T + eps w x^T drifts toward rank 1 as
 * eps -> 0, and both determinants in the identity drift toward 0. The
 * determinantal permanent is evaluated in double precision (entries,
 * entrywise powers, partial-pivot determinants, final division) and
 * compared with the exact Ryser value. A non-finite float result records
 * an infinite relative error.
 */
std::vector<StabilityRecord> stability_experiment(int n, const std::vector<Rational>& epsilons,
                                                  std::uint64_t seed, const Guards& guards = {});

/// Partial-pivot LU determinant on a row-major n x n double array.
double float_determinant(std::vector<double> a, int n);

/// Double-precision evaluation of (n!)^2 det(X_n) / (n^n det(X_{n-1})).
double perm_rank2_determinantal_double(const Matrix& x);

std::string bench_csv(const std::vector<BenchRecord>& records);
std::string stability_csv(const std::vector<StabilityRecord>& records);
nlohmann::json bench_sidecar_json(const std::vector<BenchRecord>& records);
nlohmann::json stability_sidecar_json(const std::vector<StabilityRecord>& records);

}  // namespace permident
