#include "permident/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <limits>

#include <nlohmann/json.hpp>

#include "permident/exact.hpp"

namespace permident {

const char* to_string(BenchMethod m) {
    switch (m) {
        case BenchMethod::Naive: return "naive";
        case BenchMethod::Ryser: return "ryser";
        case BenchMethod::RyserSerial: return "ryser-serial";
        case BenchMethod::Determinantal: return "det";
    }
    return "?";
}

BenchMethod bench_method_from_string(const std::string& name) {
    if (name == "naive") return BenchMethod::Naive;
    if (name == "ryser") return BenchMethod::Ryser;
    if (name == "ryser-serial") return BenchMethod::RyserSerial;
    if (name == "det") return BenchMethod::Determinantal;
    throw ParseError("unknown bench method '" + name + "'");
}

namespace {

int decimal_digits(const Integer& v) {
    if (v == 0) return 1;
    const std::string s = Integer(abs(v)).get_str();
    return static_cast<int>(s.size());
}

Rational run_method(BenchMethod m, const Matrix& x, const Guards& guards) {
    switch (m) {
        case BenchMethod::Naive: return perm_naive(x, guards);
        case BenchMethod::Ryser: return perm_ryser(x, guards);
        case BenchMethod::RyserSerial: return perm_ryser_serial(x, guards);
        case BenchMethod::Determinantal: return perm_rank2_determinantal(x);
    }
    throw Error("unreachable");
}

void check_guard(BenchMethod m, int n, const Guards& guards) {
    switch (m) {
        case BenchMethod::Naive:
            if (n > guards.naive_max) {
                throw TooLargeError("bench size " + std::to_string(n) +
                                    " exceeds the naive guard");
            }
            break;
        case BenchMethod::Ryser:
        case BenchMethod::RyserSerial:
            if (n > guards.ryser_max) {
                throw TooLargeError("bench size " + std::to_string(n) +
                                    " exceeds the Ryser guard");
            }
            break;
        case BenchMethod::Determinantal:
            break;  // polynomial time, no guard
    }
}

}  // namespace

std::vector<BenchRecord> bench_permanent(const std::vector<int>& sizes,
                                         const std::vector<BenchMethod>& methods,
                                         std::uint64_t seed, const Guards& guards) {
    using clock = std::chrono::steady_clock;
    std::vector<BenchRecord> out;
    for (int n : sizes) {
        for (BenchMethod m : methods) check_guard(m, n, guards);

        // Resample until the determinantal denominator is nonzero so every
        // requested engine can run on the same matrix.
        Matrix x(1, 1);
        bool found = false;
        for (int attempt = 0; attempt < 64 && !found; ++attempt) {
            x = random_rank2(n, 9,
                             trial_seed(seed, (static_cast<std::uint64_t>(n) << 16) |
                                                  static_cast<std::uint64_t>(attempt)),
                             SampleMode::General);
            found = !determinant(hadamard_power(x, n - 1)).is_zero();
        }
        if (!found) {
            throw ExhaustedResamplingError("no non-degenerate rank-2 matrix found for n = " +
                                           std::to_string(n));
        }

        bool have_value = false;
        Rational reference;
        for (BenchMethod m : methods) {
            std::vector<double> times;
            Rational value;
            for (int rep = 0; rep < 3; ++rep) {
                const auto t0 = clock::now();
                value = run_method(m, x, guards);
                const auto t1 = clock::now();
                times.push_back(std::chrono::duration<double>(t1 - t0).count());
            }
            std::sort(times.begin(), times.end());
            if (have_value && value != reference) {
                throw Error("engine value mismatch at n = " + std::to_string(n) + " for method " +
                            to_string(m));
            }
            reference = value;
            have_value = true;
            BenchRecord rec;
            rec.n = n;
            rec.method = to_string(m);
            rec.wall_time_s = times[1];
            rec.value_digits = decimal_digits(value.num());
            rec.value = value;
            out.push_back(std::move(rec));
        }
    }
    return out;
}

double float_determinant(std::vector<double> a, int n) {
    auto e = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    double det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int r = k + 1; r < n; ++r) {
            if (std::fabs(e(r, k)) > std::fabs(e(piv, k))) piv = r;
        }
        if (e(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(e(k, j), e(piv, j));
            det = -det;
        }
        det *= e(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double f = e(i, k) / e(k, k);
            if (f == 0.0) continue;
            for (int j = k + 1; j < n; ++j) {
                e(i, j) -= f * e(k, j);
            }
            e(i, k) = 0.0;
        }
    }
    return det;
}

namespace {

double float_pow_int(double base, int p) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= base;
    return r;
}

}  // namespace

double perm_rank2_determinantal_double(const Matrix& x) {
    if (!x.is_square()) {
        throw NotSquareError("float determinantal permanent requires a square matrix");
    }
    const int n = x.rows();
    std::vector<double> entries(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            entries[static_cast<std::size_t>(i) * n + j] = x.at(i, j).to_double();
        }
    }
    std::vector<double> num_pow(entries.size()), den_pow(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        den_pow[i] = float_pow_int(entries[i], n - 1);
        num_pow[i] = den_pow[i] * entries[i];
    }
    const double fact = factorial(static_cast<unsigned long>(n)).get_d();
    const double nn = int_pow(Integer(n), static_cast<unsigned long>(n)).get_d();
    return (fact * fact * float_determinant(std::move(num_pow), n)) /
           (nn * float_determinant(std::move(den_pow), n));
}

std::vector<StabilityRecord> stability_experiment(int n, const std::vector<Rational>& epsilons,
                                                  std::uint64_t seed, const Guards& guards) {
    if (n > guards.ryser_max) {
        throw TooLargeError("stability experiment needs n within the Ryser guard");
    }
    // Fixed positive integer vectors; only eps varies across the sweep.
    // Resampled until the eps = 1 instance has a nonzero denominator
    // determinant, so degeneracy in the sweep comes from eps alone.
    RationalVector u(static_cast<std::size_t>(n)), v = u, w = u, x = u;
    bool found = false;
    for (std::uint64_t attempt = 0; attempt < 64 && !found; ++attempt) {
        std::mt19937_64 rng(trial_seed(seed, attempt));
        auto draw_vec = [&](RationalVector& vec) {
            for (Rational& e : vec) e = Rational(1 + static_cast<long>(rng() % 9));
        };
        draw_vec(u);
        draw_vec(v);
        draw_vec(w);
        draw_vec(x);
        Matrix probe(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                probe.at(i, j) = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] +
                                 w[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
            }
        }
        found = !determinant(hadamard_power(probe, n - 1)).is_zero();
    }
    if (!found) {
        throw ExhaustedResamplingError("stability experiment found no non-degenerate base matrix");
    }

    std::vector<StabilityRecord> out;
    out.reserve(epsilons.size());
    for (const Rational& eps : epsilons) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] +
                             eps * w[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
            }
        }
        StabilityRecord rec;
        rec.epsilon = eps;
        rec.exact_value = perm_ryser(m, guards);
        rec.degenerate = determinant(hadamard_power(m, n - 1)).is_zero();
        rec.float_value = perm_rank2_determinantal_double(m);
        if (!std::isfinite(rec.float_value)) {
            rec.relative_error = std::numeric_limits<double>::infinity();
        } else if (rec.exact_value.is_zero()) {
            rec.relative_error =
                rec.float_value == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        } else {
            const Rational fv = rational_from_double(rec.float_value);
            rec.relative_error = (abs(fv - rec.exact_value) / abs(rec.exact_value)).to_double();
        }
        out.push_back(std::move(rec));
    }
    return out;
}

namespace {

std::string format_double(double v, const char* fmt) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

}  // namespace

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::string s = "n,method,wall_time_s,value_digits\n";
    for (const BenchRecord& r : records) {
        s += std::to_string(r.n) + "," + r.method + "," + format_double(r.wall_time_s, "%.6f") +
             "," + std::to_string(r.value_digits) + "\n";
    }
    return s;
}

std::string stability_csv(const std::vector<StabilityRecord>& records) {
    std::string s = "epsilon,relative_error\n";
    for (const StabilityRecord& r : records) {
        s += r.epsilon.str() + "," + format_double(r.relative_error, "%.9e") + "\n";
    }
    return s;
}

nlohmann::json bench_sidecar_json(const std::vector<BenchRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BenchRecord& r : records) {
        arr.push_back({{"n", r.n},
                       {"method", r.method},
                       {"wall_time_s", r.wall_time_s},
                       {"value_digits", r.value_digits},
                       {"value", r.value.str()}});
    }
    return arr;
}

nlohmann::json stability_sidecar_json(const std::vector<StabilityRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const StabilityRecord& r : records) {
        arr.push_back({{"epsilon", r.epsilon.str()},
                       {"exact_value", r.exact_value.str()},
                       {"float_value", r.float_value},
                       {"relative_error", r.relative_error},
                       {"degenerate", r.degenerate}});
    }
    return arr;
}

}  // namespace permident
