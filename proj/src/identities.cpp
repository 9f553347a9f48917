#include "permident/identities.hpp"

#include <random>

#include <nlohmann/json.hpp>

#include "permident/exact.hpp"

namespace permident {

nlohmann::json IdentityReport::to_json() const {
    return nlohmann::json{{"identity_name", identity_name}, {"n", n},       {"lhs", lhs.str()},
                          {"rhs", rhs.str()},               {"holds", holds}, {"notes", notes}};
}

std::string IdentityReport::to_json_line() const {
    return to_json().dump();
}

namespace {

IdentityReport make_report(std::string name, Rational lhs, Rational rhs, int n,
                           std::string notes) {
    IdentityReport r;
    r.identity_name = std::move(name);
    r.holds = (lhs == rhs);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.n = n;
    r.notes = std::move(notes);
    return r;
}

}  // namespace

IdentityReport check_main_identity(const Matrix& x, const Guards& guards) {
    if (!x.is_square()) {
        throw NotSquareError("main identity check requires a square matrix");
    }
    const int n = x.rows();
    const Integer f = factorial(static_cast<unsigned long>(n));
    const Rational lhs = Rational(f * f) * determinant(hadamard_power(x, n));
    const Rational rhs = Rational(int_pow(Integer(n), static_cast<unsigned long>(n))) *
                         determinant(hadamard_power(x, n - 1)) * perm_ryser(x, guards);
    return make_report("main", lhs, rhs, n, "rank " + std::to_string(rank(x)));
}

IdentityReport check_carlitz_levine(const Matrix& m, const Guards& guards) {
    if (!m.is_square()) {
        throw NotSquareError("Carlitz-Levine check requires a square matrix");
    }
    if (m.has_zero_entry()) {
        throw ZeroEntryError("Carlitz-Levine requires a matrix with no zero entries");
    }
    const int r = rank(m);
    if (r > 2) {
        throw RankTooHighError("Carlitz-Levine requires rank <= 2, got rank " + std::to_string(r));
    }
    const Matrix m1 = hadamard_power(m, -1);
    const Rational lhs = determinant(hadamard_power(m, -2));
    const Rational rhs = determinant(m1) * perm_ryser(m1, guards);
    return make_report("cl", lhs, rhs, m.rows(), "rank " + std::to_string(r));
}

IdentityReport check_cauchy_binet(const Matrix& a, const Matrix& b, const IndexSet& I,
                                  const IndexSet& J) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatchError("Cauchy-Binet needs cols(A) = rows(B)");
    }
    if (I.size() != J.size() || I.empty()) {
        throw BadIndexSetError("Cauchy-Binet needs |I| = |J| >= 1");
    }
    const int k = static_cast<int>(I.size());
    const int inner = a.cols();
    if (k > a.rows() || k > inner || k > b.cols()) {
        throw BadIndexSetError("Cauchy-Binet needs k <= min(m, n, p)");
    }
    const Rational lhs = minor_det(a * b, I, J);
    Rational rhs(0);
    for_each_combination(inner, k, [&](const IndexSet& K) {
        rhs += minor_det(a, I, K) * minor_det(b, K, J);
    });
    return make_report("cb", lhs, rhs, k, "inner dimension " + std::to_string(inner));
}

namespace {

Matrix one_plus_outer_power(const RationalVector& u, const RationalVector& v, long p) {
    const int n = static_cast<int>(u.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = pow(Rational(1) + u[static_cast<std::size_t>(i)] *
                                               v[static_cast<std::size_t>(j)],
                             p);
        }
    }
    return m;
}

void require_same_length(const RationalVector& u, const RationalVector& v, const char* what) {
    if (u.size() != v.size()) {
        throw LengthMismatchError(std::string(what) + " needs |u| = |v|, got " +
                                  std::to_string(u.size()) + " and " + std::to_string(v.size()));
    }
}

}  // namespace

IdentityReport check_corollary_fn1(const RationalVector& u, const RationalVector& v) {
    require_same_length(u, v, "corollary fn-1 check");
    const int n = static_cast<int>(u.size());
    const Rational lhs = determinant(one_plus_outer_power(u, v, n - 1));
    const Rational rhs =
        vandermonde(u) * vandermonde(v) * Rational(binomial_product(static_cast<unsigned long>(n - 1)));
    return make_report("fn1", lhs, rhs, n, "");
}

IdentityReport check_corollary_fn(const RationalVector& u, const RationalVector& v) {
    require_same_length(u, v, "corollary fn check");
    const int n = static_cast<int>(u.size());
    const Rational lhs = determinant(one_plus_outer_power(u, v, n));
    const std::vector<Rational> eu = elementary_symmetric_all(u);
    const std::vector<Rational> ev = elementary_symmetric_all(v);
    Rational series(0);
    for (int k = 0; k <= n; ++k) {
        series += eu[static_cast<std::size_t>(k)] * ev[static_cast<std::size_t>(k)] /
                  Rational(binomial(static_cast<unsigned long>(n), k));
    }
    const Rational rhs = vandermonde(u) * vandermonde(v) *
                         Rational(binomial_product(static_cast<unsigned long>(n))) * series;
    return make_report("fn", lhs, rhs, n, "");
}

IdentityReport check_lemma_q(const RationalVector& x, long k) {
    const int n = static_cast<int>(x.size());
    const Rational lhs = determinant(q_matrix(x, k));  // BadK validated here
    const Rational rhs = elementary_symmetric(x, n - k) * vandermonde(x);
    return make_report("lemq", lhs, rhs, n, "k = " + std::to_string(k));
}

Rational expected_charpoly(const RationalVector& eigsA, const RationalVector& eigsB,
                           const Rational& x, const Guards& guards) {
    require_same_length(eigsA, eigsB, "expected characteristic polynomial");
    const int n = static_cast<int>(eigsA.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = x - eigsA[static_cast<std::size_t>(i)] - eigsB[static_cast<std::size_t>(j)];
        }
    }
    return perm_auto(m, guards).value / Rational(factorial(static_cast<unsigned long>(n)));
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix64(seed ^ splitmix64(trial));
}

Matrix random_rank2(int n, int entry_bound, std::uint64_t seed, SampleMode mode,
                    int max_attempts) {
    if (n < 1 || entry_bound < 1) {
        throw Error("random_rank2 needs n >= 1 and entry_bound >= 1");
    }
    std::mt19937_64 rng(seed);
    const long lo = (mode == SampleMode::Positive) ? 1 : -entry_bound;
    const long hi = entry_bound;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    auto draw = [&]() -> Rational { return Rational(lo + static_cast<long>(rng() % span)); };
    auto draw_vec = [&](RationalVector& v) {
        for (Rational& e : v) e = draw();
    };

    RationalVector u(n), v(n), w(n), x(n);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        draw_vec(u);
        draw_vec(v);
        draw_vec(w);
        draw_vec(x);
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)] +
                             w[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
            }
        }
        bool ok = true;
        if (mode == SampleMode::NoZero) {
            ok = !m.has_zero_entry();
        } else if (mode == SampleMode::Positive) {
            for (const Rational& e : m.entries()) {
                if (e.sign() <= 0) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return m;
    }
    throw ExhaustedResamplingError("random_rank2 failed to satisfy the mode constraint after " +
                                   std::to_string(max_attempts) + " attempts");
}

}  // namespace permident
