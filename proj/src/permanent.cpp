#include "permident/permanent.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "permident/exact.hpp"

namespace permident {

const char* to_string(PermMethod m) {
    switch (m) {
        case PermMethod::Naive: return "naive";
        case PermMethod::Ryser: return "ryser";
        case PermMethod::Structured: return "structured";
        case PermMethod::Determinantal: return "determinantal";
    }
    return "?";
}

namespace {

void require_square(const Matrix& m, const char* what) {
    if (!m.is_square()) {
        throw NotSquareError(std::string(what) + " requires a square matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

void require_within(int n, int guard, const char* what) {
    if (n > guard) {
        throw TooLargeError(std::string(what) + " guard exceeded: n = " + std::to_string(n) +
                            " > " + std::to_string(guard));
    }
}

void naive_rec(const Matrix& m, int row, std::uint32_t used, const Rational& partial,
               Rational& sum) {
    const int n = m.rows();
    if (row == n) {
        sum += partial;
        return;
    }
    for (int j = 0; j < n; ++j) {
        if (used & (1u << j)) continue;
        naive_rec(m, row + 1, used | (1u << j), partial * m.at(row, j), sum);
    }
}

}  // namespace

Rational perm_naive(const Matrix& m, const Guards& guards) {
    require_square(m, "perm_naive");
    require_within(m.rows(), guards.naive_max, "perm_naive");
    Rational sum(0);
    naive_rec(m, 0, 0, Rational(1), sum);
    return sum;
}

Rational perm_ryser_serial(const Matrix& m, const Guards& guards) {
    require_square(m, "perm_ryser_serial");
    const int n = m.rows();
    require_within(n, guards.ryser_max, "perm_ryser_serial");
    const std::uint64_t total = std::uint64_t(1) << n;
    Rational sum(0);
    for (std::uint64_t s = 1; s < total; ++s) {
        Rational prod(1);
        for (int i = 0; i < n; ++i) {
            Rational rowsum(0);
            for (int j = 0; j < n; ++j) {
                if (s & (std::uint64_t(1) << j)) rowsum += m.at(i, j);
            }
            prod *= rowsum;
        }
        if ((n - std::popcount(s)) & 1) {
            sum -= prod;
        } else {
            sum += prod;
        }
    }
    return sum;
}

namespace {

// One contiguous Gray-ordered slice [lo, hi) of the subset indices.
// Row sums are seeded from gray(lo) and updated one column per step.
template <typename Scalar, typename EntryAt>
Scalar ryser_range(const EntryAt& entry, int n, std::uint64_t lo, std::uint64_t hi) {
    std::vector<Scalar> rowsum(static_cast<std::size_t>(n), Scalar(0));
    std::uint64_t gray = lo ^ (lo >> 1);
    for (int j = 0; j < n; ++j) {
        if (gray & (std::uint64_t(1) << j)) {
            for (int i = 0; i < n; ++i) rowsum[i] += entry(i, j);
        }
    }
    Scalar sum(0), prod;
    for (std::uint64_t k = lo; k < hi; ++k) {
        if (k != lo) {
            const int b = std::countr_zero(k);
            const std::uint64_t bit = std::uint64_t(1) << b;
            gray ^= bit;
            if (gray & bit) {
                for (int i = 0; i < n; ++i) rowsum[i] += entry(i, b);
            } else {
                for (int i = 0; i < n; ++i) rowsum[i] -= entry(i, b);
            }
        }
        prod = rowsum[0];
        for (int i = 1; i < n && prod != 0; ++i) prod *= rowsum[i];
        if ((n - std::popcount(gray)) & 1) {
            sum -= prod;
        } else {
            sum += prod;
        }
    }
    return sum;
}

template <typename Scalar, typename EntryAt>
Scalar ryser_chunked(const EntryAt& entry, int n) {
    const std::uint64_t total = std::uint64_t(1) << n;
    int nchunks = 1;
#ifdef _OPENMP
    if (n >= 14) {
        nchunks = 4 * omp_get_max_threads();
    }
#endif
    if (nchunks <= 1) {
        return ryser_range<Scalar>(entry, n, 1, total);
    }
    const std::uint64_t subsets = total - 1;
    std::vector<Scalar> partial(static_cast<std::size_t>(nchunks), Scalar(0));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int c = 0; c < nchunks; ++c) {
        const std::uint64_t lo = 1 + subsets * c / nchunks;
        const std::uint64_t hi = 1 + subsets * (c + 1) / nchunks;
        if (lo < hi) {
            partial[static_cast<std::size_t>(c)] = ryser_range<Scalar>(entry, n, lo, hi);
        }
    }
    Scalar sum(0);
    for (const Scalar& p : partial) sum += p;
    return sum;
}

}  // namespace

Rational perm_ryser(const Matrix& m, const Guards& guards) {
    require_square(m, "perm_ryser");
    const int n = m.rows();
    require_within(n, guards.ryser_max, "perm_ryser");
    if (m.all_integer()) {
        auto entry = [&](int i, int j) -> const Integer& { return m.at(i, j).num(); };
        return Rational(ryser_chunked<Integer>(entry, n));
    }
    auto entry = [&](int i, int j) -> const Rational& { return m.at(i, j); };
    return ryser_chunked<Rational>(entry, n);
}

Rational perm_rank2_structured(const RationalVector& u, const RationalVector& v) {
    if (u.size() != v.size()) {
        throw LengthMismatchError("structured permanent needs |u| = |v|, got " +
                                  std::to_string(u.size()) + " and " + std::to_string(v.size()));
    }
    const unsigned long n = u.size();
    const std::vector<Rational> eu = elementary_symmetric_all(u);
    const std::vector<Rational> ev = elementary_symmetric_all(v);
    Rational sum(0);
    for (unsigned long k = 0; k <= n; ++k) {
        sum += Rational(factorial(k) * factorial(n - k)) * eu[k] * ev[k];
    }
    return sum;
}

Rational perm_rank2_determinantal(const Matrix& x) {
    require_square(x, "perm_rank2_determinantal");
    const int n = x.rows();
    if (rank(x) > 2) {
        throw RankTooHighError("determinantal permanent needs rank <= 2");
    }
    const Rational den_det = determinant(hadamard_power(x, n - 1));
    if (den_det.is_zero()) {
        throw DegenerateDenominatorError(
            "det of the (n-1)-st Hadamard power is zero; permanent not recoverable");
    }
    const Rational num_det = determinant(hadamard_power(x, n));
    const Integer f = factorial(static_cast<unsigned long>(n));
    const Integer nn = int_pow(Integer(n), static_cast<unsigned long>(n));
    return Rational(f * f) * num_det / (Rational(nn) * den_det);
}

PermanentResult perm_auto(const Matrix& m, const Guards& guards) {
    require_square(m, "perm_auto");
    const int n = m.rows();
    std::string reason;
    const int r = rank(m);
    if (r <= 2) {
        const Rational den_det = determinant(hadamard_power(m, n - 1));
        if (!den_det.is_zero()) {
            const Rational num_det = determinant(hadamard_power(m, n));
            const Integer f = factorial(static_cast<unsigned long>(n));
            const Integer nn = int_pow(Integer(n), static_cast<unsigned long>(n));
            return {Rational(f * f) * num_det / (Rational(nn) * den_det),
                    PermMethod::Determinantal, ""};
        }
        reason = "degenerate denominator";
    } else {
        reason = "rank " + std::to_string(r);
    }
    if (n <= guards.naive_max) {
        return {perm_naive(m, guards), PermMethod::Naive, reason};
    }
    if (n <= guards.ryser_max) {
        return {perm_ryser(m, guards), PermMethod::Ryser, reason};
    }
    throw TooLargeError("no permanent engine can handle n = " + std::to_string(n) + " (" + reason +
                        ")");
}

}  // namespace permident
