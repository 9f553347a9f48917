#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "permident/permanent.hpp"

namespace permident {

/*
 * Outcome of one exact identity check. Both sides are carried verbatim:
 * a violation is a finding, not just a failed boolean.
 */
struct IdentityReport {
    std::string identity_name;
    Rational lhs;
    Rational rhs;
    bool holds = false;  // lhs == rhs exactly
    int n = 0;
    std::string notes;

    nlohmann::json to_json() const;
    std::string to_json_line() const;
};

/// (n!)^2 det(X_n) vs n^n det(X_{n-1}) perm(X). Produced for any square X;
/// rank > 2 inputs serve as negative controls (rank recorded in notes).
IdentityReport check_main_identity(const Matrix& x, const Guards& guards = {});

/// Carlitz-Levine: det(M_{-2}) vs det(M_{-1}) perm(M_{-1}) for rank <= 2
/// matrices with no zero entries.
IdentityReport check_carlitz_levine(const Matrix& m, const Guards& guards = {});

/// Cauchy-Binet: minor(AB; I, J) vs the sum of minor(A; I, K) minor(B; K, J)
/// over k-subsets K of the inner index range.
IdentityReport check_cauchy_binet(const Matrix& a, const Matrix& b, const IndexSet& I,
                                  const IndexSet& J);

/// det[(1 + u_i v_j)^{n-1}] vs Delta(u) Delta(v) prod_j C(n-1, j).
IdentityReport check_corollary_fn1(const RationalVector& u, const RationalVector& v);

/// det[(1 + u_i v_j)^n] vs
/// Delta(u) Delta(v) prod_j C(n, j) sum_k e_k(u) e_k(v) / C(n, k).
IdentityReport check_corollary_fn(const RationalVector& u, const RationalVector& v);

/// det(Q_x^k) vs e_{n-k}(x) Delta(x).
IdentityReport check_lemma_q(const RationalVector& x, long k);

/// Expected characteristic polynomial of A + Q^T B Q over Haar-random
/// orthogonal Q, via the closed form perm({x - a_i - b_j}) / n!.
Rational expected_charpoly(const RationalVector& eigsA, const RationalVector& eigsB,
                           const Rational& x, const Guards& guards = {});

enum class SampleMode { General, NoZero, Positive };

/*
 * Deterministic rank <= 2 test-input generator: X = u v^T + w x^T with
 * integer vectors drawn from [-entry_bound, entry_bound] (or
 * [1, entry_bound] in Positive mode). NoZero and Positive modes resample
 * until the entry constraint holds; ExhaustedResampling after
 * max_attempts draws.
 */
Matrix random_rank2(int n, int entry_bound, std::uint64_t seed, SampleMode mode,
                    int max_attempts = 1000);

/// Per-trial seed derivation so randomized sweeps can run trials
/// concurrently yet reproducibly.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Lexicographic enumeration of the 1-based k-subsets of [n].
template <typename F>
void for_each_combination(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    IndexSet c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        f(static_cast<const IndexSet&>(c));
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

}  // namespace permident
