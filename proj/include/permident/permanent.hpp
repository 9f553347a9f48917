#pragma once

#include <string>

#include "permident/linalg.hpp"
#include "permident/symfunc.hpp"

namespace permident {

/// Size guards for the exponential engines. Overridable by callers;
/// the CLI honors PERMIDENT_MAX_N for the Ryser guard.
struct Guards {
    int naive_max = 10;
    int ryser_max = 30;
};

enum class PermMethod { Naive, Ryser, Structured, Determinantal };

const char* to_string(PermMethod m);

struct PermanentResult {
    Rational value;
    PermMethod method;
    std::string fallback_reason;  // empty unless the determinantal path was abandoned
};

/// Permutation-sum oracle. NotSquare; TooLarge above guards.naive_max.
Rational perm_naive(const Matrix& m, const Guards& guards = {});

/*
 * Ryser inclusion-exclusion
 *   perm(M) = (-1)^n sum_{S != 0} (-1)^{|S|} prod_i sum_{j in S} M(i, j)
 * with Gray-code single-column row-sum updates, an integer fast path, and
 * OpenMP-chunked subset ranges. Exact arithmetic makes the chunked sum
 * equal to the sequential one. NotSquare; TooLarge above guards.ryser_max.
 */
Rational perm_ryser(const Matrix& m, const Guards& guards = {});

/// Serial reference: plain subset enumeration with row sums recomputed
/// from scratch, O(2^n n^2). Kept for testing the production kernel.
Rational perm_ryser_serial(const Matrix& m, const Guards& guards = {});

/// perm of the matrix A(i,j) = 1 + u_i v_j in O(n^2) via
/// sum_k k! (n-k)! e_k(u) e_k(v). LengthMismatch when |u| != |v|.
Rational perm_rank2_structured(const RationalVector& u, const RationalVector& v);

/// Determinantal permanent for rank <= 2 matrices:
/// (n!)^2 det(X_n) / (n^n det(X_{n-1})) with X_p the entrywise p-th power.
/// RankTooHigh above rank 2; DegenerateDenominator when det(X_{n-1}) = 0.
Rational perm_rank2_determinantal(const Matrix& x);

/// Dispatcher: determinantal when rank <= 2 and the denominator is
/// nonzero, otherwise naive then Ryser within their guards.
PermanentResult perm_auto(const Matrix& m, const Guards& guards = {});

}  // namespace permident
