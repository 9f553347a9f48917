#pragma once

#include <vector>

#include "permident/matrix.hpp"

namespace permident {

/// 1-based row/column index set for minors; validated where consumed.
using IndexSet = std::vector<int>;

/// Entrywise p-th power. p = 0 gives the all-ones matrix (0^0 = 1 here);
/// p < 0 requires every entry nonzero (ZeroEntry otherwise).
Matrix hadamard_power(const Matrix& m, long p);

/// Exact determinant: fraction-free Bareiss on integer matrices, rational
/// Gaussian elimination otherwise. Pivot is the first row with a nonzero
/// entry in the current column. NotSquare on rectangular input.
Rational determinant(const Matrix& m);

/// Determinant of the submatrix with rows I and columns J (1-based, taken
/// in increasing order). BadIndexSet when |I| != |J|, empty, out of range,
/// or duplicated.
Rational minor_det(const Matrix& m, const IndexSet& I, const IndexSet& J);

/// Exact rank over the rationals.
int rank(const Matrix& m);

/*
 * Certificate that X = u v^T + w x^T exactly. Rank <= 1 inputs get
 * w = x = 0; the zero matrix gets all four vectors zero.
 */
struct Rank2Decomposition {
    std::vector<Rational> u, v, w, x;

    /// Rebuilds the n x n matrix u v^T + w x^T.
    Matrix reconstruct() const;
};

/// Deterministic exact decomposition of a square matrix of rank <= 2.
/// Throws RankTooHigh above rank 2, NotSquare on rectangular input.
Rank2Decomposition rank2_decompose(const Matrix& m);

}  // namespace permident
