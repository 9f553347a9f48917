#include "permident/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace permident {

Matrix hadamard_power(const Matrix& m, long p) {
    Matrix r(m.rows(), m.cols());
    if (p < 0) {
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) {
                if (m.at(i, j).is_zero()) {
                    throw ZeroEntryError("zero entry at (" + std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) + ") under negative Hadamard power");
                }
            }
        }
    }
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            r.at(i, j) = pow(m.at(i, j), p);
        }
    }
    return r;
}

namespace {

// Fraction-free Bareiss elimination; divisions are exact by construction.
Rational bareiss_det(const Matrix& m) {
    const int n = m.rows();
    std::vector<Integer> a;
    a.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a.push_back(m.at(i, j).num());
        }
    }
    auto e = [&](int i, int j) -> Integer& { return a[static_cast<std::size_t>(i) * n + j]; };

    int sign = 1;
    Integer prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r) {
            if (e(r, k) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return Rational(0);
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(e(k, j), e(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer t = e(k, k) * e(i, j) - e(i, k) * e(k, j);
                mpz_divexact(e(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            e(i, k) = 0;
        }
        prev = e(k, k);
    }
    Integer d = e(n - 1, n - 1);
    return Rational(sign < 0 ? Integer(-d) : d);
}

Rational gauss_det(const Matrix& m) {
    const int n = m.rows();
    std::vector<Rational> a(m.entries());
    auto e = [&](int i, int j) -> Rational& { return a[static_cast<std::size_t>(i) * n + j]; };

    int sign = 1;
    Rational det(1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r) {
            if (!e(r, k).is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return Rational(0);
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(e(k, j), e(piv, j));
            sign = -sign;
        }
        det *= e(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (e(i, k).is_zero()) continue;
            Rational f = e(i, k) / e(k, k);
            for (int j = k + 1; j < n; ++j) {
                e(i, j) -= f * e(k, j);
            }
            e(i, k) = Rational(0);
        }
    }
    return sign < 0 ? -det : det;
}

}  // namespace

Rational determinant(const Matrix& m) {
    if (!m.is_square()) {
        throw NotSquareError("determinant of a " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
    }
    return m.all_integer() ? bareiss_det(m) : gauss_det(m);
}

namespace {

IndexSet validated_sorted(const IndexSet& idx, int limit, const char* what) {
    if (idx.empty()) {
        throw BadIndexSetError(std::string("empty ") + what + " index set");
    }
    IndexSet s = idx;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > limit) {
            throw BadIndexSetError(std::string(what) + " index " + std::to_string(s[i]) +
                                   " out of range [1," + std::to_string(limit) + "]");
        }
        if (i > 0 && s[i] == s[i - 1]) {
            throw BadIndexSetError(std::string("duplicate ") + what + " index " +
                                   std::to_string(s[i]));
        }
    }
    return s;
}

}  // namespace

Rational minor_det(const Matrix& m, const IndexSet& I, const IndexSet& J) {
    if (I.size() != J.size()) {
        throw BadIndexSetError("row and column index sets must have equal size");
    }
    IndexSet ri = validated_sorted(I, m.rows(), "row");
    IndexSet ci = validated_sorted(J, m.cols(), "column");
    const int k = static_cast<int>(ri.size());
    Matrix sub(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            sub.at(i, j) = m.at(ri[i] - 1, ci[j] - 1);
        }
    }
    return determinant(sub);
}

int rank(const Matrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<Rational> a(m.entries());
    auto e = [&](int i, int j) -> Rational& { return a[static_cast<std::size_t>(i) * cols + j]; };

    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (!e(i, c).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = c; j < cols; ++j) std::swap(e(r, j), e(piv, j));
        }
        for (int i = r + 1; i < rows; ++i) {
            if (e(i, c).is_zero()) continue;
            Rational f = e(i, c) / e(r, c);
            for (int j = c; j < cols; ++j) {
                e(i, j) -= f * e(r, j);
            }
        }
        ++r;
    }
    return r;
}

Matrix Rank2Decomposition::reconstruct() const {
    const int n = static_cast<int>(u.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = u[i] * v[j] + w[i] * x[j];
        }
    }
    return m;
}

Rank2Decomposition rank2_decompose(const Matrix& m) {
    if (!m.is_square()) {
        throw NotSquareError("rank-2 decomposition of a rectangular matrix");
    }
    const int n = m.rows();
    Rank2Decomposition d;
    d.u.assign(n, Rational(0));
    d.v.assign(n, Rational(0));
    d.w.assign(n, Rational(0));
    d.x.assign(n, Rational(0));

    // First nonzero row becomes basis row v (normalized to a leading 1).
    int a = -1, p1 = -1;
    for (int i = 0; i < n && a < 0; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!m.at(i, j).is_zero()) {
                a = i;
                p1 = j;
                break;
            }
        }
    }
    if (a < 0) {
        return d;  // zero matrix
    }
    for (int j = 0; j < n; ++j) {
        d.v[j] = m.at(a, j) / m.at(a, p1);
    }

    // First row independent of v becomes basis row x, reduced against v and
    // normalized; v is then reduced against x so coefficients can be read
    // off columns p1 and p2 directly.
    int p2 = -1;
    for (int i = a + 1; i < n && p2 < 0; ++i) {
        std::vector<Rational> res(n);
        const Rational& t = m.at(i, p1);
        for (int j = 0; j < n; ++j) {
            res[j] = m.at(i, j) - t * d.v[j];
        }
        for (int j = 0; j < n; ++j) {
            if (!res[j].is_zero()) {
                p2 = j;
                for (int jj = 0; jj < n; ++jj) {
                    d.x[jj] = res[jj] / res[p2];
                }
                break;
            }
        }
    }
    if (p2 >= 0) {
        const Rational vp2 = d.v[p2];
        for (int j = 0; j < n; ++j) {
            d.v[j] -= vp2 * d.x[j];
        }
    }

    for (int i = 0; i < n; ++i) {
        d.u[i] = m.at(i, p1);
        if (p2 >= 0) d.w[i] = m.at(i, p2);
    }

    // Any residue left means a third independent row.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational rec = d.u[i] * d.v[j] + d.w[i] * d.x[j];
            if (rec != m.at(i, j)) {
                throw RankTooHighError("matrix rank exceeds 2");
            }
        }
    }
    return d;
}

}  // namespace permident
