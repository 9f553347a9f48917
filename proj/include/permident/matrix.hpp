#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "permident/rational.hpp"

namespace permident {

/*
 * Dense rectangular matrix of exact rationals, row-major storage.
 * Dimensions are at least 1x1.
 */
class Matrix {
public:
    Matrix(int rows, int cols);
    Matrix(int rows, int cols, std::vector<Rational> entries);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    const std::vector<Rational>& entries() const { return entries_; }

    bool all_integer() const;
    bool has_zero_entry() const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;  // DimensionMismatch

    friend bool operator==(const Matrix& a, const Matrix& b);

    /*
     * Text file format: optional '#'-comment lines, a "ROWS COLS" line, then
     * ROWS lines of COLS whitespace-separated rational tokens. to_text()
     * emits the canonical form, which parse_text() round-trips bit-exactly.
     */
    static Matrix parse_text(std::string_view text);
    static Matrix read_text(std::istream& in);
    std::string to_text() const;

private:
    int rows_;
    int cols_;
    std::vector<Rational> entries_;
};

Matrix operator*(const Rational& c, const Matrix& m);

}  // namespace permident
