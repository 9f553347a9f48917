#include "permident/matrix.hpp"

#include <istream>
#include <sstream>
#include <utility>

namespace permident {

namespace {

void check_dims(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw Error("matrix dimensions must be at least 1x1");
    }
}

}  // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    check_dims(rows, cols);
    entries_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

Matrix::Matrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_dims(rows, cols);
    if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
        throw Error("matrix entry count does not match dimensions");
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
    if (rows.size() == 0) {
        throw Error("matrix dimensions must be at least 1x1");
    }
    cols_ = static_cast<int>(rows.begin()->size());
    check_dims(rows_, cols_);
    entries_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) {
            throw Error("ragged matrix initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = Rational(1);
    }
    return m;
}

bool Matrix::all_integer() const {
    for (const Rational& e : entries_) {
        if (!e.is_integer()) return false;
    }
    return true;
}

bool Matrix::has_zero_entry() const {
    for (const Rational& e : entries_) {
        if (e.is_zero()) return true;
    }
    return false;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            t.at(j, i) = at(i, j);
        }
    }
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw DimensionMismatchError("matrix product of " + std::to_string(rows_) + "x" +
                                     std::to_string(cols_) + " by " + std::to_string(rhs.rows_) +
                                     "x" + std::to_string(rhs.cols_));
    }
    Matrix p(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                p.at(i, j) += a * rhs.at(k, j);
            }
        }
    }
    return p;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix operator*(const Rational& c, const Matrix& m) {
    Matrix r = m;
    for (int i = 0; i < r.rows(); ++i) {
        for (int j = 0; j < r.cols(); ++j) {
            r.at(i, j) *= c;
        }
    }
    return r;
}

namespace {

bool is_skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

}  // namespace

Matrix Matrix::read_text(std::istream& in) {
    std::string line;
    int rows = 0, cols = 0;
    bool have_dims = false;
    std::vector<Rational> entries;
    int data_lines = 0;
    while (std::getline(in, line)) {
        if (is_skippable(line)) continue;
        std::istringstream ls(line);
        if (!have_dims) {
            if (!(ls >> rows >> cols)) {
                throw ParseError("matrix header must be 'ROWS COLS', got '" + line + "'");
            }
            std::string extra;
            if (ls >> extra) {
                throw ParseError("trailing content after matrix header: '" + extra + "'");
            }
            if (rows < 1 || cols < 1) {
                throw ParseError("matrix dimensions must be at least 1x1");
            }
            entries.reserve(static_cast<std::size_t>(rows) * cols);
            have_dims = true;
            continue;
        }
        if (data_lines == rows) {
            throw ParseError("more than " + std::to_string(rows) + " data rows in matrix");
        }
        std::string tok;
        int count = 0;
        while (ls >> tok) {
            entries.push_back(Rational::parse(tok));
            ++count;
        }
        if (count != cols) {
            throw ParseError("matrix row " + std::to_string(data_lines + 1) + " has " +
                             std::to_string(count) + " entries, expected " + std::to_string(cols));
        }
        ++data_lines;
    }
    if (!have_dims) {
        throw ParseError("empty matrix file");
    }
    if (data_lines != rows) {
        throw ParseError("matrix has " + std::to_string(data_lines) + " data rows, expected " +
                         std::to_string(rows));
    }
    return Matrix(rows, cols, std::move(entries));
}

Matrix Matrix::parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_text(in);
}

std::string Matrix::to_text() const {
    std::ostringstream out;
    out << rows_ << ' ' << cols_ << '\n';
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << at(i, j).str();
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace permident
