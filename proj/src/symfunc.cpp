#include "permident/symfunc.hpp"

#include <sstream>

namespace permident {

std::vector<Rational> elementary_symmetric_all(const RationalVector& x) {
    const std::size_t n = x.size();
    std::vector<Rational> e(n + 1, Rational(0));
    e[0] = Rational(1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k >= 1; --k) {
            e[k] += x[i] * e[k - 1];
        }
    }
    return e;
}

Rational elementary_symmetric(const RationalVector& x, long k) {
    if (k == 0) return Rational(1);
    if (k < 0 || static_cast<std::size_t>(k) > x.size()) return Rational(0);
    return elementary_symmetric_all(x)[static_cast<std::size_t>(k)];
}

Rational power_sum(const RationalVector& x, long k) {
    if (k < 1) {
        throw Error("power sum requires k >= 1");
    }
    Rational s(0);
    for (const Rational& xi : x) {
        s += pow(xi, k);
    }
    return s;
}

Rational vandermonde(const RationalVector& x) {
    const std::size_t n = x.size();
    Rational p(1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            p *= x[j] - x[i];
        }
    }
    return p;
}

Matrix q_matrix(const RationalVector& x, long k) {
    const int n = static_cast<int>(x.size());
    if (k < 0 || k > n) {
        throw BadKError("q_matrix k = " + std::to_string(k) + " outside [0," + std::to_string(n) +
                        "]");
    }
    Matrix q(n, n);
    for (int i = 1; i <= n; ++i) {
        const long p = (i > k) ? i : i - 1;
        for (int j = 0; j < n; ++j) {
            q.at(i - 1, j) = pow(x[static_cast<std::size_t>(j)], p);
        }
    }
    return q;
}

RationalVector parse_vector(std::string_view text) {
    RationalVector out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) {
            throw ParseError("empty entry in vector '" + std::string(text) + "'");
        }
        const auto last = item.find_last_not_of(" \t\r\n");
        out.push_back(Rational::parse(std::string_view(item).substr(first, last - first + 1)));
    }
    if (out.empty()) {
        throw ParseError("vector must have at least one entry");
    }
    return out;
}

std::string format_vector(const RationalVector& x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ',';
        s += x[i].str();
    }
    return s;
}

}  // namespace permident
