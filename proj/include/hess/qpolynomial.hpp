#pragma once

// Exact polynomials in q with arbitrary-precision integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "hess/errors.hpp"

namespace hess {

using BigInt = boost::multiprecision::cpp_int;

class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(std::initializer_list<long long> coeffs);
    explicit QPolynomial(std::vector<BigInt> coeffs);

    static QPolynomial constant(long long c) { return QPolynomial{c}; }
    static QPolynomial monomial(int degree, BigInt c = 1);
    // [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
    static QPolynomial q_integer(int n);
    static QPolynomial q_factorial(int n);

    // Ascending; empty for the zero polynomial, otherwise last entry nonzero.
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(int k) const;
    bool is_palindromic() const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    QPolynomial& operator*=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }

    QPolynomial pow(unsigned e) const;

    bool operator==(const QPolynomial&) const = default;

    std::vector<long long> to_int64() const;  // throws InvalidArgs on overflow
    std::string to_string() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPolynomial& p);

class NonExactDivision : public Error {
public:
    NonExactDivision(const std::string& what, QPolynomial remainder)
        : Error(ErrorKind::NonExactDivision, what), remainder_(std::move(remainder)) {}
    const QPolynomial& remainder() const noexcept { return remainder_; }

private:
    QPolynomial remainder_;
};

// Quotient with quotient * den == num; throws NonExactDivision otherwise
// (also when an integer coefficient division is inexact).
QPolynomial exact_div(const QPolynomial& num, const QPolynomial& den);

// [n choose k]_q; throws InvalidArgs unless n >= k >= 0.
QPolynomial qbinomial(int n, int k);

// Product of [k]_q^{m_k} over a factorization map k -> m_k, where negative
// multiplicities divide. The numerator and denominator are accumulated
// separately and divided once.
QPolynomial from_q_integer_factors(const std::map<int, int>& factors);

}  // namespace hess
