#include "hess/qpolynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace hess {

QPolynomial::QPolynomial(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPolynomial QPolynomial::monomial(int degree, BigInt c) {
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = std::move(c);
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::q_integer(int n) {
    return QPolynomial(std::vector<BigInt>(static_cast<std::size_t>(std::max(n, 0)), 1));
}

QPolynomial QPolynomial::q_factorial(int n) {
    QPolynomial out{1};
    for (int i = 2; i <= n; ++i) out *= q_integer(i);
    return out;
}

void QPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

bool QPolynomial::is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(coeffs_.size() / 2),
                      coeffs_.rbegin());
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

QPolynomial QPolynomial::pow(unsigned e) const {
    QPolynomial result{1}, base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::vector<long long> QPolynomial::to_int64() const {
    std::vector<long long> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
            throw Error(ErrorKind::InvalidArgs, "coefficient does not fit in 64 bits");
        out.push_back(static_cast<long long>(c));
    }
    return out;
}

std::string QPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) os << mag;
        if (k >= 1) os << "q";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.to_string(); }

QPolynomial exact_div(const QPolynomial& num, const QPolynomial& den) {
    if (den.is_zero()) throw Error(ErrorKind::InvalidArgs, "division by the zero polynomial");
    if (num.is_zero()) return {};
    std::vector<BigInt> rem = num.coeffs();
    const auto& d = den.coeffs();
    const BigInt& lead = d.back();
    if (rem.size() < d.size()) throw NonExactDivision("degree of numerator below denominator", num);
    std::vector<BigInt> quot(rem.size() - d.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt& top = rem[k + d.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) throw NonExactDivision("inexact integer coefficient division", QPolynomial(rem));
        BigInt c = top / lead;
        for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
        quot[k] = std::move(c);
    }
    QPolynomial r(std::move(rem));
    if (!r.is_zero()) throw NonExactDivision("nonzero remainder " + r.to_string(), r);
    return QPolynomial(std::move(quot));
}

QPolynomial qbinomial(int n, int k) {
    if (k < 0 || n < k) throw Error(ErrorKind::InvalidArgs, "qbinomial needs n >= k >= 0");
    return exact_div(QPolynomial::q_factorial(n), QPolynomial::q_factorial(k) * QPolynomial::q_factorial(n - k));
}

QPolynomial from_q_integer_factors(const std::map<int, int>& factors) {
    QPolynomial num{1}, den{1};
    for (const auto& [k, m] : factors) {
        if (m > 0) num *= QPolynomial::q_integer(k).pow(static_cast<unsigned>(m));
        if (m < 0) den *= QPolynomial::q_integer(k).pow(static_cast<unsigned>(-m));
    }
    return exact_div(num, den);
}

}  // namespace hess
