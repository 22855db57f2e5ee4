#include <gtest/gtest.h>

#include <map>

#include "hess/qpolynomial.hpp"

using namespace hess;

TEST(QPolynomial, Arithmetic) {
    const QPolynomial a{1, 1};
    const QPolynomial b{1, 1, 1};
    EXPECT_EQ(a * b, (QPolynomial{1, 2, 2, 1}));
    EXPECT_EQ(a + b, (QPolynomial{2, 2, 1}));
    EXPECT_EQ(b - b, QPolynomial{});
    EXPECT_TRUE((b - b).is_zero());
    EXPECT_EQ((QPolynomial{1, 0, 0}).degree(), 0);
    EXPECT_EQ(a.pow(3), (QPolynomial{1, 3, 3, 1}));
    EXPECT_EQ(QPolynomial::q_integer(4), (QPolynomial{1, 1, 1, 1}));
    EXPECT_EQ(QPolynomial::q_factorial(3), (QPolynomial{1, 2, 2, 1}));
    EXPECT_EQ(QPolynomial::monomial(2, 5), (QPolynomial{0, 0, 5}));
    EXPECT_TRUE((QPolynomial{1, 2, 1}).is_palindromic());
    EXPECT_FALSE((QPolynomial{1, 2}).is_palindromic());
    EXPECT_EQ((QPolynomial{1, 2, 1}).to_string(), "1 + 2q + q^2");
}

TEST(QPolynomial, ExactDivision) {
    const QPolynomial lhs = QPolynomial::q_integer(3).pow(2) * QPolynomial::q_integer(4);
    EXPECT_EQ(exact_div(lhs, QPolynomial::q_integer(2)), QPolynomial::q_integer(3).pow(2) * QPolynomial({1, 0, 1}));
    EXPECT_EQ(exact_div(QPolynomial{1, 2, 2, 1}, QPolynomial{1, 1}), (QPolynomial{1, 1, 1}));
    try {
        exact_div(QPolynomial{1, 1, 1}, QPolynomial{1, 1});
        ADD_FAILURE();
    } catch (const NonExactDivision& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonExactDivision);
        EXPECT_FALSE(e.remainder().is_zero());
    }
    EXPECT_THROW(exact_div(QPolynomial{1}, QPolynomial{}), Error);
}

TEST(QPolynomial, QBinomial) {
    EXPECT_EQ(qbinomial(4, 2), (QPolynomial{1, 1, 2, 1, 1}));
    EXPECT_EQ(qbinomial(5, 0), QPolynomial{1});
    EXPECT_EQ(qbinomial(5, 5), QPolynomial{1});
    EXPECT_EQ(qbinomial(3, 1), qbinomial(2, 1) + QPolynomial::monomial(2) * qbinomial(2, 0));
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k < n; ++k) {
            // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
            EXPECT_EQ(qbinomial(n, k), qbinomial(n - 1, k - 1) + QPolynomial::monomial(k) * qbinomial(n - 1, k));
            EXPECT_EQ(qbinomial(n, k), qbinomial(n, n - k));
        }
    EXPECT_THROW(qbinomial(2, 3), Error);
}

TEST(QPolynomial, BigCoefficients) {
    const QPolynomial big = QPolynomial::q_factorial(30);
    BigInt sum = 0;
    for (const auto& c : big.coeffs()) sum += c;
    BigInt fact = 1;
    for (int i = 2; i <= 30; ++i) fact *= i;
    EXPECT_EQ(sum, fact);
    EXPECT_EQ(exact_div(big, QPolynomial::q_factorial(29)), QPolynomial::q_integer(30));
    EXPECT_THROW(big.to_int64(), Error);
}

TEST(QPolynomial, FromFactors) {
    const std::map<int, int> factors{{2, 3}, {3, 3}, {4, 1}};
    EXPECT_EQ(from_q_integer_factors(factors),
              QPolynomial::q_integer(2).pow(3) * QPolynomial::q_integer(3).pow(3) * QPolynomial::q_integer(4));
    EXPECT_EQ(from_q_integer_factors({}), QPolynomial{1});
}
