#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "flagcodes/errors.hpp"
#include "flagcodes/flags.hpp"

namespace flagcodes {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Integer-coefficient polynomial in q, coefficients stored by ascending degree
/// with no trailing zeros.
class QPolynomial {
  public:
    QPolynomial() = default;
    QPolynomial(std::initializer_list<long long> ascending);
    explicit QPolynomial(std::vector<BigInt> ascending);
    static QPolynomial constant(BigInt c);
    /// q^d with coefficient c.
    static QPolynomial monomial(BigInt c, std::size_t d);

    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(std::size_t d) const { return d < c_.size() ? c_[d] : BigInt(0); }
    BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }

    QPolynomial operator+(const QPolynomial& o) const;
    QPolynomial operator-(const QPolynomial& o) const;
    QPolynomial operator*(const QPolynomial& o) const;
    bool operator==(const QPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const QPolynomial& o) const { return !(*this == o); }

    BigInt evaluate(const BigInt& q) const;

    /// "q^5 + 2q^4 + 3q^3 + 3q^2 + 2q + 1" (descending powers, signs folded in).
    std::string to_string() const;

  private:
    std::vector<BigInt> c_;
    void trim();
};

/// Quotient with remainder over Q; throws InexactDivision when requested.
QPolynomial divide_exact(const QPolynomial& a, const QPolynomial& b);
/// Content-normalized gcd, positive leading coefficient.
QPolynomial poly_gcd(QPolynomial a, QPolynomial b);

/// Canonical ratio of integer polynomials: gcd-reduced, content-reduced,
/// denominator leading coefficient positive.
class QRational {
  public:
    QRational() : num_(QPolynomial::constant(0)), den_(QPolynomial::constant(1)) {}
    QRational(QPolynomial num, QPolynomial den);
    QRational(const QPolynomial& p) : QRational(p, QPolynomial::constant(1)) {}  // NOLINT

    const QPolynomial& num() const { return num_; }
    const QPolynomial& den() const { return den_; }
    bool is_polynomial() const;

    QRational operator*(const QRational& o) const;
    QRational operator/(const QRational& o) const;
    QRational operator+(const QRational& o) const;
    bool operator==(const QRational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRational& o) const { return !(*this == o); }

    BigRational evaluate(const BigInt& q) const;
    BigInt evaluate_floor(const BigInt& q) const;

    std::string to_string() const;

  private:
    QPolynomial num_, den_;
};

/// [v k]_q as a polynomial (Pascal-type recurrence, memoized).
const QPolynomial& gaussian_binomial(std::uint32_t v, std::uint32_t k);

/// Number of flags of the given type as a polynomial in q.
QPolynomial count_flags_symbolic(std::uint32_t v, const FlagType& type);

BigInt evaluate(const QPolynomial& p, std::uint32_t q);
BigRational evaluate(const QRational& r, std::uint32_t q);

}  // namespace flagcodes
