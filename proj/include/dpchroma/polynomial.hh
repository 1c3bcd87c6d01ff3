#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace dpchroma {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate integer polynomial, coefficients in ascending degree. The
/// stored vector never has a trailing zero; the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coefficients);

    static Polynomial constant(BigInt c);
    /// x^k
    static Polynomial monomial(std::size_t k);
    /// x (x-1) ... (x-k+1)
    static Polynomial falling_factorial(std::size_t k);

    const std::vector<BigInt> & coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

    BigInt evaluate(const BigInt & x) const;

    /// Coefficients of p(x + shift), ascending.
    Polynomial shifted(const BigInt & shift) const;

    Polynomial & operator+=(const Polynomial & o);
    Polynomial & operator-=(const Polynomial & o);
    friend Polynomial operator+(Polynomial a, const Polynomial & b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial & b) { return a -= b; }
    friend Polynomial operator*(const Polynomial & a, const Polynomial & b);
    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    /// "m^4 - 4m^3 + 6m^2 - 3m" style, highest degree first.
    std::string to_string(const std::string & var = "m") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

} // namespace dpchroma
