#include "dpchroma/polynomial.hh"

#include <sstream>
#include <utility>

namespace dpchroma {

Polynomial::Polynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

Polynomial Polynomial::constant(BigInt c)
{
    return Polynomial(std::vector<BigInt>{std::move(c)});
}

Polynomial Polynomial::monomial(std::size_t k)
{
    std::vector<BigInt> c(k + 1, 0);
    c[k] = 1;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::falling_factorial(std::size_t k)
{
    Polynomial p = constant(1);
    for (std::size_t i = 0; i < k; ++i)
        p = p * Polynomial(std::vector<BigInt>{-BigInt(i), 1});
    return p;
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt Polynomial::evaluate(const BigInt & x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::shifted(const BigInt & shift) const
{
    // Horner in polynomial arithmetic: p(x + s).
    Polynomial linear(std::vector<BigInt>{shift, 1});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * linear + constant(*it);
    return acc;
}

Polynomial & Polynomial::operator+=(const Polynomial & o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial & Polynomial::operator-=(const Polynomial & o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial & a, const Polynomial & b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const std::string & var) const
{
    if (coeffs_.empty())
        return "0";
    // Compound variables like "(m-1)" read fine with ^k appended directly.
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt & c = coeffs_[k];
        if (c == 0)
            continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || mag != 1)
            out << mag;
        if (k >= 1)
            out << var;
        if (k >= 2)
            out << '^' << k;
    }
    return out.str();
}

} // namespace dpchroma
