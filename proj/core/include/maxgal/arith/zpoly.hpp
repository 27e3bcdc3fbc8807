#pragma once

#include <string>
#include <vector>

#include "maxgal/arith/integer.hpp"

namespace maxgal {

/// Dense univariate polynomial over the integers, coefficients in ascending degree.
///
/// The coefficient vector is kept canonical: no trailing zeros, so the zero
/// polynomial is the empty vector and has degree -1.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Integer> coeffs);
    ZPoly(std::initializer_list<long> coeffs);

    static ZPoly constant(const Integer& c);
    static ZPoly monomial(const Integer& c, int degree);
    /// x - a
    static ZPoly linear(const Integer& a);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const;

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    Integer coeff(int i) const;
    const Integer& leading() const;

    ZPoly derivative() const;
    Integer eval(const Integer& x) const;
    /// f(x + a).
    ZPoly shifted(const Integer& a) const;
    Integer content() const;
    /// Replaces the coefficient of x^i (may change the degree).
    ZPoly with_coeff(int i, const Integer& value) const;

    ZPoly operator-() const;
    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const Integer& c, const ZPoly& a);
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.coeffs_ == b.coeffs_; }

    ZPoly pow(unsigned exponent) const;

    /// Human-readable form, highest degree first, e.g. "x^2 - 7".
    std::string to_string() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

} // namespace maxgal
