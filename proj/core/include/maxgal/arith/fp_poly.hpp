#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maxgal/arith/integer.hpp"
#include "maxgal/arith/zpoly.hpp"

namespace maxgal {

/// Polynomial over the prime field F_p. Coefficients are kept in [0, p) and
/// trailing zeros are trimmed. Primality of p is the caller's contract;
/// fp_factor checks it.
class FpPoly {
public:
    FpPoly(Integer p, std::vector<Integer> coeffs);
    FpPoly(const Integer& p, std::initializer_list<long> coeffs);

    static FpPoly from(const ZPoly& f, const Integer& p);
    static FpPoly constant(const Integer& p, const Integer& c);
    /// x - a
    static FpPoly linear(const Integer& p, const Integer& a);

    const Integer& prime() const noexcept { return p_; }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    Integer coeff(int i) const;
    const Integer& leading() const;

    FpPoly monic() const;
    FpPoly derivative() const;
    Integer eval(const Integer& x) const;
    /// Representatives in [0, p) as an integer polynomial.
    ZPoly lift() const;

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const Integer& c, const FpPoly& a);
    friend bool operator==(const FpPoly& a, const FpPoly& b) {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
    }

    /// Quotient and remainder; the divisor need not be monic.
    std::pair<FpPoly, FpPoly> divrem(const FpPoly& divisor) const;
    FpPoly operator/(const FpPoly& divisor) const { return divrem(divisor).first; }
    FpPoly operator%(const FpPoly& divisor) const { return divrem(divisor).second; }

    FpPoly pow(unsigned exponent) const;
    /// this^e mod m.
    FpPoly powmod(const Integer& e, const FpPoly& m) const;

    /// Rabin test; false for constants.
    bool is_irreducible() const;

    std::string to_string() const;

private:
    void check_same_field(const FpPoly& other) const;
    Integer p_;
    std::vector<Integer> coeffs_;
};

/// Monic gcd (zero if both inputs are zero).
FpPoly gcd(const FpPoly& a, const FpPoly& b);

/// Bezout: returns (g, s, t) with s*a + t*b = g, g monic.
struct FpXgcd {
    FpPoly g, s, t;
};
FpXgcd xgcd(const FpPoly& a, const FpPoly& b);

} // namespace maxgal
