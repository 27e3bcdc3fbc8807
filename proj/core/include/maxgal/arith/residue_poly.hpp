#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maxgal/arith/integer.hpp"
#include "maxgal/arith/zpoly.hpp"

namespace maxgal {

/// Polynomial with coefficients in Z/mZ for an arbitrary modulus m >= 2
/// (typically a prime power). Coefficients live in [0, m), trimmed.
class ResiduePoly {
public:
    ResiduePoly(Integer m, std::vector<Integer> coeffs);
    ResiduePoly(const Integer& m, std::initializer_list<long> coeffs);

    static ResiduePoly from(const ZPoly& f, const Integer& m);

    const Integer& modulus() const noexcept { return m_; }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    Integer coeff(int i) const;

    /// Representatives in [0, m).
    ZPoly lift() const;
    /// Image modulo a divisor of m.
    ResiduePoly reduce(const Integer& divisor) const;
    /// f(x + a).
    ResiduePoly shifted(const Integer& a) const;

    friend ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b);
    friend ResiduePoly operator-(const ResiduePoly& a, const ResiduePoly& b);
    friend ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b);
    friend bool operator==(const ResiduePoly& a, const ResiduePoly& b) {
        return a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
    }

    /// Division by a monic divisor (no inverses needed).
    std::pair<ResiduePoly, ResiduePoly> divrem_monic(const ResiduePoly& divisor) const;

    std::string to_string() const;

private:
    void check_same_ring(const ResiduePoly& other) const;
    Integer m_;
    std::vector<Integer> coeffs_;
};

} // namespace maxgal
