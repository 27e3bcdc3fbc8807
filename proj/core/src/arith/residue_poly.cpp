#include "maxgal/arith/residue_poly.hpp"

#include "maxgal/error.hpp"

namespace maxgal {

namespace detail {
std::string render_coeffs(const std::vector<Integer>& c);
}

ResiduePoly::ResiduePoly(Integer m, std::vector<Integer> coeffs) : m_(std::move(m)), coeffs_(std::move(coeffs)) {
    if (m_ < 2) throw PreconditionError("residue modulus must be at least 2");
    for (auto& c : coeffs_) c = mod(c, m_);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ResiduePoly::ResiduePoly(const Integer& m, std::initializer_list<long> coeffs)
    : ResiduePoly(m, std::vector<Integer>(coeffs.begin(), coeffs.end())) {}

ResiduePoly ResiduePoly::from(const ZPoly& f, const Integer& m) { return ResiduePoly(m, f.coeffs()); }

Integer ResiduePoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

ZPoly ResiduePoly::lift() const { return ZPoly(coeffs_); }

ResiduePoly ResiduePoly::reduce(const Integer& divisor) const {
    if (divisor < 2 || !mpz_divisible_p(m_.get_mpz_t(), divisor.get_mpz_t())) {
        throw PreconditionError("reduction modulus " + maxgal::to_string(divisor) + " does not divide " + maxgal::to_string(m_));
    }
    return ResiduePoly(divisor, coeffs_);
}

ResiduePoly ResiduePoly::shifted(const Integer& a) const { return ResiduePoly(m_, lift().shifted(a).coeffs()); }

void ResiduePoly::check_same_ring(const ResiduePoly& other) const {
    if (m_ != other.m_) throw PreconditionError("residue polynomials with different moduli");
}

ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b) {
    a.check_same_ring(b);
    return ResiduePoly(a.m_, (a.lift() + b.lift()).coeffs());
}

ResiduePoly operator-(const ResiduePoly& a, const ResiduePoly& b) {
    a.check_same_ring(b);
    return ResiduePoly(a.m_, (a.lift() - b.lift()).coeffs());
}

ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b) {
    a.check_same_ring(b);
    return ResiduePoly(a.m_, (a.lift() * b.lift()).coeffs());
}

std::pair<ResiduePoly, ResiduePoly> ResiduePoly::divrem_monic(const ResiduePoly& divisor) const {
    check_same_ring(divisor);
    if (!divisor.is_monic()) throw PreconditionError("divrem_monic needs a monic divisor");
    std::vector<Integer> r = coeffs_;
    const int db = divisor.degree();
    const int da = degree();
    std::vector<Integer> q(da >= db ? static_cast<std::size_t>(da - db + 1) : 0);
    for (int i = da; i >= db; --i) {
        Integer c = mod(r[static_cast<std::size_t>(i)], m_);
        if (c == 0) continue;
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            r[static_cast<std::size_t>(i - db + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    return {ResiduePoly(m_, std::move(q)), ResiduePoly(m_, std::move(r))};
}

std::string ResiduePoly::to_string() const {
    return detail::render_coeffs(coeffs_) + " mod " + maxgal::to_string(m_);
}

} // namespace maxgal
