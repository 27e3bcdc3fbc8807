#include "maxgal/arith/fp_poly.hpp"

#include "maxgal/error.hpp"
#include "poly_kernel.hpp"

namespace maxgal {

namespace detail {
std::string render_coeffs(const std::vector<Integer>& c);
}

namespace {

std::vector<Integer> reduced(const Integer& p, std::vector<Integer> c) {
    for (auto& x : c) x = mod(x, p);
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

detail::BigField field(const Integer& p) { return detail::BigField{p}; }

} // namespace

FpPoly::FpPoly(Integer p, std::vector<Integer> coeffs) : p_(std::move(p)) {
    if (p_ < 2) throw PreconditionError("FpPoly modulus must be at least 2");
    coeffs_ = reduced(p_, std::move(coeffs));
}

FpPoly::FpPoly(const Integer& p, std::initializer_list<long> coeffs)
    : FpPoly(p, std::vector<Integer>(coeffs.begin(), coeffs.end())) {}

FpPoly FpPoly::from(const ZPoly& f, const Integer& p) { return FpPoly(p, f.coeffs()); }

FpPoly FpPoly::constant(const Integer& p, const Integer& c) { return FpPoly(p, std::vector<Integer>{c}); }

FpPoly FpPoly::linear(const Integer& p, const Integer& a) { return FpPoly(p, std::vector<Integer>{-a, 1}); }

Integer FpPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& FpPoly::leading() const {
    if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

FpPoly FpPoly::monic() const {
    auto f = field(p_);
    return FpPoly(p_, detail::monic(f, coeffs_));
}

FpPoly FpPoly::derivative() const {
    auto f = field(p_);
    return FpPoly(p_, detail::derivative(f, coeffs_));
}

Integer FpPoly::eval(const Integer& x) const {
    auto f = field(p_);
    return detail::eval(f, coeffs_, mod(x, p_));
}

ZPoly FpPoly::lift() const { return ZPoly(coeffs_); }

void FpPoly::check_same_field(const FpPoly& other) const {
    if (p_ != other.p_) throw PreconditionError("FpPoly operands over different fields");
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    a.check_same_field(b);
    return FpPoly(a.p_, detail::add(field(a.p_), a.coeffs_, b.coeffs_));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    a.check_same_field(b);
    return FpPoly(a.p_, detail::sub(field(a.p_), a.coeffs_, b.coeffs_));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    a.check_same_field(b);
    return detail::with_field(a.p_, [&](const auto& f) {
        auto r = detail::mul(f, detail::load(f, a.coeffs_), detail::load(f, b.coeffs_));
        return FpPoly(a.p_, detail::store(f, r));
    });
}

FpPoly operator*(const Integer& c, const FpPoly& a) {
    return FpPoly(a.p_, detail::scale(field(a.p_), a.coeffs_, mod(c, a.p_)));
}

std::pair<FpPoly, FpPoly> FpPoly::divrem(const FpPoly& divisor) const {
    check_same_field(divisor);
    if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
    return detail::with_field(p_, [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        detail::Vec<F> q, r;
        detail::divrem(f, detail::load(f, coeffs_), detail::load(f, divisor.coeffs_), q, r);
        return std::make_pair(FpPoly(p_, detail::store(f, q)), FpPoly(p_, detail::store(f, r)));
    });
}

FpPoly FpPoly::pow(unsigned exponent) const {
    FpPoly result = FpPoly::constant(p_, 1);
    FpPoly base = *this;
    while (exponent) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent) base = base * base;
    }
    return result;
}

FpPoly FpPoly::powmod(const Integer& e, const FpPoly& m) const {
    check_same_field(m);
    return detail::with_field(p_, [&](const auto& f) {
        auto r = detail::powmod(f, detail::load(f, coeffs_), e, detail::load(f, m.coeffs_));
        return FpPoly(p_, detail::store(f, r));
    });
}

bool FpPoly::is_irreducible() const {
    if (degree() < 1) return false;
    return detail::with_field(p_, [&](const auto& f) {
        return detail::is_irreducible(f, detail::monic(f, detail::load(f, coeffs_)));
    });
}

std::string FpPoly::to_string() const { return detail::render_coeffs(coeffs_); }

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    if (a.prime() != b.prime()) throw PreconditionError("FpPoly operands over different fields");
    return detail::with_field(a.prime(), [&](const auto& f) {
        auto g = detail::gcd(f, detail::load(f, a.coeffs()), detail::load(f, b.coeffs()));
        return FpPoly(a.prime(), detail::store(f, g));
    });
}

FpXgcd xgcd(const FpPoly& a, const FpPoly& b) {
    if (a.prime() != b.prime()) throw PreconditionError("FpPoly operands over different fields");
    return detail::with_field(a.prime(), [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        detail::Vec<F> g, s, t;
        detail::xgcd(f, detail::load(f, a.coeffs()), detail::load(f, b.coeffs()), g, s, t);
        const Integer& p = a.prime();
        return FpXgcd{FpPoly(p, detail::store(f, g)), FpPoly(p, detail::store(f, s)),
                      FpPoly(p, detail::store(f, t))};
    });
}

} // namespace maxgal
