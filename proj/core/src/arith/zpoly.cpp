#include "maxgal/arith/zpoly.hpp"

#include <algorithm>
#include <sstream>

#include "maxgal/error.hpp"

namespace maxgal {

namespace {

// Shared by ZPoly and the residue classes: renders ascending coefficients.
template <class Coeffs>
std::string render(const Coeffs& c) {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        Integer a = c[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        bool negative = a < 0;
        if (negative) a = -a;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (a != 1 || i == 0) {
            out << a.get_str();
            if (i > 0) out << "*";
        }
        if (i >= 1) out << "x";
        if (i >= 2) out << "^" << i;
    }
    return out.str();
}

} // namespace

ZPoly::ZPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

ZPoly ZPoly::constant(const Integer& c) { return ZPoly(std::vector<Integer>{c}); }

ZPoly ZPoly::monomial(const Integer& c, int degree) {
    std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::linear(const Integer& a) { return ZPoly(std::vector<Integer>{-a, 1}); }

bool ZPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

Integer ZPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& ZPoly::leading() const {
    if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

ZPoly ZPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return ZPoly(std::move(d));
}

Integer ZPoly::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

ZPoly ZPoly::shifted(const Integer& a) const {
    // Horner in the ring of polynomials: acc = acc * (x + a) + c_i.
    std::vector<Integer> acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        std::vector<Integer> next(acc.size() + 1);
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] += acc[j];
            next[j] += acc[j] * a;
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return ZPoly(std::move(acc));
}

Integer ZPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
}

ZPoly ZPoly::with_coeff(int i, const Integer& value) const {
    std::vector<Integer> v = coeffs_;
    if (static_cast<int>(v.size()) <= i) v.resize(static_cast<std::size_t>(i) + 1);
    v[static_cast<std::size_t>(i)] = value;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-() const {
    std::vector<Integer> v = coeffs_;
    for (auto& c : v) c = -c;
    return ZPoly(std::move(v));
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return ZPoly(std::move(v));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return ZPoly(std::move(v));
}

ZPoly operator*(const Integer& c, const ZPoly& a) {
    std::vector<Integer> v = a.coeffs_;
    for (auto& x : v) x *= c;
    return ZPoly(std::move(v));
}

ZPoly ZPoly::pow(unsigned exponent) const {
    ZPoly result = ZPoly::constant(1);
    ZPoly base = *this;
    while (exponent) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent) base = base * base;
    }
    return result;
}

std::string ZPoly::to_string() const { return render(coeffs_); }

void ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

namespace detail {
std::string render_coeffs(const std::vector<Integer>& c) { return render(c); }
} // namespace detail

} // namespace maxgal
