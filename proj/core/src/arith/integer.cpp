#include "maxgal/arith/integer.hpp"

#include <cctype>

#include "maxgal/error.hpp"

namespace maxgal {

Integer parse_integer(std::string_view text) {
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
    if (start == text.size()) {
        throw PreconditionError("not an integer: '" + std::string(text) + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw PreconditionError("not an integer: '" + std::string(text) + "'");
        }
    }
    Integer value;
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    value.set_str(digits, 10);
    return value;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

Integer mod(const Integer& value, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer pow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Integer powmod(const Integer& base, const Integer& exponent, const Integer& m) {
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer invmod(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw PreconditionError(to_string(a) + " is not invertible modulo " + to_string(m));
    }
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

long valuation(const Integer& n, const Integer& p) {
    if (n == 0) return -1;
    Integer rest = n;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

bool fits_u64(const Integer& value) {
    return value >= 0 && mpz_sizeinbase(value.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Integer& value) {
    if (!fits_u64(value)) throw PreconditionError("value does not fit in 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
    return out;
}

Integer from_u64(std::uint64_t value) {
    Integer r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
    return r;
}

} // namespace maxgal
