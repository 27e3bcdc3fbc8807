#include "maxgal/arith/crt.hpp"

#include "maxgal/error.hpp"

namespace maxgal {

Integer crt_integers(const std::vector<Congruence>& residues) {
    Integer x = 0;
    Integer m = 1;
    for (const auto& [value, modulus] : residues) {
        if (modulus < 1) throw PreconditionError("congruence modulus must be positive");
        const Integer g = gcd(m, modulus);
        const Integer diff = value - x;
        if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) throw Error("inconsistent congruence");
        // x + m*k = value mod modulus  =>  k = (diff/g) * (m/g)^-1 mod (modulus/g)
        const Integer mg = modulus / g;
        Integer k = 0;
        if (mg > 1) k = mod((diff / g) * invmod(m / g, mg), mg);
        x += m * k;
        m *= mg;
        x = mod(x, m);
    }
    return x;
}

} // namespace maxgal
