#include "bistab/rational.hpp"

namespace bistab {

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt isqrt_floor(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
    BigInt out;
    mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
    return out;
}

BigInt isqrt_ceil(const BigInt& n) {
    BigInt s = isqrt_floor(n);
    if (s * s < n) s += 1;
    return s;
}

Rational sqrt_upper_bound(const Rational& x) {
    if (x.sign() < 0) throw std::domain_error("sqrt_upper_bound: negative argument");
    const BigInt num = x.numerator();
    const BigInt den = x.denominator();
    return Rational(isqrt_ceil(num * den), den);
}

}  // namespace bistab
