#include "tropdesc/combinatorics.hpp"

#include <numeric>

#include "tropdesc/errors.hpp"

namespace tropdesc {

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(long n) {
    if (n < 0) throw DomainError("factorial of a negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt multinomial(long n, std::span<const long> parts) {
    long sum = 0;
    for (long p : parts) {
        if (p < 0) throw DomainError("multinomial with a negative part");
        sum += p;
    }
    if (sum != n) return 0;
    BigInt r = 1;
    long acc = 0;
    for (long p : parts) {
        acc += p;
        r *= binomial(acc, p);
    }
    return r;
}

BigInt power(long base, unsigned long exp) {
    BigInt r;
    BigInt b = static_cast<signed long>(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

}  // namespace tropdesc
