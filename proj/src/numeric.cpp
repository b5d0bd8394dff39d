#include "ginipart/numeric.hpp"

namespace ginipart {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in multiplication");
    return r;
}

std::int64_t binom2(std::int64_t m) {
    if (m < 0)
        throw std::invalid_argument("binom2: negative argument");
    if (m % 2 == 0) return checked_mul(m / 2, m - 1);
    return checked_mul(m, (m - 1) / 2);
}

std::int64_t ceil_to_int(const Rational& x) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    if (!q.fits_slong_p())
        throw std::overflow_error("ceil_to_int: result exceeds 64 bits");
    return static_cast<std::int64_t>(q.get_si());
}

}  // namespace ginipart
