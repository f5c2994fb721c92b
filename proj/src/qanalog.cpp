#include "projcode/qanalog.hpp"

#include <stdexcept>

namespace projcode {

std::uint64_t bracket(std::uint64_t m, std::uint64_t q) {
    std::uint64_t total = 0, term = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        if (__builtin_add_overflow(total, term, &total)) throw std::overflow_error("[m]_q overflows 64 bits");
        if (i + 1 < m && __builtin_mul_overflow(term, q, &term)) throw std::overflow_error("[m]_q overflows 64 bits");
    }
    return total;
}

BigInt gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
    if (k > n) return 0;
    BigInt num = 1, den = 1, Q = q;
    for (std::uint64_t i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(Q, static_cast<unsigned>(n - i)) - 1;
        den *= boost::multiprecision::pow(Q, static_cast<unsigned>(i + 1)) - 1;
    }
    return num / den;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace projcode
