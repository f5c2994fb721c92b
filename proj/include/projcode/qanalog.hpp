#ifndef PROJCODE_QANALOG_HPP
#define PROJCODE_QANALOG_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace projcode {

using BigInt = boost::multiprecision::cpp_int;

// [m]_q = q^{m-1} + ... + q + 1, with [0]_q = 0. Throws std::overflow_error
// if the value does not fit in 64 bits.
std::uint64_t bracket(std::uint64_t m, std::uint64_t q);

// Number of k-dimensional subspaces of F_q^n (product formula, exact).
BigInt gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);

// Ordinary binomial coefficient, exact.
BigInt binomial(std::uint64_t n, std::uint64_t k);

} // namespace projcode

#endif // PROJCODE_QANALOG_HPP
