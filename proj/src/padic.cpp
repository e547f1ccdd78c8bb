#include "inccoh/padic.hpp"

#include "inccoh/errors.hpp"

#include <fmt/format.h>

namespace inccoh {

bool is_prime(std::int64_t p)
{
    if (p < 2)
        return false;
    for (std::int64_t f = 2; f * f <= p; ++f)
        if (p % f == 0)
            return false;
    return true;
}

bool is_prime_power(std::int64_t q)
{
    if (q == 1)
        return true;
    if (q < 2)
        return false;
    std::int64_t f = 2;
    while (f * f <= q && q % f != 0)
        ++f;
    if (q % f != 0)
        return true; // q itself is prime
    while (q % f == 0)
        q /= f;
    return q == 1;
}

std::int64_t ipow(std::int64_t p, int k)
{
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) {
        if (__builtin_mul_overflow(r, p, &r))
            throw DomainError(fmt::format("{}^{} overflows 64 bits", p, k));
    }
    return r;
}

PAdicLeading leading_term(std::int64_t d, std::int64_t p)
{
    if (!is_prime(p))
        throw InvalidArgument(fmt::format("leading_term: p = {} is not prime", p));
    if (d <= 0)
        throw DomainError(fmt::format("leading_term: d = {} must be positive", d));
    PAdicLeading r;
    while (d / r.q >= p) {
        r.q *= p;
        ++r.k;
    }
    r.t = d / r.q;
    return r;
}

std::int64_t nim_sum(std::int64_t a, std::int64_t b)
{
    if (a < 0 || b < 0)
        throw DomainError("nim_sum: arguments must be non-negative");
    return a ^ b;
}

BinaryTruncation truncations(std::int64_t d, int i, int k)
{
    if (k < 1 || k > 61)
        throw DomainError(fmt::format("truncations: k = {} out of range", k));
    if (i < 1 || i > k)
        throw DomainError(fmt::format("truncations: i = {} not in [1, {}]", i, k));
    if (d < 0 || d >= (std::int64_t{1} << (k + 1)))
        throw DomainError(fmt::format("truncations: d = {} does not have at most {} binary digits", d, k + 1));
    BinaryTruncation r;
    r.left = d >> (i + 1);
    r.bit = static_cast<int>((d >> i) & 1);
    r.right = d & ((std::int64_t{1} << i) - 1);
    return r;
}

} // namespace inccoh
