#pragma once

#include <cstdint>

namespace inccoh {

bool is_prime(std::int64_t p);

/// True when q = p^k for some prime p and k >= 0 (so q = 1 qualifies).
bool is_prime_power(std::int64_t q);

/// The unique (t, k, q = p^k) with t*q <= d < (t+1)*q and 1 <= t < p,
/// i.e. the leading term of the base-p expansion of d.
struct PAdicLeading
{
    std::int64_t t = 0;
    int k = 0;
    std::int64_t q = 1;

    friend bool operator==(const PAdicLeading&, const PAdicLeading&) = default;
};

/// Throws DomainError for d <= 0 and InvalidArgument when p is not prime.
PAdicLeading leading_term(std::int64_t d, std::int64_t p);

/// Digitwise sum mod 2 (bitwise xor) of two non-negative integers.
std::int64_t nim_sum(std::int64_t a, std::int64_t b);

/// Cut of the binary expansion d = (d_k ... d_0)_2 around bit i:
/// d = left * 2^(i+1) + bit * 2^i + right.
struct BinaryTruncation
{
    std::int64_t left = 0;
    std::int64_t right = 0;
    int bit = 0;

    friend bool operator==(const BinaryTruncation&, const BinaryTruncation&) = default;
};

/// Requires 0 <= d < 2^(k+1) and 1 <= i <= k; the expansion is read with k+1 digits.
BinaryTruncation truncations(std::int64_t d, int i, int k);

/// p^k with overflow checking.
std::int64_t ipow(std::int64_t p, int k);

} // namespace inccoh
