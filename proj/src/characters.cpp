#include "inccoh/characters.hpp"

#include "inccoh/errors.hpp"
#include "inccoh/padic.hpp"

#include <fmt/format.h>

namespace inccoh {

namespace {

void require_sl3(int n)
{
    if (n != 3)
        throw UnsupportedRank(fmt::format("this character formula is only known for n = 3, got n = {}", n));
}

void require_prime(std::int64_t p)
{
    if (!is_prime(p))
        throw InvalidArgument(fmt::format("p = {} is not prime", p));
}

} // namespace

Character euler_char(int n, std::int64_t d, std::int64_t e)
{
    require_sl3(n);
    if (d < 0 || e < 0)
        throw DomainError("euler_char: d, e must be non-negative");
    if (e > d)
        return schur2(3, e - 1, d);
    if (d > e)
        return -schur2(3, d - 1, e);
    return Character(3);
}

Character char_small_d(int n, std::int64_t p, std::int64_t d, std::int64_t e_twist)
{
    require_prime(p);
    if (n < 3)
        throw DomainError(fmt::format("n = {} < 3", n));
    if (d < p || d >= 2 * p || e_twist < d - 1)
        throw OutOfRange(fmt::format("char_small_d needs p <= d < 2p and e >= d-1 (p={}, d={}, e={})", p, d, e_twist));
    return schur2_trunc(n, p, e_twist + p, d - p);
}

CornerData corner_char(int n, std::int64_t p, std::int64_t t, int k)
{
    require_prime(p);
    if (n < 3)
        throw DomainError(fmt::format("n = {} < 3", n));
    if (t < 1 || t >= p)
        throw DomainError(fmt::format("corner_char: t = {} not in [1, {})", t, p));
    if (k < 0)
        throw DomainError(fmt::format("corner_char: k = {} < 0", k));
    const std::int64_t q = ipow(p, k);
    const std::int64_t d = t * q;
    return CornerData{schur2(n, t - 1, t - 1).frobenius(q), d, (t + n - 2) * q - n + 1, -d - n + 1};
}

Sl3Cohomology::Sl3Cohomology(int n, std::int64_t p) : p_(p), zero_(3)
{
    require_sl3(n);
    require_prime(p);
}

const Character& Sl3Cohomology::h1(std::int64_t d, std::int64_t e)
{
    if (d <= 0 || e < 0)
        return zero_;
    const auto key = std::make_pair(d, e);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    const PAdicLeading lt = leading_term(d, p_);
    const std::int64_t t = lt.t, q = lt.q;
    Character r(3);
    if (e > (t + 1) * q - 2) {
        // vanishes
    } else if (e < t * q) {
        r = schur2(3, d - 1, e);
    } else {
        r = h(3, t).dual().frobenius(q) * h1(d - t * q, e - t * q);
        r += h(3, t - 1).dual().frobenius(q) * schur2_trunc(3, q, e - 1 + (2 - t) * q, d - t * q);
        const Character tail = h(3, t - 2);
        if (!tail.is_zero())
            r += tail.dual().frobenius(q) * h0(q * (t + 1) - d - 2, q * (t + 1) - e - 2).dual();
    }
    return memo_.emplace(key, std::move(r)).first->second;
}

std::optional<Character> Sl3Cohomology::line_bundle_character(std::int64_t a, std::int64_t b, int i)
{
    if (i < 0 || i > 3)
        throw DomainError(fmt::format("degree {} outside 0..3", i));
    if (a == -1 || b == -1)
        return Character(3);
    if (a >= 0 && b >= 0) {
        if (i == 0)
            return std::nullopt;
        return Character(3);
    }
    if (a <= -2 && b <= -2) {
        if (i == 3)
            return std::nullopt;
        return Character(3);
    }
    if (a <= -2) {
        auto swapped = line_bundle_character(b, a, i);
        return swapped->dual();
    }
    // a >= 0, b <= -2: H^{j+1}(X, O(a, -d-2)) = H^j(P, D^d R(a-1))
    const std::int64_t d = -b - 2;
    if (i == 1)
        return h0(d, a);
    if (i == 2)
        return h1(d, a);
    return Character(3);
}

bool h1_nonzero(std::int64_t p, std::int64_t d, std::int64_t e)
{
    if (d < 1 || e < 0)
        return false;
    const PAdicLeading lt = leading_term(d, p);
    return e <= (lt.t + 1) * lt.q - 2;
}

Weight hw_h1(std::int64_t d, std::int64_t e, std::int64_t p)
{
    require_prime(p);
    if (!h1_nonzero(p, d, e))
        throw NoHighestWeight(fmt::format("h1({}, {}) vanishes for p = {}", d, e, p));
    if (d > e)
        return Weight::normalize({d - 1, e, 0});
    for (std::int64_t qq = p; qq <= e; qq *= p) {
        const std::int64_t m = d / qq;
        const std::int64_t d1 = d % qq, e1 = e % qq;
        if (m > 0 && e / qq == m && m % p != 0 && d1 <= qq - 2 && e1 <= qq - 2)
            return Weight::normalize({d - e1 - 2, e - 2 * e1 - 2, 0});
    }
    throw std::logic_error(fmt::format("hw_h1: no admissible q' for d={}, e={}, p={} although h1 != 0", d, e, p));
}

Character h1_p2_closed(std::int64_t d, std::int64_t e, int k)
{
    if (k < 1 || k > 60)
        throw OutOfRange(fmt::format("h1_p2_closed: k = {} out of range", k));
    const std::int64_t q = std::int64_t{1} << k;
    if (d < q || d > e || e > 2 * q - 2)
        throw OutOfRange(fmt::format("h1_p2_closed needs 2^k <= d <= e <= 2^(k+1)-2 (d={}, e={}, k={})", d, e, k));
    Character r(3);
    for (int i = 1; i <= k; ++i) {
        const BinaryTruncation td = truncations(d, i, k);
        const BinaryTruncation te = truncations(e, i, k);
        const std::int64_t qi = std::int64_t{1} << i;
        if (td.bit != 1 || te.bit != 1 || td.left != te.left || te.right > qi - 2)
            continue;
        r += nim(td.left).frobenius(2 * qi) * schur2_trunc(3, qi, te.right - 1 + 2 * qi, td.right);
    }
    return r;
}

} // namespace inccoh
