#include "inccoh/oracle.hpp"

#include "inccoh/detail/compositions.hpp"
#include "inccoh/errors.hpp"
#include "inccoh/padic.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

namespace inccoh {

WeightBlockMatrix build_block(int n, std::int64_t p, std::int64_t d, std::int64_t e,
                              const std::vector<std::int64_t>& mu)
{
    if (!is_prime(p))
        throw InvalidArgument(fmt::format("p = {} is not prime", p));
    if (static_cast<int>(mu.size()) != n)
        throw DimensionMismatch(fmt::format("weight has {} entries, expected {}", mu.size(), n));
    if (d < 1)
        throw DomainError(fmt::format("build_block: d = {} must be >= 1", d));
    if (e < -1)
        throw DomainError(fmt::format("build_block: e = {} must be >= -1", e));
    if (std::any_of(mu.begin(), mu.end(), [](std::int64_t x) { return x < 0; }))
        throw WeightMismatch("block weight has a negative entry");
    if (std::accumulate(mu.begin(), mu.end(), std::int64_t{0}) != d + e)
        throw WeightMismatch(fmt::format("block weight has degree != d + e = {}", d + e));

    WeightBlockMatrix b;
    b.n = n;
    b.p = p;
    b.d = d;
    b.e = e;
    b.mu = mu;
    if (e >= 0)
        detail::for_each_bounded_composition(d, mu, [&](const std::vector<std::int64_t>& a) { b.col_alpha.push_back(a); });
    detail::for_each_bounded_composition(d - 1, mu, [&](const std::vector<std::int64_t>& a) { b.row_alpha.push_back(a); });

    std::map<std::vector<std::int64_t>, std::size_t> row_index;
    for (std::size_t r = 0; r < b.row_alpha.size(); ++r)
        row_index.emplace(b.row_alpha[r], r);
    b.entries.assign(b.rows() * b.cols(), 0);
    for (std::size_t c = 0; c < b.cols(); ++c) {
        std::vector<std::int64_t> a = b.col_alpha[c];
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0)
                continue;
            --a[i];
            b.entries[row_index.at(a) * b.cols() + c] = static_cast<std::uint8_t>(1 % p);
            ++a[i];
        }
    }
    return b;
}

namespace {

std::size_t rank_gf2(const std::vector<std::uint8_t>& m, std::size_t rows, std::size_t cols)
{
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::uint64_t> bits(rows * words, 0);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (m[r * cols + c] & 1)
                bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t piv = rank;
        while (piv < rows && !(bits[piv * words + w] & bit))
            ++piv;
        if (piv == rows)
            continue;
        if (piv != rank)
            std::swap_ranges(bits.begin() + static_cast<std::ptrdiff_t>(piv * words),
                             bits.begin() + static_cast<std::ptrdiff_t>((piv + 1) * words),
                             bits.begin() + static_cast<std::ptrdiff_t>(rank * words));
        const std::uint64_t* pr = &bits[rank * words];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            std::uint64_t* rr = &bits[r * words];
            if (rr[w] & bit)
                for (std::size_t k = w; k < words; ++k)
                    rr[k] ^= pr[k];
        }
        ++rank;
    }
    return rank;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p)
{
    std::int64_t r = 1, base = a % p, ex = p - 2;
    while (ex > 0) {
        if (ex & 1)
            r = r * base % p;
        base = base * base % p;
        ex >>= 1;
    }
    return r;
}

// Elimination over F_P in 32-bit lanes; a compile-time P lets the reductions vectorize.
template <class Mod>
std::size_t rank_generic(const std::vector<std::uint8_t>& m, std::size_t rows, std::size_t cols, Mod mod)
{
    const std::uint32_t p = mod.p();
    std::vector<std::uint32_t> a(m.begin(), m.end());
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != rank)
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                             a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                             a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
        std::uint32_t* pr = &a[rank * cols];
        const auto inv = static_cast<std::uint32_t>(inverse_mod(pr[c], p));
        for (std::size_t k = c; k < cols; ++k)
            pr[k] = mod(pr[k] * inv);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            std::uint32_t* rr = &a[r * cols];
            const std::uint32_t f = rr[c];
            if (f == 0)
                continue;
            const std::uint32_t g = p - f; // rr -= f * pr
            for (std::size_t k = c; k < cols; ++k)
                rr[k] = mod(rr[k] + g * pr[k]);
        }
        ++rank;
    }
    return rank;
}

template <std::uint32_t P>
struct FixedMod
{
    std::uint32_t p() const { return P; }
    std::uint32_t operator()(std::uint32_t x) const { return x % P; }
};

struct RuntimeMod
{
    std::uint32_t modulus;
    std::uint32_t p() const { return modulus; }
    std::uint32_t operator()(std::uint32_t x) const { return x % modulus; }
};

} // namespace

std::size_t rank_mod_p(std::vector<std::uint8_t> m, std::size_t rows, std::size_t cols, std::int64_t p)
{
    if (!is_prime(p))
        throw InvalidArgument(fmt::format("p = {} is not prime", p));
    if (m.size() != rows * cols)
        throw DimensionMismatch("matrix storage does not match its shape");
    if (rows == 0 || cols == 0)
        return 0;
    switch (p) {
    case 2: return rank_gf2(m, rows, cols);
    case 3: return rank_generic(m, rows, cols, FixedMod<3>{});
    case 5: return rank_generic(m, rows, cols, FixedMod<5>{});
    case 7: return rank_generic(m, rows, cols, FixedMod<7>{});
    case 11: return rank_generic(m, rows, cols, FixedMod<11>{});
    case 13: return rank_generic(m, rows, cols, FixedMod<13>{});
    default:
        if (p > 65521)
            throw DomainError(fmt::format("rank_mod_p: p = {} too large for 32-bit lanes", p));
        return rank_generic(m, rows, cols, RuntimeMod{static_cast<std::uint32_t>(p)});
    }
}

Oracle::Oracle(int n, std::int64_t p, bool use_cache) : n_(n), p_(p), use_cache_(use_cache)
{
    if (n < 2)
        throw DomainError(fmt::format("oracle needs n >= 2, got {}", n));
    if (!is_prime(p))
        throw InvalidArgument(fmt::format("p = {} is not prime", p));
    if (p > 255)
        throw DomainError(fmt::format("oracle supports p < 256, got {}", p));
}

void Oracle::check(std::int64_t d, std::int64_t e) const
{
    if (d < 0)
        throw DomainError(fmt::format("d = {} must be >= 0", d));
    if (e < -1)
        throw DomainError(fmt::format("twist e = {} < -1 is not supported", e));
}

Oracle::BlockStats Oracle::block_stats(std::int64_t d, std::int64_t e, const std::vector<std::int64_t>& mu)
{
    auto compute = [&] {
        const WeightBlockMatrix b = build_block(n_, p_, d, e, mu);
        const auto rank = rank_mod_p(b.entries, b.rows(), b.cols(), p_);
        return BlockStats{static_cast<std::int64_t>(b.cols()), static_cast<std::int64_t>(b.rows()),
                          static_cast<std::int64_t>(rank)};
    };
    // Column and row indices only see min(mu_i, d), and permuting coordinates keeps the rank.
    // The column count still depends on e through e = -1 (no columns).
    if (!use_cache_ || e < 0)
        return compute();
    std::vector<std::int64_t> key(mu);
    for (auto& x : key)
        x = std::min(x, d);
    std::sort(key.begin(), key.end());
    auto ck = std::make_pair(d, std::move(key));
    if (auto it = cache_.find(ck); it != cache_.end())
        return it->second;
    const BlockStats s = compute();
    cache_.emplace(std::move(ck), s);
    return s;
}

template <class Fn>
void Oracle::for_each_block(std::int64_t d, std::int64_t e, Fn&& fn)
{
    detail::for_each_composition(d + e, n_, [&](const std::vector<std::int64_t>& mu) {
        fn(mu, block_stats(d, e, mu));
    });
}

HDims Oracle::h_dims(std::int64_t d, std::int64_t e)
{
    check(d, e);
    HDims r;
    if (d == 0) {
        if (e >= 0)
            r.h0 = static_cast<std::int64_t>(h(n_, e).dim_eval());
        return r;
    }
    for_each_block(d, e, [&](const std::vector<std::int64_t>&, const BlockStats& s) {
        r.h0 += s.cols - s.rank;
        r.h1 += s.rows - s.rank;
    });
    return r;
}

HCharacters Oracle::h_characters(std::int64_t d, std::int64_t e)
{
    check(d, e);
    HCharacters r{Character(n_), Character(n_)};
    if (d == 0) {
        r.h0 = h(n_, e);
        return r;
    }
    for_each_block(d, e, [&](const std::vector<std::int64_t>& mu, const BlockStats& s) {
        const Weight w = Weight::normalize(mu);
        r.h0.add_term(w, s.cols - s.rank);
        r.h1.add_term(w, s.rows - s.rank);
    });
    return r;
}

std::int64_t Oracle::regularity_scan(std::int64_t d, std::int64_t m_max)
{
    if (d < 1)
        throw DomainError(fmt::format("regularity_scan: d = {} must be >= 1", d));
    for (std::int64_t m = m_max; m >= 1; --m)
        if (h_dims(d, m - 2).h1 > 0)
            return m;
    throw ScanExhausted(fmt::format("no nonzero H^1(D^{} R(m-2)) for m <= {}", d, m_max));
}

} // namespace inccoh
