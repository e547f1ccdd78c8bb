#include "inccoh/char_ring.hpp"

#include "inccoh/detail/compositions.hpp"
#include "inccoh/errors.hpp"
#include "inccoh/padic.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <limits>
#include <numeric>

namespace inccoh {

// ---------------------------------------------------------------- Weight

Weight Weight::normalize(std::span<const Exponent> raw)
{
    if (raw.size() < 2)
        throw DimensionMismatch(fmt::format("weight needs at least 2 coordinates, got {}", raw.size()));
    std::vector<Exponent> v(raw.begin(), raw.end());
    const Exponent shift = v.back();
    for (auto& x : v)
        x -= shift;
    return Weight(std::move(v));
}

Weight Weight::normalize(std::initializer_list<Exponent> raw)
{
    return normalize(std::span<const Exponent>(raw.begin(), raw.size()));
}

bool Weight::is_dominant() const
{
    return std::is_sorted(exps_.begin(), exps_.end(), std::greater<>());
}

Weight Weight::operator+(const Weight& other) const
{
    if (rank() != other.rank())
        throw DimensionMismatch(fmt::format("adding weights of rank {} and {}", rank(), other.rank()));
    std::vector<Exponent> v(exps_);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] += other.exps_[i];
    return Weight(std::move(v));
}

Weight Weight::scaled(Exponent factor) const
{
    std::vector<Exponent> v(exps_);
    for (auto& x : v)
        x *= factor;
    return Weight(std::move(v));
}

// ---------------------------------------------------------------- Character

Character::Character(int rank) : rank_(rank)
{
    if (rank < 2)
        throw DimensionMismatch(fmt::format("character ring needs n >= 2, got {}", rank));
}

Character Character::one(int rank)
{
    Character c(rank);
    c.terms_.emplace(Weight::normalize(std::vector<Exponent>(static_cast<std::size_t>(rank), 0)), 1);
    return c;
}

Character Character::monomial(std::span<const Exponent> raw_exps, const Coeff& coeff)
{
    Character c(static_cast<int>(raw_exps.size()));
    c.add_term(Weight::normalize(raw_exps), coeff);
    return c;
}

Character Character::monomial(std::initializer_list<Exponent> raw_exps, const Coeff& coeff)
{
    return monomial(std::span<const Exponent>(raw_exps.begin(), raw_exps.size()), coeff);
}

void Character::check_rank(const Character& other) const
{
    if (rank_ != other.rank_)
        throw DimensionMismatch(fmt::format("characters of rank {} and {} do not combine", rank_, other.rank_));
}

Coeff Character::coeff(const Weight& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void Character::add_term(const Weight& w, const Coeff& c)
{
    if (w.rank() != rank_)
        throw DimensionMismatch(fmt::format("weight of rank {} in character of rank {}", w.rank(), rank_));
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Character& Character::operator+=(const Character& other)
{
    check_rank(other);
    for (const auto& [w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

Character& Character::operator-=(const Character& other)
{
    check_rank(other);
    for (const auto& [w, c] : other.terms_)
        add_term(w, -c);
    return *this;
}

Character Character::operator-() const
{
    Character r(*this);
    for (auto& [w, c] : r.terms_)
        c = -c;
    return r;
}

Character Character::scaled(const Coeff& s) const
{
    Character r(rank_);
    if (s == 0)
        return r;
    r.terms_ = terms_;
    for (auto& [w, c] : r.terms_)
        c *= s;
    return r;
}

namespace {

constexpr std::int64_t kMaxDenseCells = std::int64_t{1} << 22;

/// Product through a dense accumulator over the bounding box of the result.
/// Returns false (leaving out untouched) when a coefficient does not fit in 64 bits,
/// an intermediate sum overflows, or the box is too sparse to be worth it.
bool dense_product(const Character& f, const Character& g, Character::Terms& out)
{
    const int n = f.rank();
    const std::size_t m = static_cast<std::size_t>(n - 1); // last coordinate is always 0
    std::vector<Exponent> lo_f(m, std::numeric_limits<Exponent>::max()), hi_f(m, std::numeric_limits<Exponent>::min());
    std::vector<Exponent> lo_g(lo_f), hi_g(hi_f);
    for (const auto& [w, c] : f.terms())
        for (std::size_t j = 0; j < m; ++j) {
            lo_f[j] = std::min(lo_f[j], w[j]);
            hi_f[j] = std::max(hi_f[j], w[j]);
        }
    for (const auto& [w, c] : g.terms())
        for (std::size_t j = 0; j < m; ++j) {
            lo_g[j] = std::min(lo_g[j], w[j]);
            hi_g[j] = std::max(hi_g[j], w[j]);
        }

    std::vector<Exponent> lo(m), extent(m), stride(m);
    std::int64_t cells = 1;
    for (std::size_t j = 0; j < m; ++j) {
        lo[j] = lo_f[j] + lo_g[j];
        extent[j] = (hi_f[j] - lo_f[j]) + (hi_g[j] - lo_g[j]) + 1;
        if (__builtin_mul_overflow(cells, extent[j], &cells) || cells > kMaxDenseCells)
            return false;
    }
    const auto pairs = static_cast<std::int64_t>(f.size()) * static_cast<std::int64_t>(g.size());
    if (cells > 16 * pairs + 4096)
        return false;
    {
        std::int64_t s = 1;
        for (std::size_t j = m; j-- > 0;) {
            stride[j] = s;
            s *= extent[j];
        }
    }

    auto flatten = [&](const Character& c, const std::vector<Exponent>& base,
                       std::vector<std::pair<std::int64_t, std::int64_t>>& dst) {
        dst.reserve(c.size());
        for (const auto& [w, k] : c.terms()) {
            if (k > std::numeric_limits<std::int64_t>::max() || k < std::numeric_limits<std::int64_t>::min())
                return false;
            std::int64_t off = 0;
            for (std::size_t j = 0; j < m; ++j)
                off += (w[j] - base[j]) * stride[j];
            dst.emplace_back(off, static_cast<std::int64_t>(k));
        }
        return true;
    };
    std::vector<std::pair<std::int64_t, std::int64_t>> ff, gg;
    if (!flatten(f, lo_f, ff) || !flatten(g, lo_g, gg))
        return false;

    std::vector<std::int64_t> acc(static_cast<std::size_t>(cells), 0);
    for (const auto& [of, cf] : ff)
        for (const auto& [og, cg] : gg) {
            std::int64_t prod;
            auto& slot = acc[static_cast<std::size_t>(of + og)];
            if (__builtin_mul_overflow(cf, cg, &prod) || __builtin_add_overflow(slot, prod, &slot))
                return false;
        }

    // Descending flat index is descending lexicographic order of weights.
    std::vector<Exponent> exps(static_cast<std::size_t>(n), 0);
    for (std::int64_t idx = cells - 1; idx >= 0; --idx) {
        const std::int64_t v = acc[static_cast<std::size_t>(idx)];
        if (v == 0)
            continue;
        std::int64_t rem = idx;
        for (std::size_t j = 0; j < m; ++j) {
            exps[j] = lo[j] + rem / stride[j];
            rem %= stride[j];
        }
        out.emplace_hint(out.end(), Weight::normalize(exps), v);
    }
    return true;
}

} // namespace

Character operator*(const Character& a, const Character& b)
{
    a.check_rank(b);
    Character r(a.rank_);
    if (a.is_zero() || b.is_zero())
        return r;
    if (dense_product(a, b, r.terms_))
        return r;
    r.terms_.clear();
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_)
            r.add_term(wa + wb, ca * cb);
    return r;
}

Character Character::dual() const
{
    Character r(rank_);
    for (const auto& [w, c] : terms_)
        r.terms_.emplace_hint(r.terms_.begin(), w.scaled(-1), c);
    return r;
}

Character Character::frobenius(std::int64_t q) const
{
    if (!is_prime_power(q))
        throw InvalidArgument(fmt::format("frobenius: q = {} is not a prime power", q));
    if (q == 1)
        return *this;
    Character r(rank_);
    for (const auto& [w, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), w.scaled(q), c);
    return r;
}

Weight Character::highest_weight() const
{
    if (terms_.empty())
        throw EmptyCharacter("highest_weight of the zero character");
    return terms_.begin()->first;
}

Coeff Character::dim_eval() const
{
    Coeff s = 0;
    for (const auto& [w, c] : terms_)
        s += c;
    return s;
}

Character Character::permuted(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != rank_)
        throw DimensionMismatch("permutation length does not match rank");
    Character r(rank_);
    std::vector<Exponent> v(static_cast<std::size_t>(rank_));
    for (const auto& [w, c] : terms_) {
        for (int i = 0; i < rank_; ++i)
            v[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = w[static_cast<std::size_t>(i)];
        r.terms_.emplace(Weight::normalize(v), c);
    }
    return r;
}

bool Character::is_symmetric() const
{
    // Adjacent transpositions generate S_n.
    std::vector<int> perm(static_cast<std::size_t>(rank_));
    for (int s = 0; s + 1 < rank_; ++s) {
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[static_cast<std::size_t>(s)], perm[static_cast<std::size_t>(s + 1)]);
        if (permuted(perm) != *this)
            return false;
    }
    return true;
}

bool Character::has_nonnegative_coefficients() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

// ---------------------------------------------------------------- constructors

namespace {

Character bounded_monomial_sum(int n, std::int64_t d, std::int64_t max_exp)
{
    Character r(n);
    if (d < 0 || max_exp < 0)
        return r;
    std::vector<std::int64_t> bound(static_cast<std::size_t>(n), max_exp);
    detail::for_each_bounded_composition(d, bound, [&](const std::vector<std::int64_t>& parts) {
        r.add_term(Weight::normalize(parts), 1);
    });
    return r;
}

} // namespace

Character h(int n, std::int64_t d)
{
    return bounded_monomial_sum(n, d, d);
}

Character e(int n, std::int64_t d)
{
    if (d > n)
        return Character(n);
    return bounded_monomial_sum(n, d, 1);
}

Character h_trunc(int n, std::int64_t q, std::int64_t d)
{
    if (!is_prime_power(q))
        throw InvalidArgument(fmt::format("h_trunc: q = {} is not a prime power", q));
    return bounded_monomial_sum(n, d, q - 1);
}

Character schur2(int n, std::int64_t a, std::int64_t b)
{
    return h(n, a) * h(n, b) - h(n, a + 1) * h(n, b - 1);
}

Character schur2_trunc(int n, std::int64_t q, std::int64_t a, std::int64_t b)
{
    return h_trunc(n, q, a) * h_trunc(n, q, b) - h_trunc(n, q, a + 1) * h_trunc(n, q, b - 1);
}

Character nim(std::int64_t m, int n)
{
    if (n != 3)
        throw UnsupportedRank(fmt::format("Nim characters are trivariate; n = {} requested", n));
    if (m < 0)
        throw DomainError(fmt::format("nim: m = {} must be non-negative", m));
    Character r(3);
    detail::for_each_composition(2 * m, 3, [&](const std::vector<std::int64_t>& abc) {
        if ((abc[0] ^ abc[1] ^ abc[2]) == 0)
            r.add_term(Weight::normalize(abc), 1);
    });
    return r;
}

} // namespace inccoh
