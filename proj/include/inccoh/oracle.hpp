#pragma once

// Ground truth over F_p: H^0 and H^1 of D^d R(e) on P = PV are the kernel and cokernel of
//   D^d V (x) Sym^e V  ->  D^{d-1} V (x) Sym^{e+1} V,
//   x^(a) (x) y^b  |->  sum_{i : a_i > 0} x^(a - u_i) (x) y^(b + u_i).
// The map preserves the GL-weight a + b, so it splits into one block per weight mu.

#include "inccoh/char_ring.hpp"

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace inccoh {

struct WeightBlockMatrix
{
    int n = 0;
    std::int64_t p = 0;
    std::int64_t d = 0;
    std::int64_t e = 0;
    std::vector<std::int64_t> mu;
    std::vector<std::vector<std::int64_t>> col_alpha; // columns: x^(alpha) (x) y^(mu - alpha), |alpha| = d
    std::vector<std::vector<std::int64_t>> row_alpha; // rows: |alpha| = d - 1
    std::vector<std::uint8_t> entries;                 // row-major, values in F_p

    std::size_t rows() const { return row_alpha.size(); }
    std::size_t cols() const { return col_alpha.size(); }
    std::uint8_t at(std::size_t r, std::size_t c) const { return entries[r * cols() + c]; }
};

/// Needs d >= 1, e >= -1, mu >= 0 with |mu| = d + e (WeightMismatch otherwise).
WeightBlockMatrix build_block(int n, std::int64_t p, std::int64_t d, std::int64_t e,
                              const std::vector<std::int64_t>& mu);

/// Rank over F_p of a dense row-major matrix with entries already reduced mod p.
std::size_t rank_mod_p(std::vector<std::uint8_t> m, std::size_t rows, std::size_t cols, std::int64_t p);

struct HDims
{
    std::int64_t h0 = 0;
    std::int64_t h1 = 0;

    friend bool operator==(const HDims&, const HDims&) = default;
};

struct HCharacters
{
    Character h0;
    Character h1;
};

/// Kernel/cokernel computation for one (n, p). The block ranks are cached: a block depends
/// only on d and the multiset {min(mu_i, d)}, so the cache is keyed that way. Not thread-safe.
class Oracle
{
public:
    Oracle(int n, std::int64_t p, bool use_cache = true);

    int n() const { return n_; }
    std::int64_t p() const { return p_; }

    /// Dimensions of H^0, H^1 of D^d R(e). d >= 0, e >= -1.
    HDims h_dims(std::int64_t d, std::int64_t e);

    /// Torus characters of the same groups.
    HCharacters h_characters(std::int64_t d, std::int64_t e);

    /// Largest m <= m_max with H^1(D^d R(m-2)) != 0; throws ScanExhausted if there is none.
    std::int64_t regularity_scan(std::int64_t d, std::int64_t m_max);

    std::size_t cache_size() const { return cache_.size(); }

private:
    struct BlockStats
    {
        std::int64_t cols;
        std::int64_t rows;
        std::int64_t rank;
    };

    void check(std::int64_t d, std::int64_t e) const;
    BlockStats block_stats(std::int64_t d, std::int64_t e, const std::vector<std::int64_t>& mu);

    template <class Fn>
    void for_each_block(std::int64_t d, std::int64_t e, Fn&& fn);

    int n_;
    std::int64_t p_;
    bool use_cache_;
    std::map<std::pair<std::int64_t, std::vector<std::int64_t>>, BlockStats> cache_;
};

} // namespace inccoh
