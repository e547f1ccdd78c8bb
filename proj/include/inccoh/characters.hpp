#pragma once

// Characters of cohomology of D^d R twisted on P = PV.
//
// Two twist conventions are in use and every function says which it takes:
//   - pair convention:  h^i(d,e) = [H^i(P, D^d R(e-1))]   (h0, h1, euler_char, hw_h1, h1_p2_closed)
//   - raw twist:        [H^1(P, D^d R(e_twist))]          (char_small_d, corner_char)

#include "inccoh/char_ring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

namespace inccoh {

/// h0(d,e) - h1(d,e) for n = 3, pair convention.
Character euler_char(int n, std::int64_t d, std::int64_t e);

/// [H^1(P, D^d R(e_twist))] = s^(p)_(e_twist+p, d-p) for p <= d < 2p, e_twist >= d-1.
Character char_small_d(int n, std::int64_t p, std::int64_t d, std::int64_t e_twist);

struct CornerData
{
    Character character;
    std::int64_t d; // t p^k
    std::int64_t a; // (t+n-2) p^k - n + 1, so the raw twist is a - 1
    std::int64_t b; // -d - n + 1
};

/// H^1(P, D^{tq} R(a-1)) = F^q(S_(t-1,t-1) V) with q = p^k and a as in CornerData.
CornerData corner_char(int n, std::int64_t p, std::int64_t t, int k);

/// The n = 3 recursion, pair convention. Results are memoized per instance,
/// so one instance must not be shared between threads without a lock.
class Sl3Cohomology
{
public:
    /// Throws UnsupportedRank unless n = 3 and InvalidArgument unless p is prime.
    Sl3Cohomology(int n, std::int64_t p);

    std::int64_t p() const { return p_; }

    /// Zero when d <= 0 or e < 0.
    const Character& h1(std::int64_t d, std::int64_t e);
    const Character& h0(std::int64_t d, std::int64_t e) { return h1(e, d); }

    /// Character of H^i(X, O_X(a,b)); std::nullopt where no formula is available
    /// (H^0 for a, b >= 0 and H^3 for a, b <= -2).
    std::optional<Character> line_bundle_character(std::int64_t a, std::int64_t b, int i);

    std::size_t memo_size() const { return memo_.size(); }

private:
    std::int64_t p_;
    std::map<std::pair<std::int64_t, std::int64_t>, Character> memo_;
    Character zero_;
};

/// Whether h1(d,e) != 0, read off the vanishing rules (d >= 1 and e <= (t+1)q - 2).
bool h1_nonzero(std::int64_t p, std::int64_t d, std::int64_t e);

/// Highest weight of h1(d,e) for n = 3 without computing the character.
/// Throws NoHighestWeight when h1(d,e) = 0.
Weight hw_h1(std::int64_t d, std::int64_t e, std::int64_t p);

/// The p = 2 closed form for h1(d,e), 2^k <= d <= e <= 2^{k+1} - 2.
Character h1_p2_closed(std::int64_t d, std::int64_t e, int k);

} // namespace inccoh
