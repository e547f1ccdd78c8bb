#pragma once

// Which H^i(X, O_X(a,b)) vanish, for X the incidence correspondence in PV x PV*,
// dim V = n >= 3, over a field of characteristic p. Degrees run over 0..2n-3.

#include <cstdint>
#include <string_view>
#include <vector>

namespace inccoh {

struct LineBundle
{
    int n;
    std::int64_t a;
    std::int64_t b;

    LineBundle(int n, std::int64_t a, std::int64_t b);
};

enum class Flag
{
    zero,
    nonzero
};

/// The rule that settled one degree.
enum class Rule
{
    kempf,                  // a, b >= 0: only global sections
    strip,                  // a or b in [-n+2, -1]: everything vanishes
    serre_kempf,            // a, b <= -n+1: only the top degree
    boundary,               // a >= 1, b = -n+1: only H^{n-2}; a = 0: nothing
    region_vi_regularity,   // H^{n-1} in the chamber: compared against reg(D^d R)
    region_vi_boundary,     // H^{n-2} in the chamber: a = d = (t+1)p^k - 1 test
    region_vi_small_degree, // H^{n-2} in the chamber, n > 3: a = d < p
    region_vi_concentration // degrees other than n-2, n-1 in the chamber
};

/// One reduction applied before a rule fired.
enum class Step
{
    swap, // (a,b) -> (b,a), same degree
    serre // (a,b) -> (-n+1-a, -n+1-b), degree i -> 2n-3-i
};

std::string_view to_string(Flag f);
std::string_view to_string(Rule r);
std::string_view to_string(Step s);

struct CohomologyProfile
{
    int n = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::vector<Flag> flags; // index = degree
    std::vector<Rule> rules;
    std::vector<Step> path;  // reductions in the order applied

    int top_degree() const { return 2 * n - 3; }
    std::vector<int> nonzero_degrees() const;

    /// Rule for degree i prefixed by the reduction path, e.g. "swap+serre+boundary".
    std::string provenance(int i) const;

    /// Flags only; rules and path are ignored.
    bool same_pattern(const CohomologyProfile& other) const;
};

struct RegionViFlags
{
    Flag hn1;                  // H^{n-1}
    Flag hn2;                  // H^{n-2}
    bool small_degree_clause;  // hn2 was decided by the a = d < p clause at n > 3
};

/// The chamber b <= -n, a >= -b-n+1. With d = -b-n+1 and (t,k) the leading term of d:
/// H^{n-1} = 0 iff a >= (t+n-2)p^k - n + 2;
/// H^{n-2} = 0 iff a = d and (n = 3 and a = (t+1)p^k - 1, or d < p).
/// Throws OutOfRegion elsewhere.
RegionViFlags region_vi_vanishing(int n, std::int64_t p, std::int64_t a, std::int64_t b);

/// reg(D^d R) = (t+n-2)p^k - n + 2. Throws DomainError for d <= 0.
std::int64_t regularity_formula(int n, std::int64_t p, std::int64_t d);

/// Vanishing pattern for every degree of every line bundle.
CohomologyProfile full_profile(int n, std::int64_t p, std::int64_t a, std::int64_t b);

} // namespace inccoh
