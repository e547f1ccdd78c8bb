#include "inccoh/vanishing.hpp"

#include "inccoh/errors.hpp"
#include "inccoh/padic.hpp"

#include <fmt/format.h>

#include <string>

namespace inccoh {

LineBundle::LineBundle(int n_, std::int64_t a_, std::int64_t b_) : n(n_), a(a_), b(b_)
{
    if (n < 3)
        throw DomainError(fmt::format("the incidence correspondence needs n >= 3, got {}", n));
}

std::string_view to_string(Flag f)
{
    return f == Flag::zero ? "zero" : "nonzero";
}

std::string_view to_string(Rule r)
{
    switch (r) {
    case Rule::kempf: return "kempf";
    case Rule::strip: return "strip";
    case Rule::serre_kempf: return "serre_kempf";
    case Rule::boundary: return "boundary";
    case Rule::region_vi_regularity: return "region_vi_regularity";
    case Rule::region_vi_boundary: return "region_vi_boundary";
    case Rule::region_vi_small_degree: return "region_vi_small_degree";
    case Rule::region_vi_concentration: return "region_vi_concentration";
    }
    return "?";
}

std::string_view to_string(Step s)
{
    return s == Step::swap ? "swap" : "serre";
}

std::vector<int> CohomologyProfile::nonzero_degrees() const
{
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(flags.size()); ++i)
        if (flags[static_cast<std::size_t>(i)] == Flag::nonzero)
            out.push_back(i);
    return out;
}

std::string CohomologyProfile::provenance(int i) const
{
    std::string s;
    for (Step st : path) {
        s += to_string(st);
        s += '+';
    }
    s += to_string(rules.at(static_cast<std::size_t>(i)));
    return s;
}

bool CohomologyProfile::same_pattern(const CohomologyProfile& other) const
{
    return n == other.n && flags == other.flags;
}

std::int64_t regularity_formula(int n, std::int64_t p, std::int64_t d)
{
    if (n < 3)
        throw DomainError(fmt::format("regularity_formula: n = {} < 3", n));
    if (d <= 0)
        throw DomainError(fmt::format("regularity_formula: d = {} must be positive", d));
    const PAdicLeading lt = leading_term(d, p);
    return (lt.t + n - 2) * lt.q - n + 2;
}

RegionViFlags region_vi_vanishing(int n, std::int64_t p, std::int64_t a, std::int64_t b)
{
    LineBundle lb(n, a, b);
    if (!is_prime(p))
        throw InvalidArgument(fmt::format("p = {} is not prime", p));
    if (b > -n || a < -b - n + 1)
        throw OutOfRegion(fmt::format("({}, {}) is outside b <= -n, a >= -b-n+1; use full_profile", a, b));

    const std::int64_t d = -b - n + 1;
    const PAdicLeading lt = leading_term(d, p);
    RegionViFlags r{};
    r.hn1 = a >= regularity_formula(n, p, d) ? Flag::zero : Flag::nonzero;

    const bool corner = n == 3 && a == (lt.t + 1) * lt.q - 1;
    const bool small = d < p;
    r.hn2 = (a == d && (corner || small)) ? Flag::zero : Flag::nonzero;
    r.small_degree_clause = a == d && small && !corner;
    return r;
}

namespace {

CohomologyProfile uniform(int n, std::int64_t a, std::int64_t b, Rule rule)
{
    CohomologyProfile pr;
    pr.n = n;
    pr.a = a;
    pr.b = b;
    pr.flags.assign(static_cast<std::size_t>(2 * n - 2), Flag::zero);
    pr.rules.assign(static_cast<std::size_t>(2 * n - 2), rule);
    return pr;
}

CohomologyProfile profile_rec(int n, std::int64_t p, std::int64_t a, std::int64_t b)
{
    const std::int64_t top = 2 * n - 3;
    auto in_strip = [n](std::int64_t x) { return x >= -n + 2 && x <= -1; };

    if (in_strip(a) || in_strip(b))
        return uniform(n, a, b, Rule::strip);
    if (a >= 0 && b >= 0) {
        auto pr = uniform(n, a, b, Rule::kempf);
        pr.flags[0] = Flag::nonzero;
        return pr;
    }
    if (a <= -n + 1 && b <= -n + 1) {
        auto pr = uniform(n, a, b, Rule::serre_kempf);
        pr.flags[static_cast<std::size_t>(top)] = Flag::nonzero;
        return pr;
    }
    if (a <= -n + 1) {
        auto pr = profile_rec(n, p, b, a);
        pr.a = a;
        pr.b = b;
        pr.path.insert(pr.path.begin(), Step::swap);
        return pr;
    }
    // a >= 0, b <= -n+1
    if (b == -n + 1) {
        // (0, -n+1) is its own Serre dual up to swap, so nothing survives there.
        auto pr = uniform(n, a, b, Rule::boundary);
        if (a >= 1)
            pr.flags[static_cast<std::size_t>(n - 2)] = Flag::nonzero;
        return pr;
    }
    if (a + b >= -n + 1) {
        const RegionViFlags f = region_vi_vanishing(n, p, a, b);
        auto pr = uniform(n, a, b, Rule::region_vi_concentration);
        pr.flags[static_cast<std::size_t>(n - 1)] = f.hn1;
        pr.rules[static_cast<std::size_t>(n - 1)] = Rule::region_vi_regularity;
        pr.flags[static_cast<std::size_t>(n - 2)] = f.hn2;
        pr.rules[static_cast<std::size_t>(n - 2)] =
            f.small_degree_clause ? Rule::region_vi_small_degree : Rule::region_vi_boundary;
        return pr;
    }
    auto dual = profile_rec(n, p, -n + 1 - a, -n + 1 - b);
    auto pr = uniform(n, a, b, Rule::kempf);
    for (std::int64_t i = 0; i <= top; ++i) {
        pr.flags[static_cast<std::size_t>(i)] = dual.flags[static_cast<std::size_t>(top - i)];
        pr.rules[static_cast<std::size_t>(i)] = dual.rules[static_cast<std::size_t>(top - i)];
    }
    pr.path = dual.path;
    pr.path.insert(pr.path.begin(), Step::serre);
    return pr;
}

} // namespace

CohomologyProfile full_profile(int n, std::int64_t p, std::int64_t a, std::int64_t b)
{
    LineBundle lb(n, a, b);
    if (!is_prime(p))
        throw InvalidArgument(fmt::format("p = {} is not prime", p));
    return profile_rec(n, p, a, b);
}

} // namespace inccoh
