#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace inccoh::detail {

/// Calls fn(parts) for every vector of non-negative integers with the given total
/// and parts[i] <= max_part[i], in lexicographically descending order.
template <class Fn>
void for_each_bounded_composition(std::int64_t total, std::span<const std::int64_t> max_part, Fn&& fn)
{
    const std::size_t n = max_part.size();
    if (total < 0 || n == 0)
        return;
    // suffix capacity: cap[i] = sum of max_part[i..n)
    std::vector<std::int64_t> cap(n + 1, 0);
    for (std::size_t i = n; i-- > 0;)
        cap[i] = cap[i + 1] + max_part[i];
    if (cap[0] < total)
        return;

    std::vector<std::int64_t> parts(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
        if (i + 1 == n) {
            if (left <= max_part[i]) {
                parts[i] = left;
                fn(static_cast<const std::vector<std::int64_t>&>(parts));
            }
            return;
        }
        const std::int64_t hi = std::min(left, max_part[i]);
        const std::int64_t lo = std::max<std::int64_t>(0, left - cap[i + 1]);
        for (std::int64_t v = hi; v >= lo; --v) {
            parts[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, total);
}

/// Unbounded variant: every composition of total into n non-negative parts.
template <class Fn>
void for_each_composition(std::int64_t total, int n, Fn&& fn)
{
    std::vector<std::int64_t> bound(static_cast<std::size_t>(n), total < 0 ? 0 : total);
    for_each_bounded_composition(total, bound, std::forward<Fn>(fn));
}

} // namespace inccoh::detail
