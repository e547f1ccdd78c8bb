#pragma once

// Exact arithmetic in the SL_n character ring A_n = Z[x_1..x_n]/(x_1...x_n - 1).
//
// A Weight is an exponent vector modulo Z(1,...,1), stored with its last entry 0.
// A Character is a finite sparse sum of weights with nonzero arbitrary-precision
// coefficients, kept in lexicographically descending order of weights.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

namespace inccoh {

using Coeff = boost::multiprecision::cpp_int;
using Exponent = std::int64_t;

class Weight
{
public:
    Weight() = default;

    /// Representative of raw modulo Z(1,...,1) with last entry 0. Needs raw.size() >= 2.
    static Weight normalize(std::span<const Exponent> raw);
    static Weight normalize(std::initializer_list<Exponent> raw);

    int rank() const { return static_cast<int>(exps_.size()); }
    std::span<const Exponent> exps() const { return exps_; }
    Exponent operator[](std::size_t i) const { return exps_[i]; }

    /// Non-increasing entries (the normal form of a dominant weight).
    bool is_dominant() const;

    /// Sum of two normal forms is again a normal form.
    Weight operator+(const Weight& other) const;
    Weight scaled(Exponent factor) const;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b)
    {
        return a.exps_ <=> b.exps_;
    }

private:
    explicit Weight(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    std::vector<Exponent> exps_;
};

class Character
{
public:
    /// Descending lexicographic order; iteration yields the highest weight first.
    using Terms = std::map<Weight, Coeff, std::greater<>>;

    /// The zero character of A_rank.
    explicit Character(int rank);

    static Character one(int rank);
    static Character monomial(std::span<const Exponent> raw_exps, const Coeff& coeff = 1);
    static Character monomial(std::initializer_list<Exponent> raw_exps, const Coeff& coeff = 1);

    int rank() const { return rank_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient at a weight (zero when absent).
    Coeff coeff(const Weight& w) const;

    /// Adds c * x^w, dropping the term if it cancels.
    void add_term(const Weight& w, const Coeff& c);

    Character& operator+=(const Character& other);
    Character& operator-=(const Character& other);
    friend Character operator+(Character a, const Character& b) { return a += b; }
    friend Character operator-(Character a, const Character& b) { return a -= b; }
    Character operator-() const;
    friend Character operator*(const Character& a, const Character& b);
    Character& operator*=(const Character& other) { return *this = *this * other; }
    Character scaled(const Coeff& c) const;

    friend bool operator==(const Character&, const Character&) = default;

    /// The involution x_i -> x_i^{-1}.
    Character dual() const;

    /// x_i -> x_i^q; q must be a prime power (q = 1 is the identity).
    Character frobenius(std::int64_t q) const;

    /// Lexicographically largest weight present. Throws EmptyCharacter on zero.
    Weight highest_weight() const;

    /// Sum of coefficients (evaluation at x_i = 1).
    Coeff dim_eval() const;

    /// Invariance under permutations of the n coordinates.
    bool is_symmetric() const;

    /// Image under the coordinate permutation i -> perm[i].
    Character permuted(std::span<const int> perm) const;

    bool has_nonnegative_coefficients() const;

private:
    void check_rank(const Character& other) const;

    int rank_;
    Terms terms_;
};

/// Complete symmetric function h_d (zero for d < 0).
Character h(int n, std::int64_t d);

/// Elementary symmetric function e_d (zero for d < 0 and d > n).
Character e(int n, std::int64_t d);

/// Sum of degree-d monomials with every exponent < q.
Character h_trunc(int n, std::int64_t q, std::int64_t d);

/// Two-row Jacobi-Trudi determinant h_a h_b - h_{a+1} h_{b-1}.
Character schur2(int n, std::int64_t a, std::int64_t b);

/// Same determinant built from h_trunc(q, .).
Character schur2_trunc(int n, std::int64_t q, std::int64_t a, std::int64_t b);

/// Trivariate Nim character: sum of x^a y^b z^c over a+b+c = 2m with a xor b xor c = 0.
Character nim(std::int64_t m, int n = 3);

} // namespace inccoh
