#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lpp {

// Largest supported ambient variable count. Polarization grows the ring, so
// this leaves headroom above the n <= 4 desk-scale workloads.
inline constexpr std::size_t kMaxVars = 24;

using Exponent = std::uint16_t;

// Exponent vector x_1^{e_1} ... x_n^{e_n}. Variables are 0-based internally
// and printed 1-based. Entries past n are always zero, so whole-array
// comparison and hashing are valid.
class Monomial {
public:
    Monomial() = default;

    // The unit monomial 1 in n variables.
    explicit Monomial(std::size_t n);

    Monomial(std::initializer_list<int> exponents);

    static Monomial from_exponents(std::span<const int> exponents);

    // x_k^power in n variables (k is 0-based).
    static Monomial variable(std::size_t n, std::size_t k, int power = 1);

    std::size_t nvars() const noexcept { return n_; }

    int operator[](std::size_t i) const noexcept { return exps_[i]; }

    // Returns a copy with exponent i replaced.
    Monomial with(std::size_t i, int exponent) const;

    int degree() const noexcept;
    bool is_one() const noexcept;
    bool is_squarefree() const noexcept;

    // Bitmask of variables with nonzero exponent.
    std::uint32_t support() const noexcept;

    // 1-based index of the largest variable dividing this monomial; 0 for 1.
    std::size_t max_variable() const noexcept;

    // sqrt(m): product of the variables in the support.
    Monomial radical() const noexcept;

    bool divides(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::size_t hash() const noexcept;

    std::string to_string() const;

private:
    friend Monomial operator*(const Monomial&, const Monomial&);
    friend Monomial operator/(const Monomial&, const Monomial&);
    friend Monomial gcd(const Monomial&, const Monomial&);
    friend Monomial lcm(const Monomial&, const Monomial&);
    friend Monomial colon(const Monomial&, const Monomial&);

    std::uint8_t n_ = 0;
    std::array<Exponent, kMaxVars> exps_{};
};

Monomial operator*(const Monomial& u, const Monomial& v);

// Exact quotient u / v; throws PreconditionError unless v divides u.
Monomial operator/(const Monomial& u, const Monomial& v);

Monomial gcd(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);

// u / gcd(u, v): the generator of ((u) : v).
Monomial colon(const Monomial& u, const Monomial& v);

// Lexicographic order: u > v iff the first differing exponent is larger in u.
// Degrees need not agree.
std::strong_ordering lex_compare(const Monomial& u, const Monomial& v);

// Reverse lexicographic order on monomials of equal degree: u > v iff the
// last differing exponent is smaller in u. Throws on unequal degrees.
std::strong_ordering revlex_compare(const Monomial& u, const Monomial& v);

// Strict weak orderings usable as comparators. "Desc" puts greater first.
struct LexGreater {
    bool operator()(const Monomial& u, const Monomial& v) const { return lex_compare(u, v) > 0; }
};

struct RevlexGreater {
    bool operator()(const Monomial& u, const Monomial& v) const { return revlex_compare(u, v) > 0; }
};

// Total order for containers: degree ascending, then lex descending.
struct DegLexLess {
    bool operator()(const Monomial& u, const Monomial& v) const;
};

// All degree-d monomials in n variables, lex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t n, int d);

// Number of degree-d monomials in n variables, C(n+d-1, d), saturating at
// SIZE_MAX.
std::size_t count_monomials(std::size_t n, int d);

// All monomials dividing m, in no guaranteed order.
std::vector<Monomial> divisors(const Monomial& m);

// Swaps the exponents of variables a and b. Throws if a == b.
Monomial sigma_swap(const Monomial& m, std::size_t a, std::size_t b);

} // namespace lpp

template <>
struct std::hash<lpp::Monomial> {
    std::size_t operator()(const lpp::Monomial& m) const noexcept { return m.hash(); }
};
