#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpp/monomial.hpp"

namespace lpp {

// Degreewise monomial sets {I_d} for d = 0..cap, each lex-descending.
struct Expansion {
    int cap = -1;
    std::vector<std::vector<Monomial>> by_degree;

    const std::vector<Monomial>& at(int d) const { return by_degree.at(static_cast<std::size_t>(d)); }
};

// Monomial ideal held by its minimal generators, sorted lex-descending.
// The zero ideal has no generators; the unit ideal has the generator 1.
//
// Values are immutable. with_expansion() returns a copy carrying a shared,
// read-only degreewise cache up to an explicit cap.
class MonomialIdeal {
public:
    // The zero ideal of k[x_1..x_n].
    explicit MonomialIdeal(std::size_t n = 0);

    // Minimalizes and canonically orders an arbitrary generating set.
    static MonomialIdeal from_generators(std::size_t n, std::vector<Monomial> gens);
    static MonomialIdeal unit(std::size_t n);

    std::size_t nvars() const noexcept { return n_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept;

    bool contains(const Monomial& m) const;

    // Largest generator degree; -1 for the zero ideal.
    int max_generator_degree() const noexcept;

    // lcm of all generators (1 for the zero ideal).
    Monomial generator_lcm() const;

    MonomialIdeal with_expansion(int cap) const;
    const Expansion* cached_expansion() const noexcept { return cache_.get(); }

    // Degree-d monomials of the ideal, lex-descending. Served from the cache
    // when it covers d.
    std::vector<Monomial> degree_set(int d) const;

    // Number of degree-d monomials.
    std::size_t degree_count(int d) const;

    std::string to_string() const;

    friend bool operator==(const MonomialIdeal& I, const MonomialIdeal& J)
    {
        return I.n_ == J.n_ && I.gens_ == J.gens_;
    }

private:
    friend MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);

    std::size_t n_;
    std::vector<Monomial> gens_;
    std::shared_ptr<const Expansion> cache_;
};

// Removes generators divisible by other generators and sorts lex-descending.
MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);

Expansion expand(const MonomialIdeal& I, int cap);

// Rebuilds an ideal from degreewise sets {J_0..J_cap}: a monomial of J_d is a
// minimal generator when no m / x_i lies in J_{d-1}. The sets are trusted to
// come from an ideal up to cap; see transforms for the stabilization check.
MonomialIdeal ideal_from_degree_sets(std::size_t n, const std::vector<std::vector<Monomial>>& sets);

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m);
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

// u * I.
MonomialIdeal scale(const MonomialIdeal& I, const Monomial& u);

// I is a subset of J.
bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal sigma_swap(const MonomialIdeal& I, std::size_t a, std::size_t b);

// The ideal of k[x_1..x_n] (exponents outside `vars` forced to zero) spanned
// by the generators of I whose support lies in `vars`: I ∩ k[vars].
MonomialIdeal restrict_to(const MonomialIdeal& I, std::uint32_t vars);

// Pure powers P = (x_1^{e_1}, ..., x_r^{e_r}) with 2 <= e_1 <= ... <= e_r and
// r <= n. Variables past r carry no power.
class PowerSequence {
public:
    PowerSequence() = default;
    PowerSequence(std::size_t n, std::vector<int> exponents);

    std::size_t nvars() const noexcept { return n_; }
    std::size_t length() const noexcept { return exps_.size(); }
    const std::vector<int>& exponents() const noexcept { return exps_; }

    // e_k for variable k (0-based), or nullopt when infinite.
    std::optional<int> exponent(std::size_t k) const;

    // x_k^{e_k}; requires a finite exponent.
    Monomial pure_power(std::size_t k) const;

    int finite_sum() const noexcept;

    MonomialIdeal ideal() const;

    friend bool operator==(const PowerSequence&, const PowerSequence&) = default;

private:
    std::size_t n_ = 0;
    std::vector<int> exps_;
};

// Ground field, identified by its characteristic (0 or a prime).
class Field {
public:
    Field() = default;
    explicit Field(long characteristic);

    long characteristic() const noexcept { return p_; }

    friend bool operator==(const Field&, const Field&) = default;

private:
    long p_ = 0;
};

enum class IdealOrder { less, equal, greater, incomparable };

std::string to_string(IdealOrder order);

// Compares equal-size, equal-degree monomial sets after sorting each
// revlex-descending; the first positional difference decides.
std::strong_ordering revlex_compare_sets(std::span<const Monomial> A, std::span<const Monomial> B);

// Degreewise revlex comparison of ideals with equal Hilbert function up to
// cap. Throws PreconditionError if some degree has different counts.
IdealOrder revlex_compare_ideals(const MonomialIdeal& I, const MonomialIdeal& J, int cap);

} // namespace lpp
