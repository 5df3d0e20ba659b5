#include "lpp/transforms.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "lpp/error.hpp"
#include "lpp/hilbert.hpp"

namespace lpp {

namespace {

void check_pair(const MonomialIdeal& I, std::size_t a, std::size_t b)
{
    if (a >= b || b >= I.nvars()) {
        throw PreconditionError("need variables a < b inside the ring, got x" + std::to_string(a + 1) + ", x"
                                + std::to_string(b + 1));
    }
}

void check_cap(int cap)
{
    if (cap < 0) {
        throw PreconditionError("degree cap must be nonnegative");
    }
}

// Membership of f a^p b^q in J for the t-th (a,b)-shift, where m has
// exponents p, q at a, b.
bool in_shift(const MonomialIdeal& I, const Monomial& m, const ShiftSpec& spec)
{
    const int p = m[spec.a];
    const int q = m[spec.b];
    if (q < spec.t) {
        return I.contains(m);
    }
    const int q0 = q - spec.t;
    if (p == q0) {
        return I.contains(m);
    }
    const Monomial partner = m.with(spec.a, q0).with(spec.b, p + spec.t);
    if (p > q0) {
        return I.contains(m) || I.contains(partner);
    }
    return I.contains(m) && I.contains(partner);
}

// Slice key: m with the exponents in `vars` cleared.
Monomial outside_part(const Monomial& m, std::uint32_t vars)
{
    Monomial f = m;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (vars & (1u << i)) {
            f = f.with(i, 0);
        }
    }
    return f;
}

std::vector<Monomial> compressed_degree(const MonomialIdeal& I, std::uint32_t vars, int d)
{
    std::map<Monomial, std::size_t, DegLexLess> counts;
    for (const auto& m : I.degree_set(d)) {
        ++counts[outside_part(m, vars)];
    }
    std::vector<Monomial> out;
    for (const auto& [f, count] : counts) {
        for (const auto& w : lex_segment(I.nvars(), vars, d - f.degree(), count)) {
            out.push_back(w * f);
        }
    }
    std::sort(out.begin(), out.end(), LexGreater{});
    return out;
}

bool has_borel_moves(const Monomial& m, const std::function<bool(const Monomial&)>& member)
{
    for (std::size_t j = 1; j < m.nvars(); ++j) {
        if (m[j] == 0) {
            continue;
        }
        for (std::size_t i = 0; i < j; ++i) {
            if (!member(m.with(j, m[j] - 1).with(i, m[i] + 1))) {
                return false;
            }
        }
    }
    return true;
}

void certify_step(const MonomialIdeal& before, const MonomialIdeal& after, const PowerSequence& P, int cap,
                  const char* what)
{
    if (!is_subset(P.ideal(), after)) {
        throw CertificateFailure(std::string(what) + " lost a pure power: " + after.to_string());
    }
    if (!hf_equal(before, after, cap)) {
        throw CertificateFailure(std::string(what) + " changed the Hilbert function of " + before.to_string());
    }
    const IdealOrder order = revlex_compare_ideals(after, before, cap);
    if (order != IdealOrder::greater && order != IdealOrder::equal) {
        throw CertificateFailure(std::string(what) + " is not revlex-greater: " + before.to_string() + " -> "
                                 + after.to_string());
    }
}

void check_contains_powers(const MonomialIdeal& I, const PowerSequence& P)
{
    if (I.nvars() != P.nvars()) {
        throw DimensionMismatch("ideal and power sequence live in different rings");
    }
    if (!is_subset(P.ideal(), I)) {
        throw PreconditionError(I.to_string() + " does not contain the pure powers");
    }
}

} // namespace

int default_cap(const MonomialIdeal& I, const PowerSequence& P, int margin)
{
    return std::max(I.max_generator_degree(), 0) + P.finite_sum() + margin;
}

MonomialIdeal stabilized_ideal(std::size_t n, const std::vector<std::vector<Monomial>>& sets, int margin)
{
    const int cap = static_cast<int>(sets.size()) - 1;
    for (std::size_t d = 1; d < sets.size(); ++d) {
        const std::unordered_set<Monomial> next(sets[d].begin(), sets[d].end());
        for (const auto& m : sets[d - 1]) {
            for (std::size_t i = 0; i < n; ++i) {
                if (!next.contains(m * Monomial::variable(n, i))) {
                    throw CapError("degreewise sets are not closed under multiplication at degree "
                                   + std::to_string(d));
                }
            }
        }
    }
    MonomialIdeal J = ideal_from_degree_sets(n, sets);
    if (J.max_generator_degree() > cap - margin) {
        throw CapError("construction has a generator in degree " + std::to_string(J.max_generator_degree())
                       + ", too close to cap " + std::to_string(cap) + "; raise the cap");
    }
    return J;
}

MonomialIdeal shift(const MonomialIdeal& I, const ShiftSpec& spec, int cap, int margin)
{
    check_pair(I, spec.a, spec.b);
    check_cap(cap);
    if (spec.t < 0) {
        throw PreconditionError("shift offset t must be nonnegative");
    }
    std::vector<std::vector<Monomial>> sets(static_cast<std::size_t>(cap) + 1);
    for (int d = 0; d <= cap; ++d) {
        for (auto& m : monomials_of_degree(I.nvars(), d)) {
            if (in_shift(I, m, spec)) {
                sets[static_cast<std::size_t>(d)].push_back(m);
            }
        }
    }
    return stabilized_ideal(I.nvars(), sets, margin);
}

bool is_shifted(const MonomialIdeal& I, const ShiftSpec& spec, int cap)
{
    check_pair(I, spec.a, spec.b);
    for (int d = 0; d <= cap; ++d) {
        for (const auto& m : I.degree_set(d)) {
            const int s = m[spec.a];
            const int q = m[spec.b];
            if (q < spec.t) {
                continue;
            }
            const int l = q - spec.t;
            if (s < l && !I.contains(m.with(spec.a, l).with(spec.b, s + spec.t))) {
                return false;
            }
        }
    }
    return true;
}

bool is_strongly_shifted(const MonomialIdeal& I, std::size_t a, std::size_t b, int cap)
{
    for (int t = 0; t < std::max(cap, 1); ++t) {
        if (!is_shifted(I, {a, b, t}, cap)) {
            return false;
        }
    }
    return true;
}

MonomialIdeal compress(const MonomialIdeal& I, std::uint32_t vars, int cap, int margin)
{
    check_cap(cap);
    if (vars == 0 || (vars >> I.nvars()) != 0) {
        throw PreconditionError("compression variables must be a nonempty subset of the ring");
    }
    std::vector<std::vector<Monomial>> sets;
    for (int d = 0; d <= cap; ++d) {
        sets.push_back(compressed_degree(I, vars, d));
    }
    return stabilized_ideal(I.nvars(), sets, margin);
}

bool is_compressed(const MonomialIdeal& I, std::uint32_t vars, int cap)
{
    for (int d = 0; d <= cap; ++d) {
        if (compressed_degree(I, vars, d) != I.degree_set(d)) {
            return false;
        }
    }
    return true;
}

bool is_borel(const MonomialIdeal& I)
{
    return std::all_of(I.generators().begin(), I.generators().end(), [&](const Monomial& g) {
        return has_borel_moves(g, [&](const Monomial& m) { return I.contains(m); });
    });
}

bool is_borel_degreewise(const MonomialIdeal& I, int cap)
{
    for (int d = 0; d <= cap; ++d) {
        for (const auto& m : I.degree_set(d)) {
            if (!has_borel_moves(m, [&](const Monomial& u) { return I.contains(u); })) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<Monomial>> borel_interior(const MonomialIdeal& I, int cap)
{
    std::vector<std::vector<Monomial>> sets;
    for (int d = 0; d <= cap; ++d) {
        // Borel moves raise lex order, so a lex-descending pass sees every
        // move target before the monomial itself.
        std::unordered_set<Monomial> inside;
        std::vector<Monomial> level;
        for (const auto& m : I.degree_set(d)) {
            if (has_borel_moves(m, [&](const Monomial& u) { return inside.contains(u); })) {
                inside.insert(m);
                level.push_back(m);
            }
        }
        sets.push_back(std::move(level));
    }
    return sets;
}

bool is_borel_plus_P(const MonomialIdeal& I, const PowerSequence& P, int cap)
{
    check_contains_powers(I, P);
    const MonomialIdeal powers = P.ideal();
    const auto interior = borel_interior(I, cap);
    for (int d = 0; d <= cap; ++d) {
        const auto& inside = interior[static_cast<std::size_t>(d)];
        const std::unordered_set<Monomial> borel_part(inside.begin(), inside.end());
        for (const auto& m : I.degree_set(d)) {
            if (!borel_part.contains(m) && !powers.contains(m)) {
                return false;
            }
        }
    }
    return true;
}

Polarization polarize(const MonomialIdeal& I, std::size_t b)
{
    if (b >= I.nvars()) {
        throw PreconditionError("polarization variable outside the ring");
    }
    int s = 0;
    for (const auto& g : I.generators()) {
        s = std::max(s, g[b]);
    }
    const std::size_t added = s > 1 ? static_cast<std::size_t>(s - 1) : 0;
    const std::size_t n = I.nvars() + added;
    if (n > kMaxVars) {
        throw PreconditionError("polarization needs " + std::to_string(n) + " variables");
    }
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        Monomial u(n);
        for (std::size_t i = 0; i < I.nvars(); ++i) {
            u = u.with(i, i == b ? std::min(g[i], 1) : g[i]);
        }
        for (int k = 1; k < g[b]; ++k) {
            u = u.with(I.nvars() + static_cast<std::size_t>(k) - 1, 1);
        }
        gens.push_back(u);
    }
    return {MonomialIdeal::from_generators(n, std::move(gens)), added};
}

MonomialIdeal extend_ring(const MonomialIdeal& I, std::size_t n)
{
    if (n < I.nvars()) {
        throw DimensionMismatch("cannot extend to a smaller ring");
    }
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        Monomial u(n);
        for (std::size_t i = 0; i < I.nvars(); ++i) {
            u = u.with(i, g[i]);
        }
        gens.push_back(u);
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal delete_power(const MonomialIdeal& I, std::size_t b, int e_b)
{
    const Monomial power = Monomial::variable(I.nvars(), b, e_b);
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        if (g != power) {
            gens.push_back(g);
        }
    }
    return MonomialIdeal::from_generators(I.nvars(), std::move(gens));
}

MonomialIdeal delete_power(const MonomialIdeal& I, const PowerSequence& P, std::size_t b)
{
    const auto e_b = P.exponent(b);
    return e_b ? delete_power(I, b, *e_b) : I;
}

bool is_shifted_plus_P(const MonomialIdeal& I, const PowerSequence& P, const ShiftSpec& spec, int cap)
{
    return is_shifted(delete_power(I, P, spec.b), spec, cap);
}

bool is_compressed_plus_P(const MonomialIdeal& I, const PowerSequence& P, std::size_t a, std::size_t b, int cap)
{
    check_pair(I, a, b);
    return is_compressed(delete_power(I, P, b), (1u << a) | (1u << b), cap);
}

MonomialIdeal tshift_plus_P(const MonomialIdeal& I, const PowerSequence& P, const ShiftSpec& spec, int cap,
                            int margin)
{
    check_contains_powers(I, P);
    check_pair(I, spec.a, spec.b);
    const MonomialIdeal reduced = delete_power(I, P, spec.b);
    if (!is_shifted(reduced, spec, cap)) {
        throw PreconditionError(I.to_string() + " is not (a,b,t)-shifted-plus-P for t = "
                                + std::to_string(spec.t));
    }
    const MonomialIdeal J = sum(shift(reduced, {spec.a, spec.b, spec.t + 1}, cap, margin), P.ideal());
    certify_step(I, J, P, cap, "t-shift-plus-P");
    return J;
}

const char* to_string(StepKind kind)
{
    switch (kind) {
    case StepKind::initial_shift:
        return "initial-shift";
    case StepKind::t_shift_plus_P:
        return "t-shift-plus-P";
    case StepKind::compression_plus_P:
        return "compression-plus-P";
    }
    return "unknown";
}

MonomialIdeal strong_shift_plus_P(const MonomialIdeal& I, const PowerSequence& P, std::size_t a, std::size_t b,
                                  int cap, const StrongShiftOptions& options)
{
    check_contains_powers(I, P);
    MonomialIdeal current = shift(I, {a, b, 0}, cap, options.margin);
    certify_step(I, current, P, cap, "initial shift");
    if (current != I) {
        if (options.observer) {
            options.observer({StepKind::initial_shift, a, b, 0, I, current});
        }
    }
    for (int iteration = 0;; ++iteration) {
        if (iteration >= options.iteration_limit) {
            throw CertificateFailure("strong shift did not terminate within " + std::to_string(options.iteration_limit)
                                     + " steps");
        }
        int failing = -1;
        for (int t = 1; t < cap && failing < 0; ++t) {
            if (!is_shifted_plus_P(current, P, {a, b, t}, cap)) {
                failing = t;
            }
        }
        if (failing < 0) {
            return current;
        }
        const MonomialIdeal next = tshift_plus_P(current, P, {a, b, failing - 1}, cap, options.margin);
        if (revlex_compare_ideals(next, current, cap) != IdealOrder::greater) {
            throw CertificateFailure("t-shift-plus-P made no progress on " + current.to_string());
        }
        if (options.observer) {
            options.observer({StepKind::t_shift_plus_P, a, b, failing - 1, current, next});
        }
        current = next;
    }
}

MonomialIdeal compress_plus_P(const MonomialIdeal& I, const PowerSequence& P, std::size_t a, std::size_t b, int cap,
                              int margin)
{
    check_contains_powers(I, P);
    check_pair(I, a, b);
    const MonomialIdeal reduced = delete_power(I, P, b);
    const MonomialIdeal T = sum(compress(reduced, (1u << a) | (1u << b), cap, margin), P.ideal());
    certify_step(I, T, P, cap, "compression-plus-P");
    return T;
}

} // namespace lpp
