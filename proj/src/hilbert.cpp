#include "lpp/hilbert.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "lpp/error.hpp"

namespace lpp {

namespace {

BigInt binomial(long top, long k)
{
    if (k < 0 || top < 0 || k > top) {
        return 0;
    }
    k = std::min(k, top - k);
    BigInt c = 1;
    for (long i = 1; i <= k; ++i) {
        c = c * (top - k + i) / i;
    }
    return c;
}

std::size_t to_size(const BigInt& v, int d)
{
    if (v < 0 || v > BigInt(std::numeric_limits<std::size_t>::max())) {
        throw InfeasibleHilbertFunction("Hilbert function value out of range in degree " + std::to_string(d));
    }
    return v.convert_to<std::size_t>();
}

using Numerator = std::vector<BigInt>;

void add_shifted(Numerator& acc, const Numerator& term, int shift, int sign)
{
    if (acc.size() < term.size() + static_cast<std::size_t>(shift)) {
        acc.resize(term.size() + static_cast<std::size_t>(shift), 0);
    }
    for (std::size_t k = 0; k < term.size(); ++k) {
        if (sign > 0) {
            acc[k + static_cast<std::size_t>(shift)] += term[k];
        } else {
            acc[k + static_cast<std::size_t>(shift)] -= term[k];
        }
    }
}

class NumeratorRecursion {
public:
    Numerator quotient(const MonomialIdeal& I)
    {
        if (I.is_zero()) {
            return {1};
        }
        if (I.is_unit()) {
            return {};
        }
        const auto& gens = I.generators();
        if (gens.size() == 1) {
            Numerator k{1};
            add_shifted(k, {1}, gens.front().degree(), -1);
            return k;
        }
        const std::string key = I.to_string();
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        // I = J + (g) with g lex-greatest:
        // K(S/I) = K(S/J) - t^{deg g} K(S/(J : g)).
        const Monomial& pivot = gens.front();
        const MonomialIdeal rest =
            MonomialIdeal::from_generators(I.nvars(), std::vector<Monomial>(gens.begin() + 1, gens.end()));
        Numerator k = quotient(rest);
        add_shifted(k, quotient(colon(rest, pivot)), pivot.degree(), -1);
        memo_.emplace(key, k);
        return k;
    }

private:
    std::map<std::string, Numerator> memo_;
};

HilbertFunction by_expansion(const MonomialIdeal& I, int cap)
{
    HilbertFunction hf;
    hf.cap = cap;
    hf.values.resize(static_cast<std::size_t>(cap) + 1);
    std::vector<std::size_t> counts(static_cast<std::size_t>(cap) + 1, 0);
#pragma omp parallel for schedule(dynamic)
    for (int d = 0; d <= cap; ++d) {
        counts[static_cast<std::size_t>(d)] = I.degree_count(d);
    }
    for (int d = 0; d <= cap; ++d) {
        hf.values[static_cast<std::size_t>(d)] = counts[static_cast<std::size_t>(d)];
    }
    return hf;
}

HilbertFunction by_recursion(const MonomialIdeal& I, int cap)
{
    const Numerator k = hilbert_numerator(I);
    const long n = static_cast<long>(I.nvars());
    HilbertFunction hf;
    hf.cap = cap;
    hf.values.resize(static_cast<std::size_t>(cap) + 1);
    for (int d = 0; d <= cap; ++d) {
        BigInt quotient_dim = 0;
        for (std::size_t j = 0; j < k.size() && static_cast<int>(j) <= d; ++j) {
            const long shifted = d - static_cast<long>(j);
            quotient_dim += k[j] * (n == 0 ? BigInt(shifted == 0 ? 1 : 0) : binomial(n - 1 + shifted, n - 1));
        }
        hf.values[static_cast<std::size_t>(d)] = dim_polynomial_ring(I.nvars(), d) - quotient_dim;
    }
    return hf;
}

std::vector<std::vector<Monomial>> verified_segments(std::size_t n, std::vector<std::vector<Monomial>> sets,
                                                     const char* what)
{
    for (std::size_t d = 1; d < sets.size(); ++d) {
        const std::unordered_set<Monomial> next(sets[d].begin(), sets[d].end());
        for (const auto& m : sets[d - 1]) {
            for (std::size_t i = 0; i < n; ++i) {
                if (!next.contains(m * Monomial::variable(n, i))) {
                    throw InfeasibleHilbertFunction(std::string(what) + " segments do not form an ideal: "
                                                    + m.to_string() + " * x" + std::to_string(i + 1)
                                                    + " missing in degree " + std::to_string(d));
                }
            }
        }
    }
    return sets;
}

} // namespace

BigInt dim_polynomial_ring(std::size_t n, int d)
{
    if (d < 0) {
        return 0;
    }
    if (n == 0) {
        return d == 0 ? 1 : 0;
    }
    return binomial(static_cast<long>(n) - 1 + d, static_cast<long>(n) - 1);
}

std::vector<BigInt> hilbert_numerator(const MonomialIdeal& I)
{
    NumeratorRecursion rec;
    auto k = rec.quotient(I);
    while (!k.empty() && k.back() == 0) {
        k.pop_back();
    }
    return k;
}

HilbertFunction hilbert_function(const MonomialIdeal& I, int cap, HilbertMethod method)
{
    if (cap < 0) {
        throw PreconditionError("Hilbert function cap must be nonnegative");
    }
    switch (method) {
    case HilbertMethod::expansion:
        return by_expansion(I, cap);
    case HilbertMethod::recursion:
        return by_recursion(I, cap);
    case HilbertMethod::cross_check: {
        auto a = by_expansion(I, cap);
        auto b = by_recursion(I, cap);
        if (!(a == b)) {
            throw CertificateFailure("Hilbert function paths disagree for " + I.to_string());
        }
        return a;
    }
    }
    throw PreconditionError("unknown Hilbert method");
}

std::vector<Monomial> lex_segment(std::size_t n, std::uint32_t vars, int d, std::size_t count)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
        if (vars & (1u << i)) {
            idx.push_back(i);
        }
    }
    std::vector<Monomial> out;
    if (count == 0) {
        return out;
    }
    for (const auto& small : monomials_of_degree(idx.size(), d)) {
        Monomial m(n);
        for (std::size_t k = 0; k < idx.size(); ++k) {
            m = m.with(idx[k], small[k]);
        }
        out.push_back(m);
        if (out.size() == count) {
            break;
        }
    }
    if (out.size() < count) {
        throw InfeasibleHilbertFunction("lex segment of length " + std::to_string(count)
                                        + " exceeds the monomials of degree " + std::to_string(d));
    }
    return out;
}

MonomialIdeal lexify(const HilbertFunction& hf, std::size_t n)
{
    std::vector<std::vector<Monomial>> sets;
    for (int d = 0; d <= hf.cap; ++d) {
        const std::size_t want = to_size(hf.at(d), d);
        auto all = monomials_of_degree(n, d);
        if (want > all.size()) {
            throw InfeasibleHilbertFunction("Hilbert function exceeds dim S_" + std::to_string(d));
        }
        all.resize(want);
        sets.push_back(std::move(all));
    }
    return ideal_from_degree_sets(n, verified_segments(n, std::move(sets), "lex"));
}

MonomialIdeal lexify_mod_powers(const HilbertFunction& hf, const PowerSequence& P)
{
    const std::size_t n = P.nvars();
    const MonomialIdeal powers = P.ideal();
    std::vector<std::vector<Monomial>> sets;
    for (int d = 0; d <= hf.cap; ++d) {
        const std::size_t want = to_size(hf.at(d), d);
        std::vector<Monomial> level;
        std::vector<Monomial> outside;
        for (auto& m : monomials_of_degree(n, d)) {
            (powers.contains(m) ? level : outside).push_back(m);
        }
        if (want < level.size() || want > level.size() + outside.size()) {
            throw InfeasibleHilbertFunction("Hilbert function incompatible with the pure powers in degree "
                                            + std::to_string(d));
        }
        outside.resize(want - level.size());
        level.insert(level.end(), outside.begin(), outside.end());
        std::sort(level.begin(), level.end(), LexGreater{});
        sets.push_back(std::move(level));
    }
    return ideal_from_degree_sets(n, verified_segments(n, std::move(sets), "lex-plus-powers"));
}

bool hf_equal(const MonomialIdeal& I, const MonomialIdeal& J, int cap)
{
    if (I.nvars() != J.nvars()) {
        throw DimensionMismatch("Hilbert comparison across rings");
    }
    if (cap < std::max(I.max_generator_degree(), J.max_generator_degree())) {
        throw CapError("cap " + std::to_string(cap) + " is below the largest generator degree");
    }
    for (int d = 0; d <= cap; ++d) {
        if (I.degree_count(d) != J.degree_count(d)) {
            return false;
        }
    }
    return true;
}

} // namespace lpp
