#include "lpp/ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "lpp/error.hpp"

namespace lpp {

namespace {

void check_same_ring(const MonomialIdeal& I, const MonomialIdeal& J)
{
    if (I.nvars() != J.nvars()) {
        throw DimensionMismatch("ideals in " + std::to_string(I.nvars()) + " and " + std::to_string(J.nvars())
                                + " variables");
    }
}

bool is_prime(long p)
{
    if (p < 2) {
        return false;
    }
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

MonomialIdeal::MonomialIdeal(std::size_t n) : n_(n)
{
    if (n > kMaxVars) {
        throw PreconditionError("too many variables");
    }
}

MonomialIdeal MonomialIdeal::from_generators(std::size_t n, std::vector<Monomial> gens)
{
    return minimalize(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(std::size_t n)
{
    return minimalize(n, {Monomial(n)});
}

bool MonomialIdeal::is_unit() const noexcept
{
    return gens_.size() == 1 && gens_.front().is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const
{
    if (m.nvars() != n_) {
        throw DimensionMismatch("membership test across rings");
    }
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

int MonomialIdeal::max_generator_degree() const noexcept
{
    int d = -1;
    for (const auto& g : gens_) {
        d = std::max(d, g.degree());
    }
    return d;
}

Monomial MonomialIdeal::generator_lcm() const
{
    Monomial l(n_);
    for (const auto& g : gens_) {
        l = lcm(l, g);
    }
    return l;
}

MonomialIdeal MonomialIdeal::with_expansion(int cap) const
{
    MonomialIdeal copy = *this;
    if (cache_ && cache_->cap >= cap) {
        return copy;
    }
    copy.cache_ = std::make_shared<const Expansion>(expand(*this, cap));
    return copy;
}

std::vector<Monomial> MonomialIdeal::degree_set(int d) const
{
    if (cache_ && d >= 0 && d <= cache_->cap) {
        return cache_->at(d);
    }
    std::vector<Monomial> out;
    if (d < 0 || gens_.empty()) {
        return out;
    }
    for (auto& m : monomials_of_degree(n_, d)) {
        if (contains(m)) {
            out.push_back(m);
        }
    }
    return out;
}

std::size_t MonomialIdeal::degree_count(int d) const
{
    if (cache_ && d >= 0 && d <= cache_->cap) {
        return cache_->at(d).size();
    }
    if (d < 0 || gens_.empty()) {
        return 0;
    }
    std::size_t count = 0;
    for (auto& m : monomials_of_degree(n_, d)) {
        count += contains(m) ? 1 : 0;
    }
    return count;
}

std::string MonomialIdeal::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += gens_[i].to_string();
    }
    return out + ")";
}

MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens)
{
    MonomialIdeal I(n);
    for (const auto& g : gens) {
        if (g.nvars() != n) {
            throw DimensionMismatch("generator " + g.to_string() + " not in a ring of " + std::to_string(n)
                                    + " variables");
        }
    }
    // Sorting by degree first means a divisor is always seen before its
    // multiples.
    std::sort(gens.begin(), gens.end(), DegLexLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const auto& g : gens) {
        const bool redundant =
            std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
        if (!redundant) {
            kept.push_back(g);
        }
    }
    std::sort(kept.begin(), kept.end(), LexGreater{});
    I.gens_ = std::move(kept);
    return I;
}

Expansion expand(const MonomialIdeal& I, int cap)
{
    if (cap < 0) {
        throw PreconditionError("expansion cap must be nonnegative");
    }
    Expansion e;
    e.cap = cap;
    e.by_degree.resize(static_cast<std::size_t>(cap) + 1);
    for (int d = 0; d <= cap; ++d) {
        e.by_degree[static_cast<std::size_t>(d)] = I.degree_set(d);
    }
    return e;
}

MonomialIdeal ideal_from_degree_sets(std::size_t n, const std::vector<std::vector<Monomial>>& sets)
{
    std::vector<Monomial> gens;
    std::unordered_set<Monomial> previous;
    for (const auto& level : sets) {
        for (const auto& m : level) {
            bool generator = true;
            for (std::size_t i = 0; i < n && generator; ++i) {
                if (m[i] > 0 && previous.contains(m.with(i, m[i] - 1))) {
                    generator = false;
                }
            }
            if (generator) {
                gens.push_back(m);
            }
        }
        previous = std::unordered_set<Monomial>(level.begin(), level.end());
    }
    return minimalize(n, std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m)
{
    if (m.nvars() != I.nvars()) {
        throw DimensionMismatch("colon by a monomial from another ring");
    }
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) {
        gens.push_back(colon(g, m));
    }
    return minimalize(I.nvars(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J)
{
    check_same_ring(I, J);
    std::vector<Monomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return minimalize(I.nvars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J)
{
    check_same_ring(I, J);
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size() * J.generators().size());
    for (const auto& u : I.generators()) {
        for (const auto& v : J.generators()) {
            gens.push_back(lcm(u, v));
        }
    }
    return minimalize(I.nvars(), std::move(gens));
}

MonomialIdeal scale(const MonomialIdeal& I, const Monomial& u)
{
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) {
        gens.push_back(g * u);
    }
    return minimalize(I.nvars(), std::move(gens));
}

bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J)
{
    check_same_ring(I, J);
    return std::all_of(I.generators().begin(), I.generators().end(),
                       [&](const Monomial& g) { return J.contains(g); });
}

MonomialIdeal sigma_swap(const MonomialIdeal& I, std::size_t a, std::size_t b)
{
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) {
        gens.push_back(sigma_swap(g, a, b));
    }
    return minimalize(I.nvars(), std::move(gens));
}

MonomialIdeal restrict_to(const MonomialIdeal& I, std::uint32_t vars)
{
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        if ((g.support() & ~vars) == 0) {
            gens.push_back(g);
        }
    }
    return minimalize(I.nvars(), std::move(gens));
}

PowerSequence::PowerSequence(std::size_t n, std::vector<int> exponents) : n_(n), exps_(std::move(exponents))
{
    if (n > kMaxVars) {
        throw PreconditionError("too many variables");
    }
    if (exps_.size() > n) {
        throw PreconditionError("power sequence has " + std::to_string(exps_.size()) + " entries but the ring has "
                                + std::to_string(n) + " variables");
    }
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] < 2) {
            throw PreconditionError("pure power exponents must be at least 2");
        }
        if (i > 0 && exps_[i] < exps_[i - 1]) {
            throw PreconditionError("pure power exponents must be nondecreasing");
        }
    }
}

std::optional<int> PowerSequence::exponent(std::size_t k) const
{
    if (k < exps_.size()) {
        return exps_[k];
    }
    return std::nullopt;
}

Monomial PowerSequence::pure_power(std::size_t k) const
{
    if (k >= exps_.size()) {
        throw PreconditionError("x" + std::to_string(k + 1) + " carries no finite power");
    }
    return Monomial::variable(n_, k, exps_[k]);
}

int PowerSequence::finite_sum() const noexcept
{
    int s = 0;
    for (int e : exps_) {
        s += e;
    }
    return s;
}

MonomialIdeal PowerSequence::ideal() const
{
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < exps_.size(); ++k) {
        gens.push_back(pure_power(k));
    }
    return minimalize(n_, std::move(gens));
}

Field::Field(long characteristic) : p_(characteristic)
{
    if (p_ != 0 && !is_prime(p_)) {
        throw PreconditionError("field characteristic must be 0 or a prime, got " + std::to_string(p_));
    }
    if (p_ > (1L << 31)) {
        throw PreconditionError("characteristic too large for the modular rank kernel");
    }
}

std::string to_string(IdealOrder order)
{
    switch (order) {
    case IdealOrder::less:
        return "less";
    case IdealOrder::equal:
        return "equal";
    case IdealOrder::greater:
        return "greater";
    case IdealOrder::incomparable:
        return "incomparable";
    }
    return "unknown";
}

std::strong_ordering revlex_compare_sets(std::span<const Monomial> A, std::span<const Monomial> B)
{
    if (A.size() != B.size()) {
        throw PreconditionError("revlex set comparison needs equal sizes");
    }
    std::vector<Monomial> a(A.begin(), A.end());
    std::vector<Monomial> b(B.begin(), B.end());
    const int d = a.empty() ? 0 : a.front().degree();
    for (const auto& m : a) {
        if (m.degree() != d) {
            throw PreconditionError("revlex set comparison needs a single degree");
        }
    }
    for (const auto& m : b) {
        if (m.degree() != d) {
            throw PreconditionError("revlex set comparison needs a single degree");
        }
    }
    std::sort(a.begin(), a.end(), RevlexGreater{});
    std::sort(b.begin(), b.end(), RevlexGreater{});
    for (std::size_t k = 0; k < a.size(); ++k) {
        const auto c = revlex_compare(a[k], b[k]);
        if (c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

IdealOrder revlex_compare_ideals(const MonomialIdeal& I, const MonomialIdeal& J, int cap)
{
    check_same_ring(I, J);
    bool some_greater = false;
    bool some_less = false;
    for (int d = 0; d <= cap; ++d) {
        const auto Id = I.degree_set(d);
        const auto Jd = J.degree_set(d);
        if (Id.size() != Jd.size()) {
            throw PreconditionError("revlex comparison of ideals with different Hilbert functions (degree "
                                    + std::to_string(d) + ")");
        }
        const auto c = revlex_compare_sets(Id, Jd);
        some_greater = some_greater || c > 0;
        some_less = some_less || c < 0;
    }
    if (some_greater && some_less) {
        return IdealOrder::incomparable;
    }
    if (some_greater) {
        return IdealOrder::greater;
    }
    if (some_less) {
        return IdealOrder::less;
    }
    return IdealOrder::equal;
}

} // namespace lpp
