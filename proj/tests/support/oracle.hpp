#pragma once

// Brute-force reference computations on plain exponent vectors. Nothing here
// calls into the library except the converters, so agreement with the
// library is an independent check.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lpp/betti.hpp"
#include "lpp/ideal.hpp"

namespace oracle {

using Exps = std::vector<int>;

struct Ideal {
    int n = 0;
    std::vector<Exps> gens;
};

Ideal from_lpp(const lpp::MonomialIdeal& I);
Exps from_lpp(const lpp::Monomial& m);
lpp::Monomial to_lpp(const Exps& e);

bool divides(const Exps& u, const Exps& v);
bool member(const Ideal& I, const Exps& m);

// All exponent vectors of total degree d in n variables.
std::vector<Exps> monomials(int n, int d);

// dim_k I_d by counting.
long long hilbert(const Ideal& I, int d);

// Membership of m in the (a,b)-shift of I with offset t, decided by the
// rule on m and its partner f a^{q-t} b^{p+t}.
bool in_shift(const Ideal& I, const Exps& m, std::size_t a, std::size_t b, int t);

// Componentwise max over generators.
Exps lcm_all(const Ideal& I);

using Multigraded = std::map<std::pair<int, Exps>, long long>;
using Graded = std::map<std::pair<int, int>, long long>;

// b_{i,m}(I) as reduced homology of {F ⊆ supp m : m / x_F ∈ I} in
// dimension i - 1, over Q (p = 0) or F_p. Only multidegrees dividing the
// lcm of the generators are visited; `all_multidegrees` widens the search
// to every m with exponents up to lcm + 1 to check that nothing is missed.
Multigraded betti_multigraded(const Ideal& I, long p, bool all_multidegrees = false);

std::vector<long long> betti_at(const Ideal& I, const Exps& m, long p);

Graded graded(const Multigraded& mg);

// Ideal-convention graded table in the library's type.
lpp::BettiTable to_table(const Graded& g);

} // namespace oracle
