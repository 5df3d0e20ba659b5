#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lpp/ideal.hpp"

namespace lpp {

using BigInt = boost::multiprecision::cpp_int;

// dim_k I_d for d = 0..cap.
struct HilbertFunction {
    int cap = -1;
    std::vector<BigInt> values;

    const BigInt& at(int d) const { return values.at(static_cast<std::size_t>(d)); }

    friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

enum class HilbertMethod {
    expansion, // count degreewise monomials
    recursion, // numerator recursion on S/I, pivoting on the lex-greatest generator
    cross_check // both, throwing CertificateFailure on disagreement
};

// dim_k S_d = C(n+d-1, d).
BigInt dim_polynomial_ring(std::size_t n, int d);

HilbertFunction hilbert_function(const MonomialIdeal& I, int cap, HilbertMethod method = HilbertMethod::expansion);

// Coefficients of the numerator K(t) with HS(S/I) = K(t) / (1-t)^n.
std::vector<BigInt> hilbert_numerator(const MonomialIdeal& I);

// Lex ideal with the given Hilbert function through degree hf.cap. Throws
// InfeasibleHilbertFunction when the lex segments fail to form an ideal.
MonomialIdeal lexify(const HilbertFunction& hf, std::size_t n);

// L + P where L is lex: each degree is P_d plus the lex-greatest monomials
// outside P_d. Throws InfeasibleHilbertFunction when the result is not an
// ideal through hf.cap.
MonomialIdeal lexify_mod_powers(const HilbertFunction& hf, const PowerSequence& P);

// Degreewise dimensions agree through cap. Throws CapError if cap is below
// the largest generator degree of either ideal.
bool hf_equal(const MonomialIdeal& I, const MonomialIdeal& J, int cap);

// Top `count` degree-d monomials of k[vars] in lex order (vars ascending).
std::vector<Monomial> lex_segment(std::size_t n, std::uint32_t vars, int d, std::size_t count);

} // namespace lpp
