#pragma once

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

#include "lpp/io.hpp"

namespace helpers {

inline lpp::Monomial mono(std::size_t n, const std::string& text)
{
    return lpp::parse_monomial(text, n);
}

inline lpp::MonomialIdeal ideal(std::size_t n, std::initializer_list<const char*> gens)
{
    std::vector<lpp::Monomial> out;
    for (const char* g : gens) {
        out.push_back(mono(n, g));
    }
    return lpp::MonomialIdeal::from_generators(n, out);
}

inline lpp::BettiTable table(lpp::Convention c, std::initializer_list<std::array<long, 3>> entries)
{
    lpp::BettiTable t(c);
    for (const auto& e : entries) {
        t.add(static_cast<int>(e[0]), static_cast<int>(e[1]), e[2]);
    }
    return t;
}

} // namespace helpers
