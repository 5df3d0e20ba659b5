#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lpp/betti.hpp"
#include "lpp/hilbert.hpp"
#include "lpp/ideal.hpp"
#include "lpp/walk.hpp"

namespace lpp {

// Ideal file format:
//
//   ring 3
//   powers 2 2 2      (optional)
//   gens
//   x1^2*x2
//   x3
//
// '#' starts a comment; blank lines are ignored; "1" is the unit monomial.
struct ParsedIdeal {
    MonomialIdeal ideal;
    std::optional<PowerSequence> powers;
    std::vector<std::string> warnings;
};

// Throws ParseError with a 1-based line and column.
ParsedIdeal parse_ideal(std::string_view text);

// Parses "x1^2*x3" or "1" in n variables. `line` and `column` locate the
// text in its file for error messages.
Monomial parse_monomial(std::string_view text, std::size_t n, int line = 1, int column = 1);

std::string serialize_ideal(const MonomialIdeal& I, const std::optional<PowerSequence>& P = std::nullopt);

nlohmann::json ideal_json(const MonomialIdeal& I);

// {"convention", "char", "entries", "multigraded"}. `multigraded` may be
// null; it is expected in the ideal convention and shifted to match
// `table`.
nlohmann::json betti_json(const BettiTable& table, long characteristic,
                          const MultigradedBettiTable* multigraded = nullptr);

nlohmann::json hilbert_json(const HilbertFunction& hf);

nlohmann::json trace_json(const WalkTrace& trace, bool include_wall_time = false);

nlohmann::json verify_json(const VerifyReport& report);

// Excludes wall time so equal inputs give byte-identical output.
nlohmann::json fuzz_json(const FuzzReport& report);

} // namespace lpp
