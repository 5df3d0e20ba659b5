#include "lpp/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "lpp/error.hpp"

namespace lpp {

namespace {

using nlohmann::json;

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line;
    int column;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    int col() const { return column + static_cast<int>(pos); }

    void skip_spaces()
    {
        while (!done() && (text[pos] == ' ' || text[pos] == '\t')) {
            ++pos;
        }
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line, col()); }

    long number(const char* what)
    {
        const std::size_t begin = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (begin == pos) {
            pos = begin;
            fail(std::string("expected ") + what);
        }
        long value = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + pos, value);
        if (ec != std::errc() || value > 65535) {
            pos = begin;
            fail(std::string(what) + " out of range");
        }
        return value;
    }
};

std::string strip_comment(std::string_view line)
{
    const auto hash = line.find('#');
    std::string s(line.substr(0, hash));
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.pop_back();
    }
    return s;
}

std::size_t leading_spaces(const std::string& s)
{
    std::size_t k = 0;
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) {
        ++k;
    }
    return k;
}

json monomial_list(const std::vector<Monomial>& gens)
{
    json out = json::array();
    for (const auto& g : gens) {
        out.push_back(g.to_string());
    }
    return out;
}

json cancellation_json(const CancellationTable& c)
{
    json out = json::array();
    for (const auto& [key, value] : c) {
        out.push_back({{"i", key.first}, {"j", key.second}, {"c", value}});
    }
    return out;
}

} // namespace

Monomial parse_monomial(std::string_view text, std::size_t n, int line, int column)
{
    Cursor cur{text, 0, line, column};
    cur.skip_spaces();
    if (cur.peek() == '1') {
        ++cur.pos;
        cur.skip_spaces();
        if (!cur.done()) {
            cur.fail("unexpected text after the unit monomial");
        }
        return Monomial(n);
    }
    std::vector<long> exps(n, 0);
    while (true) {
        cur.skip_spaces();
        if (cur.peek() != 'x') {
            cur.fail("expected a variable x<k>");
        }
        const int var_column = cur.col();
        ++cur.pos;
        const long k = cur.number("variable index");
        if (k < 1 || static_cast<std::size_t>(k) > n) {
            throw ParseError("unknown variable x" + std::to_string(k) + " in a ring of " + std::to_string(n)
                                 + " variables",
                             line, var_column);
        }
        long e = 1;
        cur.skip_spaces();
        if (cur.peek() == '^') {
            ++cur.pos;
            cur.skip_spaces();
            if (cur.peek() == '-') {
                cur.fail("exponent must be a nonnegative integer");
            }
            e = cur.number("exponent");
        }
        exps[static_cast<std::size_t>(k - 1)] += e;
        if (exps[static_cast<std::size_t>(k - 1)] > 65535) {
            cur.fail("exponent out of range");
        }
        cur.skip_spaces();
        if (cur.done()) {
            break;
        }
        if (cur.peek() != '*') {
            cur.fail(std::string("unexpected character '") + cur.peek() + "'");
        }
        ++cur.pos;
    }
    std::vector<int> ints(exps.begin(), exps.end());
    return Monomial::from_exponents(ints);
}

ParsedIdeal parse_ideal(std::string_view text)
{
    std::optional<std::size_t> n;
    std::optional<PowerSequence> powers;
    bool in_gens = false;
    std::vector<Monomial> gens;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip_comment(raw);
        const std::size_t indent = leading_spaces(line);
        if (indent == line.size()) {
            continue;
        }
        const int column = static_cast<int>(indent) + 1;
        const std::string_view body = std::string_view(line).substr(indent);
        if (in_gens) {
            gens.push_back(parse_monomial(body, *n, line_no, column));
            continue;
        }
        std::istringstream words{std::string(body)};
        std::string keyword;
        words >> keyword;
        if (!n) {
            if (keyword != "ring") {
                throw ParseError("expected 'ring <n>'", line_no, column);
            }
            Cursor cur{body, keyword.size(), line_no, column};
            cur.skip_spaces();
            const long value = cur.number("variable count");
            cur.skip_spaces();
            if (!cur.done()) {
                cur.fail("unexpected text after the variable count");
            }
            if (value < 1 || static_cast<std::size_t>(value) > kMaxVars) {
                throw ParseError("variable count must be between 1 and " + std::to_string(kMaxVars), line_no,
                                 column + static_cast<int>(keyword.size()) + 1);
            }
            n = static_cast<std::size_t>(value);
        } else if (keyword == "powers" && !powers) {
            Cursor cur{body, keyword.size(), line_no, column};
            std::vector<int> exps;
            cur.skip_spaces();
            while (!cur.done()) {
                exps.push_back(static_cast<int>(cur.number("exponent")));
                cur.skip_spaces();
            }
            try {
                powers = PowerSequence(*n, exps);
            } catch (const PreconditionError& e) {
                throw ParseError(e.what(), line_no, column);
            }
        } else if (keyword == "gens" && body == "gens") {
            in_gens = true;
        } else {
            throw ParseError("unexpected '" + keyword + "'; expected 'powers' or 'gens'", line_no, column);
        }
    }
    if (!n) {
        throw ParseError("missing 'ring <n>' header", line_no + 1, 1);
    }
    if (!in_gens) {
        throw ParseError("missing 'gens' section", line_no + 1, 1);
    }
    ParsedIdeal out{MonomialIdeal::from_generators(*n, gens), powers, {}};
    if (out.ideal.generators().size() != gens.size()) {
        out.warnings.push_back("input generators are not minimal; kept " + out.ideal.to_string());
    }
    return out;
}

std::string serialize_ideal(const MonomialIdeal& I, const std::optional<PowerSequence>& P)
{
    std::string out = "ring " + std::to_string(I.nvars()) + "\n";
    if (P && P->length() > 0) {
        out += "powers";
        for (int e : P->exponents()) {
            out += " " + std::to_string(e);
        }
        out += "\n";
    }
    out += "gens\n";
    for (const auto& g : I.generators()) {
        out += g.to_string() + "\n";
    }
    return out;
}

json ideal_json(const MonomialIdeal& I)
{
    return {{"n", I.nvars()}, {"gens", monomial_list(I.generators())}};
}

json betti_json(const BettiTable& table, long characteristic, const MultigradedBettiTable* multigraded)
{
    json entries = json::array();
    for (const auto& [key, value] : table.entries()) {
        entries.push_back({{"i", key.first}, {"j", key.second}, {"b", value}});
    }
    json out{{"convention", to_string(table.convention())}, {"char", characteristic}, {"entries", entries}};
    if (multigraded) {
        json rows = json::array();
        const bool quotient = table.convention() == Convention::quotient;
        // S/(1) = 0 has no rows; otherwise S/I adds the generator 1 in
        // index 0 and moves every ideal row up by one.
        if (!quotient || !table.entries().empty()) {
            if (quotient) {
                rows.push_back({{"i", 0}, {"m", "1"}, {"b", 1}});
            }
            for (const auto& [key, value] : multigraded->entries()) {
                rows.push_back({{"i", key.first + (quotient ? 1 : 0)}, {"m", key.second.to_string()}, {"b", value}});
            }
        }
        out["multigraded"] = rows;
    }
    return out;
}

json hilbert_json(const HilbertFunction& hf)
{
    json values = json::array();
    for (int d = 0; d <= hf.cap; ++d) {
        values.push_back({{"d", d}, {"dim", hf.at(d).str()}});
    }
    return {{"cap", hf.cap}, {"values", values}};
}

json trace_json(const WalkTrace& trace, bool include_wall_time)
{
    json steps = json::array();
    for (const auto& s : trace.steps) {
        json step{{"kind", to_string(s.kind)},
                  {"a", "x" + std::to_string(s.a + 1)},
                  {"b", "x" + std::to_string(s.b + 1)},
                  {"before", monomial_list(s.before.generators())},
                  {"after", monomial_list(s.after.generators())},
                  {"hf_equal", s.hf_equal},
                  {"revlex", to_string(s.revlex)}};
        if (s.t >= 0) {
            step["t"] = s.t;
        }
        if (s.betti_dominates) {
            step["betti_dominates"] = *s.betti_dominates;
        }
        steps.push_back(step);
    }
    json out{{"steps", steps}, {"step_count", trace.step_count()}, {"outcome", monomial_list(trace.outcome.generators())}};
    if (include_wall_time) {
        out["wall_seconds"] = trace.wall_seconds;
    }
    return out;
}

json verify_json(const VerifyReport& report)
{
    json out{{"input", ideal_json(report.input)},
             {"powers", report.powers.exponents()},
             {"char", report.field.characteristic()},
             {"cap", report.cap},
             {"hilbert", hilbert_json(report.hilbert)},
             {"lex_plus_powers", ideal_json(report.lex_plus_powers)},
             {"hf_equal", report.hf_equal},
             {"betti_input", betti_json(report.input_betti, report.field.characteristic())},
             {"betti_lex_plus_powers", betti_json(report.lex_betti, report.field.characteristic())},
             {"dominates", report.dominates},
             {"passed", report.passed()},
             {"failures", report.failures}};
    out["cancellation"] = report.cancellation ? cancellation_json(*report.cancellation) : json(nullptr);
    if (report.walk) {
        out["walk"] = trace_json(*report.walk);
        out["walk_dominates"] = report.walk_dominates;
    }
    return out;
}

json fuzz_json(const FuzzReport& report)
{
    const auto& c = report.config;
    json failures = json::array();
    for (const auto& f : report.failures) {
        failures.push_back({{"index", f.index}, {"char", f.characteristic}, {"ideal", f.ideal}, {"reason", f.reason}});
    }
    return {{"config",
             {{"n", c.n},
              {"powers", c.powers},
              {"samples", c.samples},
              {"seed", c.seed},
              {"max_extra_gens", c.max_extra_gens},
              {"max_degree", c.max_degree},
              {"chars", c.characteristics},
              {"borelify", c.borelify},
              {"check_betti", c.check_betti}}},
            {"runs", report.runs},
            {"passed", report.passed},
            {"failed", report.failures.size()},
            {"failures", failures}};
}

} // namespace lpp
