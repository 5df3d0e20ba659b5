#include "lpp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpp/betti.hpp"
#include "lpp/error.hpp"
#include "lpp/hilbert.hpp"
#include "lpp/io.hpp"
#include "lpp/transforms.hpp"
#include "lpp/walk.hpp"

namespace lpp {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Bad flag values that CLI11 cannot see, such as a variable outside the ring.
class UsageError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

struct Settings {
    bool json = false;
    std::optional<int> cap;
    std::string file;
    long characteristic = 0;
    int jobs = 0;
    std::string trace_path;

    // hilbert
    HilbertMethod method = HilbertMethod::expansion;
    // betti
    bool multigraded = false;
    bool quotient = false;
    // lexify
    bool mod_powers = false;
    // shift, compress, polarize
    std::string var_a;
    std::string var_b;
    int t = 0;
    std::vector<std::string> compress_vars;
    // borelify, fuzz
    bool check_betti = false;
    // fuzz
    FuzzConfig fuzz;
};

std::string read_input(const std::string& path)
{
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out << text;
}

// Accepts "x3" or "3"; returns the 0-based index.
std::size_t parse_variable(const std::string& text, std::size_t n)
{
    std::string digits = text;
    if (!digits.empty() && digits.front() == 'x') {
        digits.erase(0, 1);
    }
    std::size_t k = 0;
    const bool numeric = !digits.empty() && std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
    if (numeric && digits.size() < 4) {
        k = std::stoul(digits);
    }
    if (k < 1 || k > n) {
        throw UsageError("'" + text + "' is not a variable of a ring with " + std::to_string(n) + " variables");
    }
    return k - 1;
}

const char* error_type(const std::exception& e)
{
    if (dynamic_cast<const ParseError*>(&e)) {
        return "parse";
    }
    if (dynamic_cast<const UsageError*>(&e)) {
        return "usage";
    }
    if (dynamic_cast<const IoError*>(&e)) {
        return "io";
    }
    if (dynamic_cast<const CapError*>(&e)) {
        return "cap";
    }
    if (dynamic_cast<const InfeasibleHilbertFunction*>(&e)) {
        return "infeasible";
    }
    if (dynamic_cast<const DimensionMismatch*>(&e)) {
        return "dimension";
    }
    if (dynamic_cast<const PreconditionError*>(&e)) {
        return "precondition";
    }
    if (dynamic_cast<const CertificateFailure*>(&e)) {
        return "certificate";
    }
    return "internal";
}

class Command {
public:
    Command(const Settings& s, std::ostream& out, std::ostream& err) : s_(s), out_(out), err_(err) {}

    int hilbert()
    {
        const auto input = load();
        const int cap = cap_for(input.ideal, powers_of(input));
        const auto hf = hilbert_function(input.ideal, cap, s_.method);
        if (s_.json) {
            emit(hilbert_json(hf));
            return kExitPass;
        }
        out_ << "# cap " << cap << "\n"
             << "d dim_I dim_S/I\n";
        for (int d = 0; d <= cap; ++d) {
            out_ << d << " " << hf.at(d) << " " << dim_polynomial_ring(input.ideal.nvars(), d) - hf.at(d) << "\n";
        }
        return kExitPass;
    }

    int betti()
    {
        const auto input = load();
        BettiOptions options;
        options.jobs = s_.jobs;
        const auto result = betti_table(input.ideal, Field(s_.characteristic), options);
        const BettiTable table = s_.quotient ? to_quotient(result.graded) : result.graded;
        if (s_.json) {
            emit(betti_json(table, s_.characteristic, s_.multigraded ? &result.multigraded : nullptr));
            return kExitPass;
        }
        out_ << "# " << to_string(table.convention()) << " convention, char " << s_.characteristic << "\n"
             << "i j b\n";
        for (const auto& [key, value] : table.entries()) {
            out_ << key.first << " " << key.second << " " << value << "\n";
        }
        if (s_.multigraded) {
            const int offset = s_.quotient ? 1 : 0;
            out_ << "# multigraded\n"
                 << "i m b\n";
            if (s_.quotient && !table.entries().empty()) {
                out_ << "0 1 1\n";
            }
            if (!s_.quotient || !table.entries().empty()) {
                for (const auto& [key, value] : result.multigraded.entries()) {
                    out_ << key.first + offset << " " << key.second.to_string() << " " << value << "\n";
                }
            }
        }
        return kExitPass;
    }

    int lexify()
    {
        auto input = load();
        const PowerSequence P = powers_of(input);
        if (s_.mod_powers) {
            input.ideal = ensure_powers(input.ideal, P);
        }
        const int cap = cap_for(input.ideal, P);
        const auto hf = hilbert_function(input.ideal, cap);
        const MonomialIdeal L = s_.mod_powers ? lexify_mod_powers(hf, P) : lex_ideal(hf, input.ideal.nvars());
        emit_ideal(L, s_.mod_powers ? std::optional<PowerSequence>(P) : std::nullopt, cap);
        return kExitPass;
    }

    int shift()
    {
        const auto input = load();
        const std::size_t n = input.ideal.nvars();
        if (s_.t < 0) {
            throw UsageError("-t must be nonnegative");
        }
        const ShiftSpec spec{parse_variable(s_.var_a, n), parse_variable(s_.var_b, n), s_.t};
        const int cap = s_.cap.value_or(default_cap(input.ideal, powers_of(input)) + s_.t);
        emit_ideal(lpp::shift(input.ideal, spec, cap), input.powers, cap);
        return kExitPass;
    }

    int compress()
    {
        const auto input = load();
        std::uint32_t vars = 0;
        for (const auto& v : s_.compress_vars) {
            vars |= 1u << parse_variable(v, input.ideal.nvars());
        }
        const int cap = cap_for(input.ideal, powers_of(input));
        emit_ideal(lpp::compress(input.ideal, vars, cap), input.powers, std::optional<int>(cap));
        return kExitPass;
    }

    int polarize()
    {
        const auto input = load();
        const auto pol = lpp::polarize(input.ideal, parse_variable(s_.var_b, input.ideal.nvars()));
        if (s_.json) {
            emit({{"ideal", ideal_json(pol.ideal)}, {"added_vars", pol.added_vars}});
            return kExitPass;
        }
        out_ << "# " << pol.added_vars << " added variables\n" << serialize_ideal(pol.ideal);
        return kExitPass;
    }

    int borelify()
    {
        auto input = load();
        const PowerSequence P = powers_of(input);
        const MonomialIdeal I = ensure_powers(input.ideal, P);
        const int cap = cap_for(I, P);
        WalkOptions options;
        options.check_betti = s_.check_betti;
        options.field = Field(s_.characteristic);
        const auto result = borelify_plus_P(I, P, cap, options);
        err_ << "wall time " << result.trace.wall_seconds << " s\n";
        if (!s_.trace_path.empty()) {
            write_file(s_.trace_path, trace_json(result.trace).dump(2) + "\n");
        }
        if (s_.json) {
            emit({{"cap", cap},
                  {"powers", P.exponents()},
                  {"ideal", ideal_json(result.borel)},
                  {"trace", trace_json(result.trace)}});
            return kExitPass;
        }
        out_ << "# cap " << cap << ", " << result.trace.step_count() << " steps\n" << serialize_ideal(result.borel, P);
        return kExitPass;
    }

    int verify()
    {
        auto input = load();
        const PowerSequence P = powers_of(input);
        const MonomialIdeal I = ensure_powers(input.ideal, P);
        const int cap = cap_for(I, P);
        VerifyOptions options;
        options.borelify = true;
        options.check_betti = true;
        options.jobs = s_.jobs;
        const auto report = lpp_verify(I, P, Field(s_.characteristic), cap, options);
        if (!s_.trace_path.empty() && report.walk) {
            write_file(s_.trace_path, trace_json(*report.walk).dump(2) + "\n");
        }
        if (s_.json) {
            emit(verify_json(report));
        } else {
            print_verify(report);
        }
        return report.passed() ? kExitPass : kExitVerifyFailed;
    }

    int fuzz()
    {
        const auto start = Clock::now();
        FuzzConfig config = s_.fuzz;
        config.jobs = s_.jobs;
        config.check_betti = s_.check_betti;
        const auto report = fuzz_campaign(config);
        err_ << "wall time " << std::chrono::duration<double>(Clock::now() - start).count() << " s\n";
        if (s_.json) {
            emit(fuzz_json(report));
        } else {
            out_ << "runs " << report.runs << "\n"
                 << "passed " << report.passed << "\n"
                 << "failed " << report.failures.size() << "\n";
            for (const auto& f : report.failures) {
                out_ << "sample " << f.index << " char " << f.characteristic << ": " << f.ideal << ": " << f.reason
                     << "\n";
            }
        }
        return report.failures.empty() ? kExitPass : kExitVerifyFailed;
    }

private:
    ParsedIdeal load()
    {
        auto parsed = parse_ideal(read_input(s_.file));
        for (const auto& w : parsed.warnings) {
            err_ << "warning: " << w << "\n";
        }
        return parsed;
    }

    static PowerSequence powers_of(const ParsedIdeal& input)
    {
        return input.powers.value_or(PowerSequence(input.ideal.nvars(), {}));
    }

    int cap_for(const MonomialIdeal& I, const PowerSequence& P) const
    {
        return s_.cap.value_or(default_cap(I, P));
    }

    MonomialIdeal ensure_powers(const MonomialIdeal& I, const PowerSequence& P)
    {
        if (is_subset(P.ideal(), I)) {
            return I;
        }
        const MonomialIdeal J = sum(I, P.ideal());
        err_ << "warning: input does not contain the pure powers; using " << J.to_string() << "\n";
        return J;
    }

    static MonomialIdeal lex_ideal(const HilbertFunction& hf, std::size_t n) { return lpp::lexify(hf, n); }

    void emit(const json& j) { out_ << j.dump(2) << "\n"; }

    void emit_ideal(const MonomialIdeal& I, const std::optional<PowerSequence>& P, std::optional<int> cap)
    {
        if (s_.json) {
            json j{{"ideal", ideal_json(I)}};
            if (cap) {
                j["cap"] = *cap;
            }
            if (P) {
                j["powers"] = P->exponents();
            }
            emit(j);
            return;
        }
        if (cap) {
            out_ << "# cap " << *cap << "\n";
        }
        out_ << serialize_ideal(I, P);
    }

    void print_verify(const VerifyReport& r)
    {
        const auto yes_no = [](bool v) { return v ? "yes" : "no"; };
        out_ << "input " << r.input.to_string() << "\n"
             << "char " << r.field.characteristic() << "\n"
             << "cap " << r.cap << "\n"
             << "lex-plus-powers " << r.lex_plus_powers.to_string() << "\n"
             << "same Hilbert function " << yes_no(r.hf_equal) << "\n"
             << "lex-plus-powers dominates " << yes_no(r.dominates) << "\n";
        if (r.cancellation) {
            out_ << "cancellation";
            bool any = false;
            for (const auto& [key, c] : *r.cancellation) {
                if (c != 0) {
                    out_ << " c_" << key.first << "," << key.second << "=" << c;
                    any = true;
                }
            }
            out_ << (any ? "\n" : " none\n");
        } else {
            out_ << "cancellation infeasible\n";
        }
        if (r.walk) {
            out_ << "walk " << r.walk->step_count() << " steps to " << r.walk->outcome.to_string() << "\n";
        }
        out_ << (r.passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& f : r.failures) {
            out_ << "failure: " << f << "\n";
        }
        if (!r.passed()) {
            out_ << "# counterexample candidate\n" << serialize_ideal(r.input, r.powers);
        }
    }

    const Settings& s_;
    std::ostream& out_;
    std::ostream& err_;
};

void add_cap(CLI::App* sub, Settings& s)
{
    sub->add_option("--cap", s.cap, "Degree cap (default: max generator degree + sum of powers + 2)");
}

void add_file(CLI::App* sub, Settings& s)
{
    sub->add_option("file", s.file, "Ideal file, or - for stdin")->required();
}

void add_char(CLI::App* sub, Settings& s)
{
    sub->add_option("--char", s.characteristic, "Field characteristic (0 or a prime)");
}

void add_jobs(CLI::App* sub, Settings& s)
{
    sub->add_option("--jobs", s.jobs, "Worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
}

void report_error(const std::string& type, const std::string& message, std::optional<std::pair<int, int>> where,
                  bool as_json, std::ostream& out, std::ostream& err)
{
    if (as_json) {
        json e{{"type", type}, {"message", message}};
        if (where) {
            e["line"] = where->first;
            e["column"] = where->second;
        }
        out << json{{"error", e}}.dump(2) << "\n";
        return;
    }
    err << "error: " << message << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Settings s;
    CLI::App app{"Monomial ideal workbench: Hilbert functions, Betti tables, shifting and lex-plus-powers checks",
                 "lpp"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--json", s.json, "Machine-readable output");

    auto* hilbert = app.add_subcommand("hilbert", "Degreewise Hilbert function");
    add_file(hilbert, s);
    add_cap(hilbert, s);
    const std::map<std::string, HilbertMethod> methods{{"expansion", HilbertMethod::expansion},
                                                       {"recursion", HilbertMethod::recursion},
                                                       {"cross-check", HilbertMethod::cross_check}};
    hilbert->add_option("--method", s.method, "expansion, recursion or cross-check")
        ->transform(CLI::CheckedTransformer(methods));

    auto* betti = app.add_subcommand("betti", "Graded Betti table");
    add_file(betti, s);
    add_char(betti, s);
    add_jobs(betti, s);
    betti->add_flag("--multigraded", s.multigraded, "Also list multigraded Betti numbers");
    betti->add_flag("--quotient", s.quotient, "Report b_{i,j}(S/I) instead of b_{i,j}(I)");

    auto* lexify = app.add_subcommand("lexify", "Lex ideal with the same Hilbert function");
    add_file(lexify, s);
    add_cap(lexify, s);
    lexify->add_flag("--mod-powers", s.mod_powers, "Lex-plus-powers ideal for the file's power sequence");

    auto* shift = app.add_subcommand("shift", "The t-th (a,b)-shift");
    add_file(shift, s);
    add_cap(shift, s);
    shift->add_option("-a", s.var_a, "Variable a")->required();
    shift->add_option("-b", s.var_b, "Variable b")->required();
    shift->add_option("-t", s.t, "Shift offset");

    auto* compress = app.add_subcommand("compress", "Compression with respect to a set of variables");
    add_file(compress, s);
    add_cap(compress, s);
    compress->add_option("-A", s.compress_vars, "Variables, comma separated")->delimiter(',')->required();

    auto* polarize = app.add_subcommand("polarize", "Polarize the powers of one variable");
    add_file(polarize, s);
    polarize->add_option("-b", s.var_b, "Variable to polarize")->required();

    auto* borelify = app.add_subcommand("borelify", "Walk to a Borel-plus-powers ideal");
    add_file(borelify, s);
    add_cap(borelify, s);
    add_char(borelify, s);
    borelify->add_flag("--check-betti", s.check_betti, "Check that Betti numbers never drop along the walk");
    borelify->add_option("--trace", s.trace_path, "Write the step trace as JSON");

    auto* verify = app.add_subcommand("verify", "Compare Betti numbers with the lex-plus-powers ideal");
    add_file(verify, s);
    add_cap(verify, s);
    add_char(verify, s);
    add_jobs(verify, s);
    verify->add_option("--trace", s.trace_path, "Write the walk trace as JSON");

    auto* fuzz = app.add_subcommand("fuzz", "Run verify on random ideals containing the pure powers");
    fuzz->add_option("--n", s.fuzz.n, "Number of variables")->required()->check(CLI::Range(1, 24));
    fuzz->add_option("--powers", s.fuzz.powers, "Exponents e1,e2,...")->delimiter(',')->required();
    fuzz->add_option("--samples", s.fuzz.samples, "Number of random ideals")->required();
    fuzz->add_option("--seed", s.fuzz.seed, "Random seed")->required();
    fuzz->add_option("--max-extra-gens", s.fuzz.max_extra_gens, "Most random generators per ideal")
        ->check(CLI::NonNegativeNumber);
    fuzz->add_option("--max-degree", s.fuzz.max_degree, "Largest random generator degree")
        ->check(CLI::PositiveNumber);
    fuzz->add_option("--chars", s.fuzz.characteristics, "Characteristics, comma separated")->delimiter(',');
    fuzz->add_option("--reproducers", s.fuzz.reproducer_dir, "Directory for failing ideal files");
    fuzz->add_flag("--check-betti", s.check_betti, "Check Betti numbers along each walk");
    add_jobs(fuzz, s);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        const bool as_json = std::find(args.begin(), args.end(), "--json") != args.end();
        report_error("usage", e.what(), std::nullopt, as_json, out, err);
        if (!as_json) {
            err << "run with --help for usage\n";
        }
        return kExitError;
    }

    Command command(s, out, err);
    try {
        if (hilbert->parsed()) {
            return command.hilbert();
        }
        if (betti->parsed()) {
            return command.betti();
        }
        if (lexify->parsed()) {
            return command.lexify();
        }
        if (shift->parsed()) {
            return command.shift();
        }
        if (compress->parsed()) {
            return command.compress();
        }
        if (polarize->parsed()) {
            return command.polarize();
        }
        if (borelify->parsed()) {
            return command.borelify();
        }
        if (verify->parsed()) {
            return command.verify();
        }
        return command.fuzz();
    } catch (const ParseError& e) {
        report_error("parse", e.what(), std::pair{e.line(), e.column()}, s.json, out, err);
    } catch (const std::exception& e) {
        report_error(error_type(e), e.what(), std::nullopt, s.json, out, err);
    }
    return kExitError;
}

} // namespace lpp
