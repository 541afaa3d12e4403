#include "pipeline.hpp"

#include "lgapery/errors.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <regex>

using namespace lgapery;
using namespace lgapery::cli;

namespace {

void emit(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int fail(const StageError& e) {
    nlohmann::ordered_json err{{"error", {{"stage", e.stage()}, {"exit_code", e.exit_code()}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return e.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periods, Picard-Fuchs operators and Apery constants of Landau-Ginzburg models"};
    app.require_subcommand(1);

    RunOptions opt;
    std::string ansatz = "4x4";
    std::string max_denominator = "10000";
    bool json_output = true;
    app.add_flag("--json", json_output, "Emit JSON on stdout (the default and only format)");
    app.add_option("--terms", opt.terms, "Apery term budget; period count N with --periods-only")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000}))
        ->capture_default_str();
    app.add_option("--digits", opt.digits, "Decimal digits for the Apery limit")
        ->check(CLI::Range(1U, 5000U))
        ->capture_default_str();
    app.add_option("--ansatz", ansatz, "Largest operator order x degree searched, e.g. 4x4")->capture_default_str();
    app.add_option("--max-denominator", max_denominator, "Largest denominator accepted by recognition")
        ->capture_default_str();
    app.add_option("--discovery-terms", opt.discovery_terms, "Period terms used to discover the operator")
        ->check(CLI::Range(std::size_t{2}, std::size_t{2000}))
        ->capture_default_str();
    app.add_flag("--oracle", opt.oracle, "Recompute periods by naive expansion and compare");
    app.add_flag("--require-recognition", opt.require_recognition, "Exit with code 6 when recognition fails");
    app.add_flag("--timings", opt.timings, "Include per-stage wall-clock seconds in the report");

    std::string input;
    std::string operator_text;
    bool periods_only = false;

    auto* catalog_cmd = app.add_subcommand("catalog", "List the built-in Landau-Ginzburg polynomials")->fallthrough();
    auto* run_cmd = app.add_subcommand("run", "Full pipeline on a catalog name or polynomial")->fallthrough();
    run_cmd->add_option("input", input, "Catalog name (V12, V16, V18, R1) or Laurent polynomial")->required();
    run_cmd->add_flag("--periods-only", periods_only, "Stop after the period sequence a_0..a_N, N = --terms");
    auto* periods_cmd = app.add_subcommand("periods", "Period sequence a_0..a_N with N = --terms")->fallthrough();
    periods_cmd->add_option("input", input, "Catalog name or Laurent polynomial")->required();
    auto* tempered_cmd = app.add_subcommand("tempered", "Newton polytope, reflexivity and edge criterion")->fallthrough();
    tempered_cmd->add_option("input", input, "Catalog name or Laurent polynomial")->required();

    auto add_operator_source = [&](CLI::App* cmd) {
        auto* in = cmd->add_option("input", input, "Catalog name or Laurent polynomial");
        auto* op = cmd->add_option("--operator", operator_text, "Use this operator instead of discovering one");
        in->excludes(op);
        cmd->fallthrough();
        cmd->callback([cmd, in, op] {
            if (in->count() == 0 && op->count() == 0) {
                throw CLI::RequiredError(cmd->get_name() + " needs an input or --operator");
            }
        });
    };
    auto* pfop_cmd = app.add_subcommand("pfop", "Discover the Picard-Fuchs operator and its recurrence");
    add_operator_source(pfop_cmd);
    auto* singular_cmd = app.add_subcommand("singular", "Symbol, singular points and involution");
    add_operator_source(singular_cmd);
    auto* apery_cmd = app.add_subcommand("apery", "Apery limit b_n/a_n and its recognition");
    add_operator_source(apery_cmd);

    unsigned v16_digits = 20;
    bool corrupt = false;
    auto* v16_cmd = app.add_subcommand("check-v16", "Membrane integral for V16 against 7 zeta(3)")->fallthrough();
    v16_cmd->add_option("--digits", v16_digits, "Decimal digits, at most 40")
        ->check(CLI::Range(1U, 40U))
        ->capture_default_str();
    v16_cmd->add_flag("--corrupt", corrupt, "Perturb the integrand (negative control)")->group("");

    try {
        app.parse(argc, argv);
        const std::regex ansatz_form(R"((\d+)x(\d+))");
        std::smatch m;
        if (!std::regex_match(ansatz, m, ansatz_form)) throw CLI::ValidationError("--ansatz", "expected RxD, e.g. 4x4");
        opt.ansatz_order = std::stoul(m[1].str());
        opt.ansatz_degree = std::stoul(m[2].str());
        if (opt.ansatz_order == 0) throw CLI::ValidationError("--ansatz", "order must be at least 1");
        if (mpz_set_str(opt.max_denominator.get_mpz_t(), max_denominator.c_str(), 10) != 0 ||
            opt.max_denominator < 1) {
            throw CLI::ValidationError("--max-denominator", "expected a positive integer");
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kSuccess : kParse;
    }

    try {
        if (catalog_cmd->parsed()) {
            emit(catalog_json());
        } else if (v16_cmd->parsed()) {
            V16Check check;
            try {
                check = cmd_check_v16_value(v16_digits, corrupt ? Rational(1, 1000) : Rational(0));
            } catch (const ConvergenceError& e) {
                throw StageError("quadrature", kConvergence, e.what());
            }
            emit(to_json(check, opt.timings));
            return check.passed ? kSuccess : kRecognition;
        } else if (run_cmd->parsed()) {
            emit(to_json(cmd_run(input, opt, periods_only), opt));
        } else if (periods_cmd->parsed()) {
            Pipeline p(opt);
            p.load(input);
            p.periods(opt.terms + 1);
            emit(to_json(p.report(), opt));
        } else if (tempered_cmd->parsed()) {
            Pipeline p(opt);
            p.load(input);
            p.geometry();
            emit(to_json(p.report(), opt));
        } else {
            Pipeline p(opt);
            if (!operator_text.empty()) {
                p.use_operator(operator_text);
            } else {
                p.load(input);
                p.periods(opt.discovery_terms);
                p.discover();
            }
            if (singular_cmd->parsed() || apery_cmd->parsed()) p.analyze();
            if (apery_cmd->parsed()) p.apery();
            emit(to_json(p.report(), opt));
        }
    } catch (const StageError& e) {
        return fail(e);
    } catch (const std::exception& e) {
        return fail(StageError("internal", kInternal, e.what()));
    }
    return kSuccess;
}
