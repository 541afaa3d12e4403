#pragma once

#include "lgapery/apery.hpp"
#include "lgapery/laurent.hpp"
#include "lgapery/operator.hpp"
#include "lgapery/periods.hpp"
#include "lgapery/polytope.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgapery::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInternal = 1,
    kParse = 2,
    kGeometry = 3,
    kDiscovery = 4,
    kConvergence = 5,
    kRecognition = 6,
};

struct RunOptions {
    std::size_t terms = 200;  ///< Apery term budget; period count for periods-only runs
    unsigned digits = 50;
    std::size_t ansatz_order = 4;
    std::size_t ansatz_degree = 4;
    std::size_t discovery_terms = 30;
    std::size_t verify_margin = 8;
    Integer max_denominator = 10000;
    bool oracle = false;
    bool require_recognition = false;
    bool timings = false;
};

/// A stage failure with the exit code it maps to.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, int exit_code, const std::string& message)
        : std::runtime_error(message), stage_(std::move(stage)), exit_code_(exit_code) {}
    const std::string& stage() const noexcept { return stage_; }
    int exit_code() const noexcept { return exit_code_; }

private:
    std::string stage_;
    int exit_code_;
};

struct Input {
    std::string text;
    std::string catalog_name;  ///< empty for free-form polynomials
    LaurentPolynomial phi;
};

struct PolytopeSummary {
    LatticePolytope polytope;
    std::size_t facet_count = 0;
    std::size_t edge_count = 0;
    bool reflexive = false;
    std::vector<ExponentVector> interior_points;
};

struct PipelineReport {
    std::optional<Input> input;
    std::optional<PolytopeSummary> polytope;
    std::optional<TemperednessReport> temperedness;
    std::optional<PeriodSequence> periods;
    bool oracle_verified = false;
    std::optional<DiscoveryResult> discovery;
    std::optional<DifferentialOperator> op;
    std::optional<UPoly> symbol;
    std::optional<SingularSet> singular;
    std::optional<InvolutionDatum> involution;
    std::optional<AperyResult> apery;
    std::vector<std::pair<std::string, double>> timings;  ///< wall-clock seconds per stage
};

/// Runs stages one at a time, each filling its part of the report. Failures
/// surface as StageError naming the stage.
class Pipeline {
public:
    explicit Pipeline(RunOptions options) : options_(std::move(options)) {}

    /// A catalog name (V12, V16, V18, R1) or polynomial text in x, y, z or x1..xd.
    void load(const std::string& text);
    void use_operator(const std::string& text);
    void geometry();
    void periods(std::size_t count);
    void discover();
    void analyze();
    void apery();

    const PipelineReport& report() const noexcept { return report_; }
    const RunOptions& options() const noexcept { return options_; }

private:
    template <class F>
    void stage(const std::string& name, F&& body);

    RunOptions options_;
    PipelineReport report_;
};

/// Full run: geometry, periods, discovery, symbol analysis, Apery limit. With
/// periods_only, just the first `terms + 1` periods.
PipelineReport cmd_run(const std::string& input, const RunOptions& options, bool periods_only = false);

struct V16Check {
    unsigned digits = 0;
    HighPrecisionReal value;
    HighPrecisionReal residual;   ///< |value - 7 zeta(3)|
    HighPrecisionReal threshold;  ///< 10^-(digits - 2)
    std::optional<RecognizedConstant> recognized;
    bool passed = false;
    double seconds = 0;
};

/// Membrane integral against 7 zeta(3). A nonzero perturbation corrupts the
/// integrand (negative control).
V16Check cmd_check_v16_value(unsigned digits, const Rational& perturbation = 0);

nlohmann::ordered_json to_json(const PipelineReport& report, const RunOptions& options);
nlohmann::ordered_json to_json(const V16Check& check, bool timings);
nlohmann::ordered_json catalog_json();

/// Guard digits used for recognition at a given precision.
unsigned guard_digits_for(unsigned digits);

}  // namespace lgapery::cli
