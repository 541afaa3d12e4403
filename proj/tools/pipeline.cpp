#include "pipeline.hpp"

#include "lgapery/catalog.hpp"
#include "lgapery/constants.hpp"
#include "lgapery/errors.hpp"
#include "lgapery/parser.hpp"
#include "lgapery/quadrature.hpp"
#include "lgapery/recognize.hpp"

#include <algorithm>
#include <chrono>
#include <regex>

namespace lgapery::cli {

using json = nlohmann::ordered_json;

namespace {

std::size_t infer_dimension(const std::string& text) {
    static const std::regex indexed(R"(x(\d+))");
    std::size_t dim = 3;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), indexed); it != std::sregex_iterator(); ++it) {
        dim = std::max<std::size_t>(dim, std::stoul((*it)[1].str()));
    }
    return dim;
}

json to_json(const ExponentVector& e) {
    json arr = json::array();
    for (auto c : e.components()) arr.push_back(c);
    return arr;
}

std::string kind_name(SingularPoint::Kind k) {
    switch (k) {
        case SingularPoint::Kind::Rational: return "rational";
        case SingularPoint::Kind::Surd: return "surd";
        case SingularPoint::Kind::Numeric: return "numeric";
    }
    return "unknown";
}

json recognized_json(const std::optional<RecognizedConstant>& r) {
    if (!r) return nullptr;
    return json{{"coefficient", r->coefficient.get_str()},
                {"basis", r->basis},
                {"residual", r->residual.to_significant(3)}};
}

}  // namespace

unsigned guard_digits_for(unsigned digits) { return std::min(8U, digits / 3); }

template <class F>
void Pipeline::stage(const std::string& name, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const StageError&) {
        throw;
    } catch (const ParseError& e) {
        throw StageError(name, kParse, e.what());
    } catch (const GeometryError& e) {
        throw StageError(name, kGeometry, e.what());
    } catch (const DiscoveryError& e) {
        throw StageError(name, kDiscovery, e.what());
    } catch (const ConvergenceError& e) {
        throw StageError(name, kConvergence, e.what());
    } catch (const std::invalid_argument& e) {
        throw StageError(name, kParse, e.what());
    } catch (const std::exception& e) {
        throw StageError(name, kInternal, e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report_.timings.emplace_back(name, elapsed.count());
}

void Pipeline::load(const std::string& text) {
    stage("parse", [&] {
        const CatalogEntry* entry = find_catalog_entry(text);
        Input in{text, entry ? entry->name : "", entry ? entry->phi : parse(text, infer_dimension(text))};
        if (in.phi.is_zero()) throw std::invalid_argument("the zero polynomial has no periods");
        report_.input = std::move(in);
    });
}

void Pipeline::use_operator(const std::string& text) {
    stage("operator", [&] {
        DifferentialOperator op = parse_operator(text);
        if (op.is_zero()) throw std::invalid_argument("the zero operator annihilates everything");
        report_.op = op.normalized();
    });
}

void Pipeline::geometry() {
    stage("geometry", [&] {
        const LaurentPolynomial& phi = report_.input.value().phi;
        PolytopeSummary s;
        s.polytope = newton_polytope(phi);
        if (s.polytope.full_dimensional()) {
            s.facet_count = facets(s.polytope).size();
            s.edge_count = edges(s.polytope).size();
            s.reflexive = is_reflexive(s.polytope);
            s.interior_points = interior_lattice_points(s.polytope);
        }
        report_.polytope = std::move(s);
    });
    stage("temperedness", [&] { report_.temperedness = temperedness_check(report_.input.value().phi); });
}

void Pipeline::periods(std::size_t count) {
    stage("periods", [&] {
        const LaurentPolynomial& phi = report_.input.value().phi;
        report_.periods = period_sequence(phi, count == 0 ? 0 : count - 1);
    });
    if (!options_.oracle) return;
    stage("oracle", [&] {
        const auto& fast = report_.periods->values;
        const auto naive = period_sequence_naive(report_.input->phi, fast.size() - 1);
        for (std::size_t n = 0; n < fast.size(); ++n) {
            if (fast[n] != naive.values[n]) {
                throw StageError("oracle", kInternal,
                                 "pruned and naive period sequences differ at n = " + std::to_string(n) + ": " +
                                     fast[n].get_str() + " vs " + naive.values[n].get_str());
            }
        }
        report_.oracle_verified = true;
    });
}

void Pipeline::discover() {
    stage("discovery", [&] {
        DiscoveryOptions opts;
        opts.max_order = options_.ansatz_order;
        opts.max_degree = options_.ansatz_degree;
        opts.verify_margin = options_.verify_margin;
        report_.discovery = operator_from_series(report_.periods.value().values, opts);
        report_.op = report_.discovery->op;
    });
}

void Pipeline::analyze() {
    stage("symbol", [&] {
        const DifferentialOperator& op = report_.op.value();
        report_.symbol = symbol(op);
        report_.singular = singular_points(*report_.symbol);
        report_.involution = involution(*report_.symbol);
    });
}

void Pipeline::apery() {
    stage("apery", [&] {
        const Recurrence rec = to_recurrence(report_.op.value());
        const SingularSet& singular = report_.singular.value();
        AperyResult result = apery_limit(rec, singular, options_.digits, options_.terms);
        RecognizeOptions ro;
        ro.max_denominator = options_.max_denominator;
        ro.guard_digits = guard_digits_for(options_.digits);
        const std::size_t budget = 4 * options_.terms;
        result.recognized = recognize(result.limit, options_.digits, standard_basis(), ro, [&](unsigned d) {
            return apery_limit(rec, singular, d, budget).limit;
        });
        report_.apery = std::move(result);
    });
    if (options_.require_recognition && !report_.apery->recognized) {
        throw StageError("recognition", kRecognition,
                         "the Apery limit is not a rational multiple (denominator <= " +
                             options_.max_denominator.get_str() + ") of any basis constant");
    }
}

PipelineReport cmd_run(const std::string& input, const RunOptions& options, bool periods_only) {
    Pipeline p(options);
    p.load(input);
    if (periods_only) {
        p.periods(options.terms + 1);
        return p.report();
    }
    p.geometry();
    p.periods(options.discovery_terms);
    p.discover();
    p.analyze();
    p.apery();
    return p.report();
}

V16Check cmd_check_v16_value(unsigned digits, const Rational& perturbation) {
    const auto start = std::chrono::steady_clock::now();
    V16Check out;
    out.digits = digits;
    const long bits = bits_for_digits(digits);
    out.value = v16_membrane_value(digits, perturbation);
    out.residual = abs(out.value - HighPrecisionReal::from_integer(7, bits + 64) * zeta3(digits + 20));
    out.threshold = pow10(-(static_cast<long>(digits) - 2), bits);
    out.passed = out.residual < out.threshold;
    const unsigned guard = guard_digits_for(digits);
    if (guard > 0) {
        RecognizeOptions ro;
        ro.guard_digits = guard;
        out.recognized = recognize(out.value, digits, standard_basis(), ro);
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

json to_json(const PipelineReport& r, const RunOptions& options) {
    json j;
    if (r.input) {
        j["input"] = {{"text", r.input->text},
                      {"catalog", r.input->catalog_name.empty() ? json(nullptr) : json(r.input->catalog_name)},
                      {"dimension", r.input->phi.dimension()},
                      {"phi", to_string(r.input->phi)}};
    }
    if (r.polytope) {
        json vertices = json::array();
        for (const auto& v : r.polytope->polytope.vertices) vertices.push_back(to_json(v));
        json interior = json::array();
        for (const auto& v : r.polytope->interior_points) interior.push_back(to_json(v));
        j["polytope"] = {{"vertices", vertices},
                         {"facets", r.polytope->facet_count},
                         {"edges", r.polytope->edge_count},
                         {"reflexive", r.polytope->reflexive},
                         {"interior_points", interior}};
    }
    if (r.temperedness) {
        json failures = json::array();
        for (const auto& f : r.temperedness->failures) {
            failures.push_back({{"start", to_json(f.edge.start)},
                                {"end", to_json(f.edge.end)},
                                {"polynomial", to_string(f.polynomial, "u")}});
        }
        j["temperedness"] = {{"passed", r.temperedness->passed}, {"failures", failures}};
    }
    if (r.periods) {
        json values = json::array();
        for (const auto& v : r.periods->values) values.push_back(v.get_str());
        j["periods"] = {{"count", r.periods->values.size()}, {"values", values}, {"oracle_verified", r.oracle_verified}};
    }
    if (r.op) {
        json rows = json::array();
        for (const auto& row : r.op->coefficients()) {
            json cells = json::array();
            for (const auto& c : row) cells.push_back(c.get_str());
            rows.push_back(cells);
        }
        json op{{"text", to_string(*r.op)},
                {"order", r.op->order()},
                {"degree", r.op->degree()},
                {"coefficients", rows},
                {"recurrence", to_string(to_recurrence(*r.op))},
                {"source", r.discovery ? "discovered" : "given"}};
        if (r.discovery) {
            op["fitted_terms"] = r.discovery->fitted_terms;
            op["verified_terms"] = r.discovery->verified_terms;
        }
        j["operator"] = op;
    }
    if (r.symbol) j["symbol"] = to_string(*r.symbol, "t");
    if (r.singular) {
        json finite = json::array();
        for (const auto& p : r.singular->finite_points) {
            finite.push_back({{"value", p.kind == SingularPoint::Kind::Numeric ? p.numeric : to_string(p.exact)},
                              {"kind", kind_name(p.kind)},
                              {"multiplicity", p.multiplicity}});
        }
        j["singular_points"] = {{"finite", finite},
                                {"includes_zero", r.singular->includes_zero},
                                {"includes_infinity", r.singular->includes_infinity},
                                {"zero_root_multiplicity", r.singular->zero_root_multiplicity},
                                {"nonreal_roots_omitted", r.singular->nonreal_roots_omitted}};
    }
    if (r.involution) {
        j["involution"] = {{"exists", r.involution->exists},
                           {"M", r.involution->exists ? json(r.involution->M.get_str()) : json(nullptr)}};
    }
    if (r.apery) {
        j["apery"] = {{"limit", r.apery->limit.to_significant(r.apery->digits)},
                      {"digits", r.apery->digits},
                      {"terms_used", r.apery->terms_used},
                      {"error_bound", r.apery->error_bound.to_significant(3)},
                      {"ratio", r.apery->convergence_ratio.to_significant(20)},
                      {"recognized", recognized_json(r.apery->recognized)}};
    }
    if (options.timings) {
        json t = json::object();
        for (const auto& [name, seconds] : r.timings) t[name] = seconds;
        j["timings"] = t;
    }
    return j;
}

json to_json(const V16Check& c, bool timings) {
    json j{{"digits", c.digits},
           {"value", c.value.to_significant(c.digits)},
           {"expected", {{"coefficient", "7"}, {"basis", "zeta3"}}},
           {"residual", c.residual.to_significant(3)},
           {"threshold", c.threshold.to_significant(1)},
           {"recognized", recognized_json(c.recognized)},
           {"passed", c.passed}};
    if (timings) j["timings"] = {{"check", c.seconds}};
    return j;
}

json catalog_json() {
    json arr = json::array();
    for (const auto& e : catalog()) {
        json points = json::array();
        for (const auto& s : e.expected_singular_points) points.push_back(to_string(s));
        arr.push_back({{"name", e.name},
                       {"expression", e.expression},
                       {"phi", to_string(e.phi)},
                       {"expected_symbol", to_string(e.expected_symbol, "t")},
                       {"expected_singular_points", points},
                       {"expected_M", e.expected_M.get_str()},
                       {"expected_basis", e.expected_basis}});
    }
    return arr;
}

}  // namespace lgapery::cli
