// Command-line front end. Subcommands map one-to-one onto the library
// operations; every report echoes the seeds and budgets it ran with and
// serializes exact values as "p/q" strings, so identical invocations
// produce identical bytes.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hadfact/errors.hpp"
#include "hadfact/factorization.hpp"
#include "hadfact/poly_io.hpp"
#include "hadfact/random_stable.hpp"
#include "hadfact/reports.hpp"
#include "hadfact/version.hpp"

namespace {

using namespace hadfact;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnstable = 3;

PolyFormat parse_format(const std::string& name) {
    if (name == "json") return PolyFormat::Json;
    if (name == "csv") return PolyFormat::Csv;
    throw ParseError("unknown format: " + name + " (expected json or csv)");
}

void emit(const Json& report, const std::string& output_path) {
    const std::string text = dump_report(report);
    std::cout << text;
    if (!output_path.empty()) write_text_file(output_path, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hurwitz stability and Hadamard factorization toolkit"};
    app.set_version_flag("--version", std::string(kToolName) + " " + std::string(kVersion));
    app.require_subcommand(1);

    std::string input, input2, output, trace_path;
    std::string format = "json";
    std::vector<int> rows, cols;
    int degree = 0;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;
    std::uint64_t sample_budget = 20000;
    int restarts = 10;
    int max_steps = 16;
    int max_minor_size = 3;
    int workers = 1;
    unsigned precision = 12;
    double margin = 1e-9;
    double root_scale = 1.0;
    bool float_check = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "polynomial file (JSON or CSV)")->required();
    };
    auto add_two_inputs = [&](CLI::App* cmd) {
        add_input(cmd);
        cmd->add_option("--input2", input2, "second polynomial file")->required();
    };
    auto add_output = [&](CLI::App* cmd) { cmd->add_option("--output", output, "write output here as well"); };
    auto add_seed = [&](CLI::App* cmd) { cmd->add_option("--seed", seed, "RNG seed (echoed in reports)"); };
    auto add_workers = [&](CLI::App* cmd) {
        cmd->add_option("--workers", workers, "parallel workers (never changes results)");
    };
    auto add_precision = [&](CLI::App* cmd) {
        cmd->add_option("--precision", precision, "decimal digits for displayed bounds");
    };

    CLI::App* c_stable = app.add_subcommand("stable", "exact stability certificate (exit 3 if unstable)");
    add_input(c_stable);
    add_output(c_stable);
    c_stable->add_flag("--float-check", float_check, "also run the float root oracle");
    c_stable->add_option("--margin", margin, "float oracle margin");

    CLI::App* c_hurwitz = app.add_subcommand("hurwitz", "print the Hurwitz matrix");
    add_input(c_hurwitz);
    add_output(c_hurwitz);

    CLI::App* c_minors = app.add_subcommand(
        "minors", "exact determinant of a Hurwitz submatrix (defaults to the located margin minor)");
    add_input(c_minors);
    add_output(c_minors);
    c_minors->add_option("--rows", rows, "1-based row selection")->delimiter(',');
    c_minors->add_option("--cols", cols, "1-based column selection")->delimiter(',');

    CLI::App* c_kemp = app.add_subcommand("kemperman", "minor positivity audit of a stable polynomial");
    add_input(c_kemp);
    add_output(c_kemp);
    add_seed(c_kemp);
    add_workers(c_kemp);
    c_kemp->add_option("--max-minor-size", max_minor_size, "largest audited minor size");
    c_kemp->add_option("--sample-budget", sample_budget, "full enumeration up to this many minors");

    CLI::App* c_delta = app.add_subcommand("delta", "delta invariants and the omega obstruction");
    add_input(c_delta);
    add_output(c_delta);
    add_precision(c_delta);

    CLI::App* c_lemma1 = app.add_subcommand("lemma1", "delta1 < 1, delta2 < 1, delta1+delta2 < 1 with margins");
    add_input(c_lemma1);
    add_output(c_lemma1);

    CLI::App* c_lemma2 = app.add_subcommand("lemma2", "delta monotonicity under a stable Hadamard quotient");
    add_two_inputs(c_lemma2);
    add_output(c_lemma2);

    CLI::App* c_product = app.add_subcommand("product", "coefficient-wise product");
    add_two_inputs(c_product);
    add_output(c_product);
    c_product->add_option("--format", format, "output polynomial format: json|csv");

    CLI::App* c_quotient = app.add_subcommand("quotient", "coefficient-wise quotient");
    add_two_inputs(c_quotient);
    add_output(c_quotient);
    c_quotient->add_option("--format", format, "output polynomial format: json|csv");

    CLI::App* c_fact = app.add_subcommand("factorize", "search for a certified Hadamard factorization");
    add_input(c_fact);
    add_output(c_fact);
    add_seed(c_fact);
    add_workers(c_fact);
    add_precision(c_fact);
    budget = 10000;
    c_fact->add_option("--budget", budget, "exact stability tests allowed (default 10000)");

    CLI::App* c_hunt = app.add_subcommand("hunt", "maximize omega over certified stable polynomials");
    add_output(c_hunt);
    add_seed(c_hunt);
    add_workers(c_hunt);
    add_precision(c_hunt);
    c_hunt->add_option("--degree", degree, "polynomial degree (>= 4)")->required();
    c_hunt->add_option("--budget", budget, "exact stability tests allowed (default 100000)");
    c_hunt->add_option("--restarts", restarts, "independent restarts (default 10)");
    c_hunt->add_option("--trace", trace_path, "write best-so-far CSV trace here");

    CLI::App* c_chain = app.add_subcommand("chain", "build a quotient chain from a stable polynomial");
    add_input(c_chain);
    add_output(c_chain);
    add_seed(c_chain);
    add_workers(c_chain);
    add_precision(c_chain);
    c_chain->add_option("--max-steps", max_steps, "chain step limit (default 16)");
    c_chain->add_option("--budget", budget, "exact stability tests per step (default 2000)");

    CLI::App* c_gen = app.add_subcommand("gen", "sample a certified stable polynomial");
    add_output(c_gen);
    add_seed(c_gen);
    c_gen->add_option("--degree", degree, "polynomial degree (>= 1)")->required();
    c_gen->add_option("--root-scale", root_scale, "root magnitude scale (default 1.0)");
    c_gen->add_option("--format", format, "output polynomial format: json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*c_stable) {
            PositivePolynomial f = read_polynomial(input);
            Json report = stability_report_json(f, float_check, margin);
            emit(report, output);
            return report["stable"].get<bool>() ? kExitOk : kExitUnstable;
        }
        if (*c_hurwitz) {
            emit(hurwitz_report_json(read_polynomial(input)), output);
            return kExitOk;
        }
        if (*c_minors) {
            emit(minor_report_json(read_polynomial(input), rows, cols), output);
            return kExitOk;
        }
        if (*c_kemp) {
            emit(kemperman_report_json(read_polynomial(input), max_minor_size, sample_budget, seed,
                                       workers),
                 output);
            return kExitOk;
        }
        if (*c_delta) {
            emit(delta_report_json(read_polynomial(input), precision), output);
            return kExitOk;
        }
        if (*c_lemma1) {
            emit(lemma1_report_json(read_polynomial(input)), output);
            return kExitOk;
        }
        if (*c_lemma2) {
            emit(lemma2_report_json(read_polynomial(input), read_polynomial(input2)), output);
            return kExitOk;
        }
        if (*c_product || *c_quotient) {
            PositivePolynomial f = read_polynomial(input);
            PositivePolynomial g = read_polynomial(input2);
            const bool is_product = static_cast<bool>(*c_product);
            Json report = is_product ? product_report_json(f, g) : quotient_report_json(f, g);
            std::cout << dump_report(report);
            if (!output.empty()) {
                PositivePolynomial result =
                    is_product ? hadamard_product(f, g) : hadamard_quotient(f, g);
                write_polynomial(result, output, parse_format(format));
            }
            return kExitOk;
        }
        if (*c_fact) {
            emit(factorize_report_json(read_polynomial(input), budget, seed, workers, precision),
                 output);
            return kExitOk;
        }
        if (*c_hunt) {
            if (!c_hunt->count("--budget")) budget = 100000;
            HuntReport hunt = hunt_counterexample(degree, budget, restarts, seed, workers);
            emit(hunt_report_json(hunt, precision), output);
            if (!trace_path.empty()) write_text_file(trace_path, hunt_trace_csv(hunt, precision));
            return kExitOk;
        }
        if (*c_chain) {
            if (!c_chain->count("--budget")) budget = 2000;
            ChainRecord rec = build_chain(read_polynomial(input), max_steps, budget, seed, workers);
            emit(chain_report_json(rec, precision), output);
            return kExitOk;
        }
        if (*c_gen) {
            PositivePolynomial p = random_stable(degree, seed, root_scale);
            std::cout << dump_report(gen_report_json(p, degree, seed, root_scale));
            if (!output.empty()) write_polynomial(p, output, parse_format(format));
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cout << dump_report(error_report(e));
        return kExitDomainError;
    }
    return kExitUsage;
}
