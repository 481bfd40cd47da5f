#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ramval/driver.hpp"

namespace {

// exit codes: 0 ok, 2 oracle mismatch, 3 parse error, 4 indeterminate truncation
int run_one(ramval::Scenario sc, const std::string& format,
            std::optional<int> samples, std::optional<std::uint64_t> seed,
            std::optional<std::string> trunc_exp, std::optional<int> max_terms) {
    if (samples) sc.oracle.samples = *samples;
    if (seed) sc.oracle.seed = *seed;
    if (max_terms) sc.truncation.max_terms = *max_terms;
    if (trunc_exp) sc.truncation.trunc_exponent = ramval::Rat::parse(*trunc_exp);

    ramval::Report rep = ramval::run_scenario(sc);
    if (format == "structured")
        std::cout << ramval::emit_structured(rep);
    else
        std::cout << ramval::emit_text(rep);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ramval: ramification invariants of degree-p extensions of valued fields"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string format = "text";
    std::optional<int> samples;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> trunc_exp;
    std::optional<int> max_terms;
    app.add_option("--format", format, "output format: text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--samples", samples, "oracle sample count");
    app.add_option("--seed", seed, "oracle seed");
    app.add_option("--trunc-exp", trunc_exp, "truncation exponent a/b");
    app.add_option("--max-terms", max_terms, "series term cap");

    std::string path, name;
    CLI::App* cmd_run = app.add_subcommand("run", "run a scenario file");
    cmd_run->add_option("file", path, "scenario file")->required();
    CLI::App* cmd_builtin = app.add_subcommand("builtin", "run a builtin scenario");
    cmd_builtin->add_option("name", name, "builtin name")->required();
    CLI::App* cmd_list = app.add_subcommand("list", "list builtin scenarios");

    CLI11_PARSE(app, argc, argv);

    if (cmd_list->parsed()) {
        for (const auto& n : ramval::builtin_names()) std::cout << n << "\n";
        return 0;
    }

    ramval::Scenario sc;
    try {
        sc = cmd_run->parsed() ? ramval::load_scenario(path) : ramval::builtin_scenario(name);
    } catch (const ramval::ParseError& e) {
        std::cerr << "parse error" << (path.empty() ? "" : " in " + path) << ": " << e.what()
                  << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    const std::string label = sc.name;
    try {
        return run_one(std::move(sc), format, samples, seed, trunc_exp, max_terms);
    } catch (const ramval::OracleMismatch& e) {
        std::cerr << "scenario '" << label << "': oracle mismatch: " << e.what() << "\n";
        return 2;
    } catch (const ramval::IndeterminateValuation& e) {
        std::cerr << "scenario '" << label << "': indeterminate at this truncation: " << e.what()
                  << "\n";
        return 4;
    } catch (const ramval::ProfileTooShort& e) {
        std::cerr << "scenario '" << label << "': indeterminate at this truncation: " << e.what()
                  << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "scenario '" << label << "': " << e.what() << "\n";
        return 1;
    }
}
