#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"GKZ hypergeometric series toolkit"};
    std::string command, input = "-", format = "json";
    std::string truncation;
    gkz::cli::Options options;
    app.add_option("command", command, "analyze|triangulate|strata|exponents|series|verify|horn|evaluate|homogenize")
        ->required();
    app.add_option("--input", input, "Job file, or - for standard input");
    app.add_option("--truncation", truncation, "Truncation bound p/q (overrides the job)");
    app.add_option("--seed", options.seed, "Seed for the generic lift");
    app.add_option("--tolerance", options.tolerance, "Convergence tolerance for evaluate");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));
    CLI11_PARSE(app, argc, argv);
    if (!truncation.empty()) options.truncation = truncation;

    std::stringstream text;
    if (input == "-") {
        text << std::cin.rdbuf();
    } else {
        std::ifstream in(input);
        if (!in) {
            std::cout << gkz::Json{{"error", {{"code", "ParseError"}, {"field", "--input"}, {"message", "cannot open " + input}}}}.dump(2)
                      << "\n";
            return 1;
        }
        text << in.rdbuf();
    }
    gkz::Json job;
    try {
        job = gkz::Json::parse(text.str());
    } catch (const gkz::Json::parse_error& e) {
        std::cout << gkz::Json{{"error", {{"code", "ParseError"}, {"field", "job"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 1;
    }
    auto result = gkz::cli::run_command(command, job, options);
    std::cout << result.output.dump(2) << "\n";
    return result.exit_code;
}
