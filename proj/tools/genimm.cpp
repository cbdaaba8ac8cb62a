// genimm: exact range constraints and jump calculus for the invariants of
// generic immersions. See README.md for the script format and examples.

#include "genimm/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    using namespace genimm;

    CLI::App app{"Exact invariant calculus for generic immersions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json-lines"}));

    int bernoulli_j = 0;
    auto* bernoulli = app.add_subcommand("bernoulli", "print the j-th Bernoulli number (1/6, 1/30, ...)");
    bernoulli->add_option("j", bernoulli_j, "index, j >= 1")->required();

    int mu_j = 0;
    auto* mu = app.add_subcommand("mu", "print mu_j, the denominator of B_j/(4j), with its factorization");
    mu->add_option("j", mu_j, "index, j >= 1")->required();

    int range_m = 0;
    auto* l_range = app.add_subcommand("l-range", "print the range constraints on L for immersions S^(2m-1) -> R^(2m+1)");
    l_range->add_option("m", range_m, "m >= 2")->required();

    int group_m = 0;
    auto* imm_group = app.add_subcommand("imm-group", "print the group of regular homotopy classes of immersions S^(2m-1) -> R^(2m+1)");
    imm_group->add_option("m", group_m, "m >= 2")->required();

    std::string script_path;
    bool check = false;
    auto* simulate = app.add_subcommand("simulate", "replay an event script and print the invariant trace");
    simulate->add_option("script", script_path, "path to an event-script file")->required();
    simulate->add_flag("--check", check, "audit residue constancy and state consistency along the trace");

    int max_j = 17;
    auto* table = app.add_subcommand("table", "print the range table over j (S^(4j-1) -> R^(4j+1))");
    table->add_option("--max-j", max_j, "last row, in [1, 100]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return cli::kExitUsage;
    }

    const cli::OutputFormat fmt =
        format == "json-lines" ? cli::OutputFormat::JsonLines : cli::OutputFormat::Text;

    if (*bernoulli)
        return cli::cmd_bernoulli(bernoulli_j, std::cout, std::cerr);
    if (*mu)
        return cli::cmd_mu(mu_j, std::cout, std::cerr);
    if (*l_range)
        return cli::cmd_l_range(range_m, fmt, std::cout, std::cerr);
    if (*imm_group)
        return cli::cmd_imm_group(group_m, std::cout, std::cerr);
    if (*simulate)
        return cli::cmd_simulate(script_path, fmt, check, std::cout, std::cerr);
    if (*table)
        return cli::cmd_table(max_j, fmt, std::cout, std::cerr);
    return cli::kExitUsage;
}
