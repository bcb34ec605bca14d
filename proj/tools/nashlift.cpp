#include <iostream>

#include <CLI11.hpp>

#include "app.hpp"

int main(int argc, char** argv) {
    using nashlift::app::JobSpec;
    JobSpec job;
    CLI::App cli{"Nash blowup towers, fractional-ideal ladders and arc lifting over Q"};
    cli.set_version_flag("--version", nashlift::app::kVersion);
    cli.add_option("command", job.command, "smooth | nash | tower | ladder | lift | criterion | probe | dlog-check")
        ->required()
        ->check(CLI::IsMember(nashlift::app::commands()));
    cli.add_option("variety", job.variety, "variety file (vars/ideal/dim)");
    cli.add_option("arc", job.arc, "arc file (x = t^2; ...; trunc 64)");
    cli.add_option("--max-iter", job.max_iter, "tower levels to try (1..64)")->capture_default_str();
    cli.add_option("--depth", job.depth, "ladder depth (0..8)")->capture_default_str();
    cli.add_option("--trunc", job.trunc, "arc truncation order, overrides the arc file");
    cli.add_option("--seed", job.seed, "seed for generic row reduction and random trials")->capture_default_str();
    cli.add_option("--format", job.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cli.add_option("--frame", job.frame, "preferred frame variables, e.g. x,y")->delimiter(',');
    cli.add_option("--n", job.n, "dimension for dlog-check (1..6)")->capture_default_str();
    cli.add_option("--trials", job.trials, "trial count for dlog-check")->capture_default_str();
    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = cli.exit(e);
        return code == 0 ? 0 : 1;
    }
    return nashlift::app::run(job, std::cout, std::cerr);
}
