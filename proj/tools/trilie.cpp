// Command-line front end: parse JSON inputs, dispatch computations, emit
// machine-readable reports. See README.md for the file formats.

#include <CLI11.hpp>

#include <iostream>

#include "trilie/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology and deformation checks for 3-Lie algebras and their morphisms"};
    app.require_subcommand(1);

    trilie::cli::Job job;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", job.format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };
    auto add_morphism_inputs = [&](CLI::App* cmd) {
        cmd->add_option("--source", job.source, "source algebra JSON file")->required();
        cmd->add_option("--target", job.target, "target algebra JSON file")->required();
        cmd->add_option("--map", job.map, "linear map JSON file")->required();
    };

    auto* check_algebra = app.add_subcommand("check-algebra", "validate the fundamental identity");
    check_algebra->add_option("file", job.algebra, "algebra JSON file")->required();
    add_format(check_algebra);

    auto* check_morphism = app.add_subcommand("check-morphism", "validate bracket preservation");
    add_morphism_inputs(check_morphism);
    add_format(check_morphism);

    auto* mc = app.add_subcommand("mc-residual", "Maurer-Cartan residual of a bracket tensor or a map");
    mc->add_option("--algebra", job.algebra, "bracket tensor JSON file (structure residual)");
    mc->add_option("--source", job.source, "source algebra JSON file (morphism residual)");
    mc->add_option("--target", job.target, "target algebra JSON file");
    mc->add_option("--map", job.map, "linear map JSON file");
    add_format(mc);

    auto* com = app.add_subcommand("cohomology-morphism", "cohomology dimensions of a morphism");
    add_morphism_inputs(com);
    com->add_option("--max-degree", job.max_degree, "highest degree to report")->capture_default_str();
    add_format(com);

    auto* cor = app.add_subcommand("cohomology-rep", "cohomology dimensions of a representation complex");
    cor->add_option("--algebra", job.algebra, "algebra JSON file")->required();
    cor->add_option("--rep", job.rep, "representation JSON file");
    cor->add_flag("--adjoint", job.adjoint, "use the adjoint representation");
    cor->add_option("--max-degree", job.max_degree, "highest degree to report")->capture_default_str();
    add_format(cor);

    auto* rig = app.add_subcommand("rigidity", "first-cohomology rigidity criterion");
    add_morphism_inputs(rig);
    add_format(rig);

    auto* stab = app.add_subcommand("stability", "second-cohomology stability criterion");
    add_morphism_inputs(stab);
    add_format(stab);

    auto* sub = app.add_subcommand("subalgebra", "closure check, optionally with the stability criterion");
    sub->add_option("--algebra", job.algebra, "ambient algebra JSON file")->required();
    sub->add_option("--basis", job.basis, "subspace basis JSON file")->required();
    sub->add_flag("--stability", job.stability, "also compute the stability criterion");
    add_format(sub);

    auto* graph = app.add_subcommand("graph-iso", "compare morphism cohomology with its graph subalgebra");
    add_morphism_inputs(graph);
    graph->add_option("--degree", job.degree, "degree to compare")->capture_default_str();
    add_format(graph);

    auto* jet = app.add_subcommand("jet", "first-order deformation check");
    jet->add_option("--source", job.source, "source algebra JSON file (morphism jet)");
    jet->add_option("--target", job.target, "target algebra JSON file");
    jet->add_option("--map", job.map, "base morphism JSON file");
    jet->add_option("--algebra", job.algebra, "ambient algebra JSON file (subalgebra jet)");
    jet->add_option("--basis", job.basis, "subalgebra basis JSON file");
    jet->add_option("--alpha", job.alpha, "velocity JSON file")->required();
    add_format(jet);

    CLI11_PARSE(app, argc, argv);

    for (auto* cmd : app.get_subcommands()) job.command = cmd->get_name();
    return trilie::cli::run(job, std::cout);
}
