#include <CLI11.hpp>
#include <iostream>

#include "qembed/cli.hpp"

int main(int argc, char** argv) {
    qembed::CommandRequest req;
    CLI::App app{"homogeneous quandle embedding toolkit"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tol", req.tol, "numeric tolerance")->capture_default_str();
        cmd->add_option("--samples", req.samples, "sample count for seeded checks")
            ->capture_default_str();
        cmd->add_option("--seed", req.seed, "sampling seed")->capture_default_str();
        cmd->add_option("--modulus-factor", req.modulus_factor,
                        "multiple of ord(sigma) for the semidirect modulus")
            ->capture_default_str();
        cmd->add_option("--format", req.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
        cmd->add_option("--out", req.out, "write the report to a file");
    };

    CLI::App* make = app.add_subcommand("make", "construct quandles and groups");
    make->add_option("kind", req.kind,
                     "conj | core | alex | triplet | dihedral | bergman-ext | semidirect-z")
        ->required();
    make->add_option("order", req.dihedral_n, "order for `make dihedral`");
    make->add_option("--group", req.group_path, "group json file");
    make->add_option("--aut", req.aut_path, "automorphism json file");
    make->add_option("--subgroup", req.subgroup_path, "subgroup json file");
    add_common(make);

    CLI::App* verify = app.add_subcommand("verify", "check the quandle axioms of a table");
    verify->add_option("quandle", req.quandle_path, "quandle json file")->required();
    add_common(verify);

    CLI::App* embed = app.add_subcommand("embed", "embed a triplet quandle into a conjugation quandle");
    embed->add_option("triplet", req.triplet_path, "triplet json file")->required();
    embed->add_option("--mode", req.mode, "inner | semidirect | auto")
        ->check(CLI::IsMember({"inner", "semidirect", "auto"}))
        ->capture_default_str();
    int witness = -1;
    embed->add_option("--witness", witness, "conjugation witness element for --mode inner");
    add_common(embed);

    CLI::App* joyce = app.add_subcommand("joyce", "decompose a homogeneous quandle");
    joyce->add_option("quandle", req.quandle_path, "quandle json file")->required();
    joyce->add_option("--basepoint", req.basepoint, "basepoint element")->capture_default_str();
    add_common(joyce);

    CLI::App* bergman = app.add_subcommand("bergman", "core quandle embedding via the switching triplet");
    bergman->add_option("--group", req.group_path, "group json file")->required();
    add_common(bergman);

    CLI::App* geom = app.add_subcommand("geom", "seeded checks for the numeric quandles");
    geom->add_option("family", req.kind, "sphere | rotation | grassmann | oriented-grassmann")
        ->required();
    geom->add_option("--n", req.n, "ambient dimension (sphere: n of S^n)")->capture_default_str();
    geom->add_option("--k", req.k, "plane dimension")->capture_default_str();
    geom->add_option("--theta", req.theta, "rotation angle");
    add_common(geom);

    CLI11_PARSE(app, argc, argv);

    req.subcommand = app.get_subcommands().front()->get_name();
    if (embed->count("--witness")) req.witness = witness;
    return qembed::run_command(req, std::cout, std::cerr);
}
