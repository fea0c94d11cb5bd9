#include <cstdio>
#include <future>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "dirac_darboux/cli.hpp"
#include "dirac_darboux/errors.hpp"

namespace dd::cli {

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitDomain = 2;
constexpr int kExitRepro = 3;

struct Options {
    std::string config;
    std::string format = "csv";
    std::string out;
    std::optional<double> tol;
    std::string case_id;
    bool all = false;
};

void write(const Table& t, const Options& o) {
    const Format f = format_from_string(o.format);
    if (o.out.empty())
        std::cout << render(t, f);
    else
        emit(t, f, o.out);
}

int repro(const Options& o) {
    std::vector<const ReproCase*> cases;
    if (o.all) {
        for (const auto& c : manifest()) cases.push_back(&c);
    } else {
        const ReproCase* c = find_case(o.case_id);
        if (!c) throw ConfigError("unknown case '" + o.case_id + "'");
        cases.push_back(c);
    }
    // Cases are independent; results print in manifest order.
    std::vector<std::future<std::pair<ReproResult, std::string>>> jobs;
    for (const ReproCase* c : cases)
        jobs.push_back(std::async(std::launch::async, [c, &o]() -> std::pair<ReproResult, std::string> {
            try {
                return {run_case(*c, o.tol), ""};
            } catch (const std::exception& e) {
                return {{}, e.what()};
            }
        }));
    bool all_pass = true;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        auto [r, err] = jobs[i].get();
        const ReproCase& c = *cases[i];
        if (!err.empty()) {
            all_pass = false;
            fmt::print("{:<26} FAIL  error: {}\n", c.id, err);
            continue;
        }
        all_pass = all_pass && r.pass;
        fmt::print("{:<26} {}  measured={:.3e} tol={:.1e}  {} [{}]\n", c.id, r.pass ? "PASS" : "FAIL", r.measured,
                   o.tol.value_or(c.tol), r.detail, c.source);
    }
    return all_pass ? 0 : kExitRepro;
}

int dispatch(const std::string& sub, const Options& o) {
    if (sub == "repro") return repro(o);
    const Scenario s = load_scenario(o.config);
    if (sub == "potential") write(potential_table(s), o);
    else if (sub == "solve") write(solution_table(s), o);
    else if (sub == "darboux") write(darboux_table(s), o);
    else if (sub == "elementary") write(elementary_table(s), o);
    else if (sub == "check") write(check_table(s), o);
    else if (sub == "verify") {
        const Table t = verify_table(s, o.tol.value_or(1e-6));
        write(t, o);
        for (const auto& row : t.rows)
            if (std::get<std::string>(row.back()) != "PASS") return kExitRepro;
    }
    return 0;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Dirac-Darboux solver: potentials, exact spinors, partner potentials and checks"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sc) {
        sc->add_option("--config", o.config, "scenario file")->required()->check(CLI::ExistingFile);
        sc->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sc->add_option("--out", o.out, "output path (default stdout)");
        sc->add_option("--tol", o.tol, "tolerance override");
    };
    add_common(app.add_subcommand("potential", "u0 on the grid"));
    add_common(app.add_subcommand("solve", "closed-form spinor on the grid"));
    add_common(app.add_subcommand("darboux", "partner potential and diagnostics on the grid"));
    add_common(app.add_subcommand("elementary", "k_y roots of a degeneration condition"));
    add_common(app.add_subcommand("check", "reality, diagonal and elementary conditions"));
    add_common(app.add_subcommand("verify", "ODE, residual, density and kernel checks"));
    CLI::App* rp = app.add_subcommand("repro", "run reproduction cases");
    rp->add_option("case", o.case_id, "case id");
    rp->add_flag("--all", o.all, "run every case");
    rp->add_option("--tol", o.tol, "tolerance override");
    rp->callback([&] {
        if (o.all == !o.case_id.empty()) throw CLI::ValidationError("give a case id or --all");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), o);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitDomain;
    }
}

}  // namespace dd::cli
