#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dirac_darboux/elementary.hpp"
#include "dirac_darboux/verify.hpp"

namespace dd::cli {

enum class Artifact {
    Potential,
    Solution,
    TransformedPotential,
    TransformedSolution,
    Density,
    ElementaryRoots,
    ConditionReport,
};

std::string to_string(Artifact a);
Artifact artifact_from_string(const std::string& s);

struct Grid {
    double x_lo = -5.0;
    double x_hi = 5.0;
    int n_points = 201;

    std::vector<double> points() const;
};

struct Scenario {
    PotentialSpec spec;
    double E = 0.0;
    std::vector<double> ky;  // one mode per entry
    std::optional<TransformSpec> transform;
    Grid grid;
    std::vector<Artifact> outputs;
    // Only read by `elementary`.
    std::optional<ConditionId> condition;
    std::vector<int> n_values;

    std::vector<ModeParams> modes() const;
    bool wants(Artifact a) const;
};

// Flat `key = value` text, one scenario per file; '#' starts a comment.
// Numbers accept a/b fractions. Throws ConfigError.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);
// Canonical text form; parse_scenario(format_scenario(s)) reproduces s.
std::string format_scenario(const Scenario& s);

// Empty cells are gaps and serialize as null.
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

enum class Format { Csv, Json };
Format format_from_string(const std::string& s);

std::string format_number(double v);  // 17 significant digits
std::string render(const Table& t, Format f);
// Writes to a sibling temp file and renames it over path. Throws IoError.
void emit(const Table& t, Format f, const std::string& path);

Table potential_table(const Scenario& s);
Table solution_table(const Scenario& s);
Table darboux_table(const Scenario& s);
Table transformed_solution_table(const Scenario& s);
Table density_table(const Scenario& s);
Table elementary_table(const Scenario& s);
Table check_table(const Scenario& s);
Table verify_table(const Scenario& s, double tol);

struct ReproResult {
    double measured = 0.0;  // worst error or the value compared
    bool pass = false;
    std::string detail;
};

struct ReproCase {
    std::string id;
    std::string description;
    std::string source;    // where the expected value comes from
    std::string scenario;  // config text
    double tol = 0.0;
    std::function<ReproResult(const Scenario&, double tol)> run;
};

const std::vector<ReproCase>& manifest();
const ReproCase* find_case(const std::string& id);
ReproResult run_case(const ReproCase& c, std::optional<double> tol = std::nullopt);

// Process entry point; returns the exit code.
int run(int argc, char** argv);

}  // namespace dd::cli
