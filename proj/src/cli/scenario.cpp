#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "dirac_darboux/cli.hpp"
#include "dirac_darboux/errors.hpp"

namespace dd::cli {

namespace {

const std::map<std::string, Artifact>& artifact_names() {
    static const std::map<std::string, Artifact> m = {
        {"potential", Artifact::Potential},
        {"solution", Artifact::Solution},
        {"transformed-potential", Artifact::TransformedPotential},
        {"transformed-solution", Artifact::TransformedSolution},
        {"density", Artifact::Density},
        {"elementary-roots", Artifact::ElementaryRoots},
        {"condition-report", Artifact::ConditionReport},
    };
    return m;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_plain(const std::string& key, const std::string& v) {
    double d = 0.0;
    const char* first = v.data();
    const char* last = v.data() + v.size();
    if (!v.empty() && *first == '+') ++first;
    auto [p, ec] = std::from_chars(first, last, d);
    if (ec != std::errc() || p != last || !std::isfinite(d))
        throw ConfigError(fmt::format("{}: '{}' is not a finite number", key, v));
    return d;
}

double parse_number(const std::string& key, const std::string& v) {
    const auto slash = v.find('/');
    if (slash == std::string::npos) return parse_plain(key, v);
    const double den = parse_plain(key, trim(v.substr(slash + 1)));
    if (den == 0.0) throw ConfigError(fmt::format("{}: zero denominator", key));
    return parse_plain(key, trim(v.substr(0, slash))) / den;
}

int parse_int(const std::string& key, const std::string& v) {
    int n = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec != std::errc() || p != v.data() + v.size()) throw ConfigError(fmt::format("{}: '{}' is not an integer", key, v));
    return n;
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError(fmt::format("{}: '{}' is not a boolean", key, v));
}

// "1..5" or "1, 2, 4"
std::vector<int> parse_int_list(const std::string& key, const std::string& v) {
    std::vector<int> out;
    for (const auto& item : split_list(v)) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_int(key, item));
            continue;
        }
        const int a = parse_int(key, trim(item.substr(0, dots)));
        const int b = parse_int(key, trim(item.substr(dots + 2)));
        if (b < a) throw ConfigError(fmt::format("{}: empty range '{}'", key, item));
        for (int n = a; n <= b; ++n) out.push_back(n);
    }
    return out;
}

void validate(const Scenario& s) {
    s.spec.validate();
    if (s.grid.n_points < 2) throw ConfigError("n_points must be at least 2");
    if (!(s.grid.x_hi > s.grid.x_lo)) throw ConfigError("x_hi must exceed x_lo");
    for (double x : s.grid.points()) {
        try {
            require_in_domain(s.spec, x);
        } catch (const DomainError& e) {
            throw ConfigError(fmt::format("grid point {} leaves the potential domain", x));
        }
    }
    for (int n : s.n_values)
        if (n < 0) throw ConfigError("n must be nonnegative");
}

}  // namespace

std::string to_string(Artifact a) {
    for (const auto& [name, v] : artifact_names())
        if (v == a) return name;
    return "?";
}

Artifact artifact_from_string(const std::string& s) {
    const auto it = artifact_names().find(s);
    if (it == artifact_names().end()) throw ConfigError(fmt::format("unknown output kind '{}'", s));
    return it->second;
}

std::vector<double> Grid::points() const {
    std::vector<double> xs(std::max(n_points, 0));
    for (int i = 0; i < n_points; ++i)
        xs[i] = i + 1 == n_points ? x_hi : x_lo + (x_hi - x_lo) * i / (n_points - 1.0);
    return xs;
}

std::vector<ModeParams> Scenario::modes() const {
    std::vector<ModeParams> m;
    for (double k : ky) m.push_back({E, k});
    return m;
}

bool Scenario::wants(Artifact a) const { return std::find(outputs.begin(), outputs.end(), a) != outputs.end(); }

Scenario parse_scenario(const std::string& text) {
    Scenario s;
    std::optional<double> l0, l1;
    std::map<std::string, int> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(fmt::format("line {}: expected key = value", lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (seen[key]++) throw ConfigError(fmt::format("line {}: duplicate key '{}'", lineno, key));
        if (val.empty()) throw ConfigError(fmt::format("line {}: empty value for '{}'", lineno, key));

        if (key == "family") s.spec.family = family_from_string(val);
        else if (key == "V0") s.spec.V0 = parse_number(key, val);
        else if (key == "V1") s.spec.V1 = parse_number(key, val);
        else if (key == "sigma") s.spec.sigma = parse_number(key, val);
        else if (key == "x1") s.spec.x1 = parse_number(key, val);
        else if (key == "singular") s.spec.singular = parse_bool(key, val);
        else if (key == "mirror") s.spec.mirror = parse_bool(key, val);
        else if (key == "E") s.E = parse_number(key, val);
        else if (key == "ky") {
            for (const auto& item : split_list(val)) s.ky.push_back(parse_number(key, item));
        } else if (key == "lambda0") l0 = parse_number(key, val);
        else if (key == "lambda1") l1 = parse_number(key, val);
        else if (key == "x_lo") s.grid.x_lo = parse_number(key, val);
        else if (key == "x_hi") s.grid.x_hi = parse_number(key, val);
        else if (key == "n_points") s.grid.n_points = parse_int(key, val);
        else if (key == "outputs") {
            for (const auto& item : split_list(val)) s.outputs.push_back(artifact_from_string(item));
        } else if (key == "condition") s.condition = condition_from_string(val);
        else if (key == "n") s.n_values = parse_int_list(key, val);
        else throw ConfigError(fmt::format("line {}: unknown key '{}'", lineno, key));
    }
    if (l0.has_value() != l1.has_value()) throw ConfigError("lambda0 and lambda1 must be given together");
    if (l0) s.transform = TransformSpec(*l0, *l1);
    validate(s);
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError(fmt::format("cannot read '{}'", path));
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_scenario(ss.str());
}

std::string format_scenario(const Scenario& s) {
    std::string out;
    auto put = [&](const std::string& k, const std::string& v) { out += k + " = " + v + "\n"; };
    put("family", to_string(s.spec.family));
    put("V0", format_number(s.spec.V0));
    put("V1", format_number(s.spec.V1));
    put("sigma", format_number(s.spec.sigma));
    put("x1", format_number(s.spec.x1));
    put("singular", s.spec.singular ? "true" : "false");
    put("mirror", s.spec.mirror ? "true" : "false");
    put("E", format_number(s.E));
    if (!s.ky.empty()) {
        std::vector<std::string> parts;
        for (double k : s.ky) parts.push_back(format_number(k));
        put("ky", fmt::format("{}", fmt::join(parts, ", ")));
    }
    if (s.transform) {
        put("lambda0", format_number(s.transform->lambda0));
        put("lambda1", format_number(s.transform->lambda1));
    }
    put("x_lo", format_number(s.grid.x_lo));
    put("x_hi", format_number(s.grid.x_hi));
    put("n_points", std::to_string(s.grid.n_points));
    if (!s.outputs.empty()) {
        std::vector<std::string> parts;
        for (auto a : s.outputs) parts.push_back(to_string(a));
        put("outputs", fmt::format("{}", fmt::join(parts, ", ")));
    }
    if (s.condition) put("condition", to_string(*s.condition));
    if (!s.n_values.empty()) put("n", fmt::format("{}", fmt::join(s.n_values, ", ")));
    return out;
}

}  // namespace dd::cli
