#include <cmath>
#include <filesystem>
#include <fstream>

#include <fmt/format.h>
#include <unistd.h>

#include "dirac_darboux/cli.hpp"
#include "dirac_darboux/errors.hpp"

namespace dd::cli {

namespace {

std::string csv_field(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return "null";
    if (const double* d = std::get_if<double>(&c)) return format_number(*d);
    const std::string& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

std::string json_string(const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': q += "\\\""; break;
            case '\\': q += "\\\\"; break;
            case '\n': q += "\\n"; break;
            case '\t': q += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) q += fmt::format("\\u{:04x}", int(ch));
                else q += ch;
        }
    }
    return q + "\"";
}

std::string json_field(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return "null";
    if (const double* d = std::get_if<double>(&c)) return format_number(*d);
    return json_string(std::get<std::string>(c));
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw Error("Error: row width does not match the header");
    rows.push_back(std::move(row));
}

Format format_from_string(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw ConfigError("unknown format '" + s + "'");
}

std::string format_number(double v) {
    if (!std::isfinite(v)) return "null";
    return fmt::format("{:.17g}", v);
}

std::string render(const Table& t, Format f) {
    if (t.rows.empty()) throw IoError("nothing to emit");
    std::string out;
    if (f == Format::Csv) {
        for (std::size_t j = 0; j < t.columns.size(); ++j) out += (j ? "," : "") + t.columns[j];
        out += "\n";
        for (const auto& r : t.rows) {
            for (std::size_t j = 0; j < r.size(); ++j) out += (j ? "," : "") + csv_field(r[j]);
            out += "\n";
        }
        return out;
    }
    // Array of row objects keyed by column name, in header order.
    out += "[\n";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        out += "  {";
        for (std::size_t j = 0; j < t.columns.size(); ++j)
            out += (j ? ", " : "") + json_string(t.columns[j]) + ": " + json_field(t.rows[i][j]);
        out += i + 1 < t.rows.size() ? "},\n" : "}\n";
    }
    out += "]\n";
    return out;
}

void emit(const Table& t, Format f, const std::string& path) {
    const std::string body = render(t, f);
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += fmt::format(".tmp{}", ::getpid());
    {
        std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
        if (!o) throw IoError("cannot open '" + tmp.string() + "' for writing");
        o << body;
        o.flush();
        if (!o) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot move output into '" + path + "'");
    }
}

}  // namespace dd::cli
