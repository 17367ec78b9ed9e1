#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "salpeter/config.hpp"

namespace salpeter {

/// Ordered key=value diagnostics plus an overall flag. The flag is pass
/// exactly when every checked entry landed within its tolerance.
class ResidualReport {
public:
    void add(const std::string& name, double value) { entries_.push_back({name, value}); }

    /// Record a residual that must satisfy |value| <= tol.
    void check(const std::string& name, double value, double tol) {
        entries_.push_back({name, value});
        if (!(std::abs(value) <= tol)) pass_ = false;
    }

    bool pass() const { return pass_; }
    const std::vector<std::pair<std::string, double>>& entries() const { return entries_; }

    double value(const std::string& name) const {
        for (const auto& e : entries_)
            if (e.first == name) return e.second;
        throw std::out_of_range("report has no entry '" + name + "'");
    }

    void print(std::ostream& out) const {
        for (const auto& e : entries_) out << e.first << "=" << format_g17(e.second) << "\n";
        out << "pass=" << (pass_ ? 1 : 0) << "\n";
    }

private:
    std::vector<std::pair<std::string, double>> entries_;
    bool pass_ = true;
};

/// Tab-separated table with string cells; numeric cells should be produced
/// with format_g17 so files round-trip losslessly.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) {
        if (row.size() != columns.size())
            throw std::invalid_argument("table row width does not match column count");
        rows.push_back(std::move(row));
    }
};

/// Emit a table with a '#' header block carrying the command name, the full
/// resolved configuration and any extra parameters. Output depends only on
/// the arguments, so identical runs produce identical bytes.
inline void write_table(std::ostream& out, const std::string& command, const RunConfig& cfg,
                        const std::vector<std::pair<std::string, std::string>>& extra,
                        const Table& table) {
    out << "# command: " << command << "\n";
    std::istringstream cfg_lines(serialize_config(cfg));
    std::string line;
    while (std::getline(cfg_lines, line)) out << "# " << line << "\n";
    for (const auto& kv : extra) out << "# " << kv.first << " = " << kv.second << "\n";
    out << "# columns:";
    for (const auto& c : table.columns) out << "\t" << c;
    out << "\n";
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
        out << "\n";
    }
}

inline void write_table_file(const std::string& path, const std::string& command,
                             const RunConfig& cfg,
                             const std::vector<std::pair<std::string, std::string>>& extra,
                             const Table& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    write_table(out, command, cfg, extra, table);
    if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

}  // namespace salpeter
