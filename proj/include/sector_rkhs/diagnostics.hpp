#ifndef SECTOR_RKHS_DIAGNOSTICS_HPP
#define SECTOR_RKHS_DIAGNOSTICS_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace sector_rkhs::io {

/// One named check: measured value vs target within tolerance. `pass` is
/// derived from the recorded numbers so a reader can re-derive it.
struct CheckRecord {
    std::string name;
    double value = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;

    static CheckRecord absolute(std::string name, double value, double target,
                                double tol, std::string note = {});
    static CheckRecord relative(std::string name, double value, double target,
                                double rel_tol, std::string note = {});
    /// pass iff value <= bound.
    static CheckRecord upper_bound(std::string name, double value, double bound,
                                   std::string note = {});
    static CheckRecord boolean(std::string name, bool ok, std::string note = {});
};

/// A small named table (convergence studies etc.).
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Structured result of a verification run; serializes to JSON with stable
/// key order (nlohmann ordered_json) so reports are byte-reproducible apart
/// from the wall-time field.
struct DiagnosticsReport {
    std::string command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<CheckRecord> checks;
    std::vector<Table> tables;
    std::vector<std::string> warnings;
    double wall_ms = 0.0;

    bool all_pass() const;
    void add(CheckRecord c) { checks.push_back(std::move(c)); }
    void warn(std::string w) { warnings.push_back(std::move(w)); }

    nlohmann::ordered_json to_json() const;
    static DiagnosticsReport from_json(const nlohmann::ordered_json& j);
    /// JSON text with the wall-time field zeroed (determinism contract).
    std::string stable_dump() const;
};

}  // namespace sector_rkhs::io

#endif  // SECTOR_RKHS_DIAGNOSTICS_HPP
