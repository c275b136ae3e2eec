#include "sector_rkhs/diagnostics.hpp"

#include <cmath>

namespace sector_rkhs::io {

CheckRecord CheckRecord::absolute(std::string name, double value, double target,
                                  double tol, std::string note) {
    CheckRecord c;
    c.name = std::move(name);
    c.value = value;
    c.target = target;
    c.tolerance = tol;
    c.pass = std::isfinite(value) && std::abs(value - target) <= tol;
    c.note = std::move(note);
    return c;
}

CheckRecord CheckRecord::relative(std::string name, double value, double target,
                                  double rel_tol, std::string note) {
    CheckRecord c;
    c.name = std::move(name);
    c.value = value;
    c.target = target;
    c.tolerance = rel_tol;
    const double scale = std::abs(target);
    c.pass = std::isfinite(value) &&
             std::abs(value - target) <= rel_tol * (scale > 0 ? scale : 1.0);
    c.note = std::move(note);
    return c;
}

CheckRecord CheckRecord::upper_bound(std::string name, double value, double bound,
                                     std::string note) {
    CheckRecord c;
    c.name = std::move(name);
    c.value = value;
    c.target = 0.0;
    c.tolerance = bound;
    c.pass = std::isfinite(value) && value <= bound;
    c.note = std::move(note);
    return c;
}

CheckRecord CheckRecord::boolean(std::string name, bool ok, std::string note) {
    CheckRecord c;
    c.name = std::move(name);
    c.value = ok ? 1.0 : 0.0;
    c.target = 1.0;
    c.tolerance = 0.0;
    c.pass = ok;
    c.note = std::move(note);
    return c;
}

bool DiagnosticsReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

nlohmann::ordered_json DiagnosticsReport::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["params"] = params;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["value"] = c.value;
        cj["target"] = c.target;
        cj["tolerance"] = c.tolerance;
        cj["pass"] = c.pass;
        if (!c.note.empty()) cj["note"] = c.note;
        arr.push_back(cj);
    }
    j["checks"] = arr;
    auto tabs = nlohmann::ordered_json::array();
    for (const auto& t : tables) {
        nlohmann::ordered_json tj;
        tj["name"] = t.name;
        tj["columns"] = t.columns;
        tj["rows"] = t.rows;
        tabs.push_back(tj);
    }
    j["tables"] = tabs;
    j["warnings"] = warnings;
    j["all_pass"] = all_pass();
    j["wall_ms"] = wall_ms;
    return j;
}

DiagnosticsReport DiagnosticsReport::from_json(const nlohmann::ordered_json& j) {
    DiagnosticsReport r;
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params");
    for (const auto& cj : j.at("checks")) {
        CheckRecord c;
        c.name = cj.at("name").get<std::string>();
        c.value = cj.at("value").get<double>();
        c.target = cj.at("target").get<double>();
        c.tolerance = cj.at("tolerance").get<double>();
        c.pass = cj.at("pass").get<bool>();
        if (cj.contains("note")) c.note = cj.at("note").get<std::string>();
        r.checks.push_back(std::move(c));
    }
    for (const auto& tj : j.at("tables")) {
        Table t;
        t.name = tj.at("name").get<std::string>();
        t.columns = tj.at("columns").get<std::vector<std::string>>();
        t.rows = tj.at("rows").get<std::vector<std::vector<double>>>();
        r.tables.push_back(std::move(t));
    }
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    r.wall_ms = j.at("wall_ms").get<double>();
    return r;
}

std::string DiagnosticsReport::stable_dump() const {
    auto j = to_json();
    j["wall_ms"] = 0.0;
    return j.dump(2) + "\n";
}

}  // namespace sector_rkhs::io
