#include "sector_rkhs/csv.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace sector_rkhs::io {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_number(const std::string& s, int lineno) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = b + s.size();
    while (b < e && (*b == ' ' || *b == '\t')) ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    while (p < e && (*p == ' ' || *p == '\t')) ++p;
    if (ec != std::errc() || p != e)
        throw CsvError("csv: non-numeric field '" + s + "' at line " +
                       std::to_string(lineno));
    return v;
}

}  // namespace

SignalCsv read_signal_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CsvError("csv: cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw CsvError("csv: empty file '" + path + "'");
    auto header = split_fields(line);
    const bool has_im = header.size() == 3;
    if (!(header.size() == 2 || has_im) || header[0] != "tau" ||
        header[1] != "g_re" || (has_im && header[2] != "g_im"))
        throw CsvError("csv: expected header 'tau,g_re[,g_im]' in '" + path + "'");
    SignalCsv out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto f = split_fields(line);
        if (f.size() != header.size())
            throw CsvError("csv: wrong field count at line " + std::to_string(lineno));
        const double tau = parse_number(f[0], lineno);
        const double re = parse_number(f[1], lineno);
        const double im = has_im ? parse_number(f[2], lineno) : 0.0;
        if (!out.tau.empty() && !(tau > out.tau.back()))
            throw CsvError("csv: tau not strictly increasing at line " +
                           std::to_string(lineno));
        out.tau.push_back(tau);
        out.g.emplace_back(re, im);
    }
    if (out.tau.size() < 2) throw CsvError("csv: need at least 2 samples in '" + path + "'");
    return out;
}

std::string format_double(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << content;
    }
    fs::rename(tmp, target);
}

}  // namespace sector_rkhs::io
