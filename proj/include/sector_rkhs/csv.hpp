#ifndef SECTOR_RKHS_CSV_HPP
#define SECTOR_RKHS_CSV_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace sector_rkhs::io {

using cplx = std::complex<double>;

/// Malformed input (missing header, non-numeric fields, unsorted abscissae).
struct CsvError : std::runtime_error {
    explicit CsvError(const std::string& what) : std::runtime_error(what) {}
};

/// Boundary-data file: header `tau,g_re[,g_im]`, one sample per line,
/// strictly increasing tau. UTF-8, LF, decimal-point floats.
struct SignalCsv {
    std::vector<double> tau;
    std::vector<cplx> g;
};
SignalCsv read_signal_csv(const std::string& path);

/// Shortest-exact double formatting (round-trips bit-exactly).
std::string format_double(double v);

/// Writes atomically: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace sector_rkhs::io

#endif  // SECTOR_RKHS_CSV_HPP
