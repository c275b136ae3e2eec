#ifndef SECTOR_RKHS_VERIFY_HPP
#define SECTOR_RKHS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sector_rkhs/diagnostics.hpp"

namespace sector_rkhs::verify {

/// Shared knobs for the verification suites. The seed drives every
/// randomized point set, and is echoed in the report so failures replay.
struct SuiteConfig {
    std::uint64_t seed = 20250808;
    double t = 1.0;
};

io::DiagnosticsReport specfun_suite(const SuiteConfig& cfg = {});
io::DiagnosticsReport kernel_suite(const SuiteConfig& cfg = {});
io::DiagnosticsReport transform_suite(const SuiteConfig& cfg = {});
io::DiagnosticsReport rkhs_suite(const SuiteConfig& cfg = {});
io::DiagnosticsReport inverse_suite(const SuiteConfig& cfg = {});
io::DiagnosticsReport pde_suite(const SuiteConfig& cfg = {});

/// All suites in a fixed order. Names: specfun, kernel, transform, rkhs,
/// inverse, pde.
std::vector<std::string> suite_names();
io::DiagnosticsReport run_suite(const std::string& name, const SuiteConfig& cfg = {});

}  // namespace sector_rkhs::verify

#endif  // SECTOR_RKHS_VERIFY_HPP
