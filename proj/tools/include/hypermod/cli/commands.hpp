#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypermod/cli/config.hpp"
#include "hypermod/cli/report.hpp"
#include "hypermod/exactnum.hpp"

namespace hypermod::cli {

/// Parses a comma-separated list of rationals, e.g. "1/2,1/3".
std::vector<BigRational> parse_rational_list(const std::string& text);

Report cmd_supercongruence(const std::string& case_id, const RunConfig& cfg);
Report cmd_eigenvalues(const std::string& family_id, const RunConfig& cfg);
Report cmd_lratio(const std::string& id, const std::string& m_range, const RunConfig& cfg);
Report cmd_frobenius(const std::string& upper, const std::string& z, int order,
                     const RunConfig& cfg);
Report cmd_table1(const RunConfig& cfg);
Report cmd_ellcurve(const std::string& family, const std::string& z, bool with_lratio,
                    std::optional<long> conductor, const RunConfig& cfg);
/// z is a rational; eps a decimal.
Report cmd_clausen(const std::string& r, const std::string& z, const std::string& eps,
                   const RunConfig& cfg);
/// The point is |z|·e^{iπ·angle}.
Report cmd_fourier(const std::string& upper, const std::string& modulus, const std::string& angle,
                   int samples, const RunConfig& cfg);
Report cmd_fetch(const std::string& label, const RunConfig& cfg);

/// Runs a command body, mapping exceptions onto the exit-code contract.
Report guarded(const std::string& command, const std::function<Report()>& body);

}  // namespace hypermod::cli
