#ifndef GEGCHAIN_TOOLS_ENVELOPE_HPP
#define GEGCHAIN_TOOLS_ENVELOPE_HPP

#include <cstddef>
#include <string>

#include <json.hpp>

namespace gegchain::cli {

inline constexpr const char* format_version = "1.0.0";

/// Every subcommand produces the same envelope shape:
/// { command, format_version, index_base: 0, params, provenance,
///   payload_columns, payload }. Output is deterministic for identical
/// inputs and version.
using Envelope = nlohmann::json;

Envelope cmd_table1(std::size_t n_max, double a, double tol, int jobs);
Envelope cmd_fig1(std::size_t samples, double g_min, double g_max, std::size_t n, double a);
Envelope cmd_dump(const std::string& object, std::size_t n, double a);
Envelope cmd_residual(const std::string& object, std::size_t n, double a);
Envelope cmd_boundary(std::size_t n, double a, int max_negatives, double tol);

/// RFC-4180-style CSV rendering of an envelope's payload table.
std::string to_csv(const Envelope& env);

} // namespace gegchain::cli

#endif
