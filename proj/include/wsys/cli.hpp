#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wsys/io.hpp"
#include "wsys/report.hpp"

namespace wsys {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitRequiredNo = 1, kExitToolError = 2 };

/// Build a generator input from `name[:key=value,...]`, e.g.
/// `lattice:R=10,m=4`, `a_k:k=2,R=8,m=3`, `hex_torus:p=4,q=4`, `octahedron`.
/// Radius and margin overrides apply to window generators.
ComplexFile generate_input(const std::string& spec, std::optional<Hops> radius = std::nullopt,
                           std::optional<Hops> margin = std::nullopt);

/// Names accepted by `generate_input`.
std::vector<std::string> generator_names();

/// Check names accepted by `check`.
const std::vector<std::string>& check_names();

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wsys
