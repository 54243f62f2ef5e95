#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "abelp/budget.hpp"
#include "abelp/group.hpp"

namespace abelp {

enum ExitCode : int {
  kExitOk = 0,
  kExitUnexpectedRefutation = 1,
  kExitInvalidInput = 2,
  kExitBudget = 3,
};

/// |E|, the ideal count when |E| fits max_ideal_ring, and one row per fully
/// invariant subgroup H: its order, the size of the dagger-inverse class,
/// the order of H-dagger and the number of closed ideals in the class.
nlohmann::json endo_report(const GroupSpec& spec, const Budget& budget);
std::string endo_report_text(const nlohmann::json& report);

/// Full command line, argv[0] excluded. Output goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abelp
