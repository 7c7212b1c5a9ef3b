#pragma once

#include <string>
#include <vector>

#include "mufold/mapgerm.hpp"
#include "mufold/puiseux.hpp"
#include "mufold/report.hpp"

namespace mufold {

// Runs one subcommand from argv-style arguments (program name excluded).
// Never throws: failures come back in the report with the mapped exit code.
Report run_command(const std::vector<std::string>& args);

// run + print (text, or JSON when --json is among the arguments)
int main_entry(int argc, char** argv);

// input helpers, shared with the test suites
PuiseuxBranch parse_branch_spec(const std::string& spec); // "<m>:<expr in u>"
PlaneCurveGerm parse_curve_file(const std::string& path); // one branch per line
CorankOneGerm parse_germ_spec(const std::string& spec);   // "<p>|<q>"

} // namespace mufold
