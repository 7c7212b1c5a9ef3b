#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace mufold {

// Structured result of one CLI invocation. The JSON form is deterministic:
// object keys are sorted and every polynomial is printed in its canonical
// graded-lex order, so reports diff cleanly.
struct Report {
    std::string command;
    std::vector<std::string> argv; // the invocation, echoed back
    nlohmann::json result = nlohmann::json::object();
    std::vector<std::string> text;
    int exit_code = 0;
    std::string error;         // machine-readable error code name
    std::string error_message; // human-readable detail

    bool ok() const { return exit_code == 0; }
    std::string render_text() const;
    std::string render_json() const;
};

} // namespace mufold
