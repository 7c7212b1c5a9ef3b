#include "mufold/report.hpp"

#include <sstream>

namespace mufold {

std::string Report::render_text() const {
    std::ostringstream os;
    if (!ok()) {
        os << "error[" << error << "]: " << error_message << '\n';
        return os.str();
    }
    for (const auto& line : text) os << line << '\n';
    return os.str();
}

std::string Report::render_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["argv"] = argv;
    j["status"] = ok() ? "ok" : "error";
    if (!ok()) {
        j["error"] = error;
        j["message"] = error_message;
        j["exit_code"] = exit_code;
    } else {
        j["result"] = result;
    }
    return j.dump(2) + "\n";
}

} // namespace mufold
