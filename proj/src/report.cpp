#include "gz/report.hpp"

#include <chrono>
#include <ctime>

#include "gz/version.hpp"

namespace gz {

ordered_json json_complex(cplx v) {
    return ordered_json{{"re", v.real()}, {"im", v.imag()}};
}

std::string iso_utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ordered_json make_envelope(const std::string& command, ordered_json config_echo,
                           ordered_json payload, bool with_timestamp) {
    ordered_json env;
    env["tool_version"] = kToolVersion;
    env["schema_version"] = kReportSchemaVersion;
    env["command"] = command;
    env["config_echo"] = std::move(config_echo);
    env["payload"] = std::move(payload);
    if (with_timestamp) env["timestamp"] = iso_utc_now();
    return env;
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
    }
    return out;
}

std::string csv_number(double v) { return ordered_json(v).dump(); }

}  // namespace gz
