// Small helpers shared by the process-level tests.

#pragma once

#include <array>
#include <cstdio>
#include <string>

namespace support {

struct CommandResult {
    std::string output; // stdout only
    int exit_code = -1;
};

inline CommandResult run_command(const std::string& cmd) {
    CommandResult r;
    FILE* pipe = ::popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    int status = ::pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

} // namespace support
