#pragma once

// Runs the command-line tool and captures its standard output.

#include <sys/wait.h>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace process {

struct Run {
    int status = -1;
    std::string out;
};

inline Run run(const std::string& exe, const std::string& args) {
    const std::string cmd = exe + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (p == nullptr) throw std::runtime_error("cannot start " + exe);
    Run r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace process
