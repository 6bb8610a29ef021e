#pragma once

// Shared bits for the test binaries: fixture paths, running the CLI and
// capturing its output, and a structural lattice comparison that ignores
// the presentation name.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

#include "wlat/lattice.hpp"

inline std::string fixture_path(const std::string& name) {
    return std::string(WLAT_FIXTURES_DIR) + "/" + name;
}

struct CliRun {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

inline CliRun run_cli(const std::string& args) {
    std::string cmd = std::string(WLAT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    CliRun r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Equality of everything but the name.  Node/arrow ids are positional, so
// two presentations compare equal only when they list things identically.
inline bool same_presentation(const wlat::Lattice& a, const wlat::Lattice& b) {
    if (a.nodes != b.nodes || a.init != b.init || a.fin != b.fin) return false;
    if (a.arrows.size() != b.arrows.size()) return false;
    for (size_t i = 0; i < a.arrows.size(); ++i) {
        if (a.arrows[i].name != b.arrows[i].name || a.arrows[i].src != b.arrows[i].src ||
            a.arrows[i].dst != b.arrows[i].dst)
            return false;
    }
    if (a.relations.size() != b.relations.size()) return false;
    for (size_t i = 0; i < a.relations.size(); ++i) {
        if (a.relations[i].lhs != b.relations[i].lhs || a.relations[i].rhs != b.relations[i].rhs)
            return false;
    }
    return a.null_marks == b.null_marks && a.strict_marks == b.strict_marks;
}

inline int count_occurrences(const std::string& text, const std::string& needle) {
    int n = 0;
    for (size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
    return n;
}
