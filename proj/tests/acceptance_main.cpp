// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <string>

#include "lzcrystal/acceptance.hpp"

int main(int argc, char** argv) {
    const std::string only = argc > 1 ? argv[1] : "";
    const auto results = lzc::acceptance::run_all(only);
    bool all_pass = !results.empty();
    for (const auto& r : results) {
        std::printf("%s criterion %2d %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.empty() ? "" : ": ", r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}
