#include <cstdio>

#include "eisenspec/acceptance.hpp"

int main() {
    using namespace eisenspec::acceptance;
    int failed = 0;
    for (int id = 1; id <= criterion_count(); ++id) {
        const auto r = run_criterion(id);
        std::printf("%s\n", format_line(r).c_str());
        std::fflush(stdout);
        if (!r.passed) ++failed;
    }
    std::printf("%d/%d criteria passed\n", criterion_count() - failed, criterion_count());
    return failed == 0 ? 0 : 1;
}
