// One line per acceptance criterion. Rows listed in expected_red_rows()
// are reported but do not change the exit status.

#include <algorithm>
#include <cstdio>

#include "endotriv/suite.hpp"

int main() {
  const auto red = endotriv::expected_red_rows();
  int unexpected = 0;
  endotriv::acceptance_suite([&](const endotriv::SuiteRow& r) {
    const bool known = std::find(red.begin(), red.end(), r.id) != red.end();
    std::printf("%s %2d  %s  [%.2fs] %s%s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.detail.c_str(), !r.pass && known ? " (known red)" : "");
    std::fflush(stdout);
    if (!r.pass && !known) ++unexpected;
  });
  return unexpected == 0 ? 0 : 1;
}
