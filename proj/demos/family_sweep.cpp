// Walks the generalized Hirzebruch family and prints the verdict table,
// with certificate details for the obstructed members.

#include <iostream>

#include "txray/scenarios.hpp"

using namespace txray;

int main() {
  std::cout << "n   verdict        certificates\n";
  for (const SweepRow& row : hn_sweep(-3, 5)) {
    std::cout << (row.n < 0 ? "" : " ") << row.n << "  "
              << (row.verdict.obstruction_found ? "obstructed   "
                                                : "no obstruction")
              << "  " << row.verdict.certificates.size() << "\n";
  }

  HirzebruchResult m3 = tolman_m3();
  std::cout << "\nn=2 certificates (cone apex, uncovered face):\n";
  for (const auto& cert : m3.verdict.certificates) {
    std::cout << "  " << to_string(cert.candidate.base) << "  "
              << to_string(cert.uncovered_face.a) << "-"
              << to_string(cert.uncovered_face.b) << "\n";
  }
  return 0;
}
