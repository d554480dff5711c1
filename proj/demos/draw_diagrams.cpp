// Renders the three classic X-ray diagrams as SVG files.
// Usage: draw_diagrams [output-directory]

#include <fstream>
#include <iostream>
#include <string>

#include "txray/render.hpp"
#include "txray/scenarios.hpp"

using namespace txray;

namespace {

void write(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  std::cout << "wrote " << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : ".";

  RenderOptions wall_only;
  wall_only.wall = true;
  write(dir + "/m1.svg", render_svg(m1_flag(), wall_only));
  write(dir + "/m2.svg", render_svg(m2_toric().xray, wall_only));

  HirzebruchResult m3 = tolman_m3();
  RenderOptions with_certs;
  with_certs.wall = true;
  with_certs.cut_line = CutLineOverlay{Vec2{{1, 2}}, rat(4)};
  for (const auto& cert : m3.verdict.certificates)
    with_certs.highlights.push_back(cert.uncovered_face);
  write(dir + "/m3.svg", render_svg(m3.xray, with_certs));

  std::cout << "\n" << render_ascii(m3.xray) << "\n";
  return 0;
}
