// txray: X-ray invariants of Hamiltonian 2-torus spaces, combinatorial
// symplectic cutting, and the Kahler obstruction checker. All documents are
// JSON on files or stdio; all arithmetic is exact.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "txray/txray.hpp"

namespace {

using namespace txray;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::InvalidInput, "cannot read file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    throw Error(ErrorCode::InvalidInput,
                "cannot write file \"" + out_path + "\"");
  out << text;
}

std::vector<Rational> parse_rational_list(const std::string& text,
                                          std::size_t expect) {
  std::vector<Rational> values;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) values.push_back(parse_rational(item));
  if (values.size() != expect)
    throw Error(ErrorCode::InvalidInput,
                "expected " + std::to_string(expect) +
                    " comma-separated rationals, got \"" + text + "\"");
  return values;
}

Lambda parse_lambda(const std::string& text) {
  auto v = parse_rational_list(text, 3);
  return Lambda{v[0], v[1], v[2]};
}

template <int N>
LatticeVector<N> parse_circle(const std::string& text) {
  std::vector<std::int64_t> coords;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    try {
      coords.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput,
                  "bad circle direction component \"" + item + "\"");
    }
  }
  if (coords.size() != N)
    throw Error(ErrorCode::InvalidInput,
                "circle direction needs " + std::to_string(N) +
                    " integer components, got \"" + text + "\"");
  LatticeVector<N> v;
  for (int i = 0; i < N; ++i) v[i] = coords[std::size_t(i)];
  return v;
}

const XRay& expect_xray(const Document& doc, const std::string& path) {
  if (doc.kind != DocumentKind::XRay)
    throw Error(ErrorCode::InvalidInput,
                "\"" + path + "\" is a " + to_string(doc.kind) +
                    " document, expected xray");
  return std::get<XRay>(doc.payload);
}

void emit_doc(const Document& doc, const std::string& out_path) {
  write_output(encode(doc), out_path);
}

struct XrayFlagOpts {
  std::string lambda = "5,1,0";
  std::string out;
};

struct XrayToricOpts {
  std::string file;
  std::string project_x = "1,0,0";
  std::string project_y = "0,1,0";
  std::string out;
};

struct CutOpts {
  std::string chamber_file;
  std::string polytope_file;
  std::string circle;
  std::string level;
  std::string out;
};

struct CheckOpts {
  std::string xray_file;
  std::string out;
};

struct RenderOpts {
  std::string xray_file;
  std::string format = "svg";
  std::string out;
  bool wall = false;
  std::string circle;
  std::string level;
  std::string verdict_file;
};

struct HnOpts {
  int n = 0;
  std::string lambda;
  std::string level;
  std::string emit = "verdict";
  std::string out;
};

void run_xray_flag(const XrayFlagOpts& o) {
  Lambda lambda = parse_lambda(o.lambda);
  XRay x = flag_xray(lambda);
  emit_doc(make_document(std::move(x), "xray flag lambda=" + o.lambda), o.out);
}

void run_xray_toric(const XrayToricOpts& o) {
  Document doc = decode(read_file(o.file));
  if (doc.kind != DocumentKind::Polytope3)
    throw Error(ErrorCode::InvalidInput,
                "\"" + o.file + "\" is a " + to_string(doc.kind) +
                    " document, expected polytope3");
  ToricProjection proj{parse_circle<3>(o.project_x),
                       parse_circle<3>(o.project_y)};
  XRay x = toric_xray(std::get<Polytope3>(doc.payload), proj);
  emit_doc(make_document(std::move(x), "xray toric file=" + o.file), o.out);
}

void run_cut(const CutOpts& o) {
  if (o.chamber_file.empty() == o.polytope_file.empty())
    throw Error(ErrorCode::InvalidInput,
                "cut needs exactly one of --chamber or --polytope");
  Rational level = parse_rational(o.level);
  if (!o.chamber_file.empty()) {
    Document doc = decode(read_file(o.chamber_file));
    if (doc.kind != DocumentKind::Chamber)
      throw Error(ErrorCode::InvalidInput,
                  "\"" + o.chamber_file + "\" is a " + to_string(doc.kind) +
                      " document, expected chamber");
    CutSpec2 spec = make_cut_spec(parse_circle<2>(o.circle), level);
    CutReportU2 report = cut_u2(std::get<ChamberData>(doc.payload), spec);
    emit_doc(make_document(std::move(report.result),
                           "cut chamber=" + o.chamber_file + " circle=" +
                               o.circle + " level=" + o.level),
             o.out);
    return;
  }
  Document doc = decode(read_file(o.polytope_file));
  if (doc.kind != DocumentKind::Polytope3)
    throw Error(ErrorCode::InvalidInput,
                "\"" + o.polytope_file + "\" is a " + to_string(doc.kind) +
                    " document, expected polytope3");
  CutSpec3 spec = make_cut_spec(parse_circle<3>(o.circle), level);
  CutReportDelzant3 report =
      cut_delzant3(std::get<Polytope3>(doc.payload), spec);
  emit_doc(make_document(std::move(report.result),
                         "cut polytope=" + o.polytope_file + " circle=" +
                             o.circle + " level=" + o.level),
           o.out);
}

void run_check(const CheckOpts& o) {
  Document doc = decode(read_file(o.xray_file));
  Verdict verdict = tolman_check(expect_xray(doc, o.xray_file));
  emit_doc(make_document(std::move(verdict), "check xray=" + o.xray_file),
           o.out);
}

void run_render(const RenderOpts& o) {
  Document doc = decode(read_file(o.xray_file));
  const XRay& x = expect_xray(doc, o.xray_file);
  RenderOptions options;
  options.wall = o.wall;
  if (!o.circle.empty() || !o.level.empty()) {
    if (o.circle.empty() || o.level.empty())
      throw Error(ErrorCode::InvalidInput,
                  "cut-line overlay needs both --circle and --level");
    options.cut_line =
        CutLineOverlay{parse_circle<2>(o.circle), parse_rational(o.level)};
  }
  if (!o.verdict_file.empty()) {
    Document vdoc = decode(read_file(o.verdict_file));
    if (vdoc.kind != DocumentKind::Verdict)
      throw Error(ErrorCode::InvalidInput,
                  "\"" + o.verdict_file + "\" is a " + to_string(vdoc.kind) +
                      " document, expected verdict");
    for (const auto& cert : std::get<Verdict>(vdoc.payload).certificates)
      options.highlights.push_back(cert.uncovered_face);
  }
  write_output(render_xray(x, o.format, options), o.out);
}

void run_scenario_m1(const std::string& lambda_text, const std::string& out) {
  XRay x = m1_flag(parse_lambda(lambda_text));
  emit_doc(make_document(std::move(x), "scenario m1 lambda=" + lambda_text),
           out);
}

void run_scenario_m2(const std::string& emit, const std::string& out) {
  if (emit == "polytope3") {
    emit_doc(make_document(m2_polytope(), "scenario m2 polytope"), out);
  } else if (emit == "xray") {
    emit_doc(make_document(m2_toric().xray, "scenario m2 xray"), out);
  } else {
    throw Error(ErrorCode::InvalidInput,
                "scenario m2 --emit must be xray or polytope3");
  }
}

void run_scenario_gc(const std::string& lambda_text, const std::string& out) {
  ChamberData cd = gelfand_cetlin(parse_lambda(lambda_text));
  emit_doc(make_document(std::move(cd), "scenario gc lambda=" + lambda_text),
           out);
}

void run_scenario_hn(const HnOpts& o) {
  HnParams params = HnParams::defaults(o.n);
  if (!o.lambda.empty()) params.lambda = parse_lambda(o.lambda);
  if (!o.level.empty()) params.level = parse_rational(o.level);
  HirzebruchResult result = hirzebruch(params);
  std::string provenance = "scenario hn n=" + std::to_string(o.n);
  if (o.emit == "verdict")
    emit_doc(make_document(std::move(result.verdict), provenance), o.out);
  else if (o.emit == "xray")
    emit_doc(make_document(std::move(result.xray), provenance), o.out);
  else if (o.emit == "chamber")
    emit_doc(make_document(std::move(result.chamber), provenance), o.out);
  else
    throw Error(ErrorCode::InvalidInput,
                "scenario hn --emit must be verdict, xray, or chamber");
}

void run_scenario_sweep(int from, int to, const std::string& out) {
  std::vector<SweepRow> rows = hn_sweep(from, to);
  emit_doc(make_document(std::move(rows),
                         "scenario sweep from=" + std::to_string(from) +
                             " to=" + std::to_string(to)),
           out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact X-ray invariants, symplectic cuts, and Kahler "
               "obstruction certificates for Hamiltonian 2-torus spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", txray::tool_string());

  // xray
  auto* xray_cmd = app.add_subcommand("xray", "build an X-ray document");
  xray_cmd->require_subcommand(1);
  XrayFlagOpts flag_opts;
  auto* flag_cmd =
      xray_cmd->add_subcommand("flag", "X-ray of the flag orbit of lambda");
  flag_cmd->add_option("--lambda", flag_opts.lambda,
                       "strictly decreasing rationals a,b,c");
  flag_cmd->add_option("--out", flag_opts.out, "output file (default stdout)");
  flag_cmd->callback([&] { run_xray_flag(flag_opts); });

  XrayToricOpts toric_opts;
  auto* toric_cmd = xray_cmd->add_subcommand(
      "toric", "X-ray of a Delzant 3-polytope document");
  toric_cmd->add_option("--file", toric_opts.file, "polytope3 document")
      ->required();
  toric_cmd->add_option("--project-x", toric_opts.project_x,
                        "first projection row (integers)");
  toric_cmd->add_option("--project-y", toric_opts.project_y,
                        "second projection row (integers)");
  toric_cmd->add_option("--out", toric_opts.out, "output file");
  toric_cmd->callback([&] { run_xray_toric(toric_opts); });

  // cut
  CutOpts cut_opts;
  auto* cut_cmd = app.add_subcommand(
      "cut", "equivariant symplectic cut of a chamber or a 3-polytope");
  cut_cmd->add_option("--chamber", cut_opts.chamber_file, "chamber document");
  cut_cmd->add_option("--polytope", cut_opts.polytope_file,
                      "polytope3 document");
  cut_cmd->add_option("--circle", cut_opts.circle,
                      "primitive circle direction, e.g. 1,2")
      ->required();
  cut_cmd->add_option("--level", cut_opts.level, "rational cut level")
      ->required();
  cut_cmd->add_option("--out", cut_opts.out, "output file");
  cut_cmd->callback([&] { run_cut(cut_opts); });

  // check
  CheckOpts check_opts;
  auto* check_cmd = app.add_subcommand(
      "check", "decide Tolman's necessary Kahler condition on an X-ray");
  check_cmd->add_option("--xray", check_opts.xray_file, "xray document")
      ->required();
  check_cmd->add_option("--out", check_opts.out, "output file");
  check_cmd->callback([&] { run_check(check_opts); });

  // scenario
  auto* scen_cmd = app.add_subcommand("scenario", "built-in example spaces");
  scen_cmd->require_subcommand(1);

  std::string m1_lambda = "5,1,0";
  std::string m1_out;
  auto* m1_cmd = scen_cmd->add_subcommand("m1", "generic flag orbit");
  m1_cmd->add_option("--lambda", m1_lambda, "orbit parameter");
  m1_cmd->add_option("--out", m1_out, "output file");
  m1_cmd->callback([&] { run_scenario_m1(m1_lambda, m1_out); });

  std::string m2_emit = "xray";
  std::string m2_out;
  auto* m2_cmd = scen_cmd->add_subcommand("m2", "toric example");
  m2_cmd->add_option("--emit", m2_emit, "xray | polytope3");
  m2_cmd->add_option("--out", m2_out, "output file");
  m2_cmd->callback([&] { run_scenario_m2(m2_emit, m2_out); });

  std::string gc_lambda = "5,1,0";
  std::string gc_out;
  auto* gc_cmd = scen_cmd->add_subcommand(
      "gc", "Gelfand-Cetlin chamber data of the flag orbit");
  gc_cmd->add_option("--lambda", gc_lambda, "orbit parameter");
  gc_cmd->add_option("--out", gc_out, "output file");
  gc_cmd->callback([&] { run_scenario_gc(gc_lambda, gc_out); });

  HnOpts hn_opts;
  auto* hn_cmd =
      scen_cmd->add_subcommand("hn", "generalized Hirzebruch space H_n");
  hn_cmd->add_option("--n", hn_opts.n, "family parameter")->required();
  hn_cmd->add_option("--lambda", hn_opts.lambda,
                     "override the default orbit parameter");
  hn_cmd->add_option("--level", hn_opts.level, "override the cut level");
  hn_cmd->add_option("--emit", hn_opts.emit, "verdict | xray | chamber");
  hn_cmd->add_option("--out", hn_opts.out, "output file");
  hn_cmd->callback([&] { run_scenario_hn(hn_opts); });

  int sweep_from = 0, sweep_to = 0;
  std::string sweep_out;
  auto* sweep_cmd =
      scen_cmd->add_subcommand("sweep", "verdict table over a range of n");
  sweep_cmd->add_option("--from", sweep_from, "first n")->required();
  sweep_cmd->add_option("--to", sweep_to, "last n")->required();
  sweep_cmd->add_option("--out", sweep_out, "output file");
  sweep_cmd->callback([&] { run_scenario_sweep(sweep_from, sweep_to, sweep_out); });

  // render
  RenderOpts render_opts;
  auto* render_cmd =
      app.add_subcommand("render", "draw an X-ray diagram (SVG or ASCII)");
  render_cmd->add_option("--xray", render_opts.xray_file, "xray document")
      ->required();
  render_cmd->add_option("--format", render_opts.format, "svg | ascii");
  render_cmd->add_option("--out", render_opts.out, "output file");
  render_cmd->add_flag("--wall", render_opts.wall, "overlay the Weyl wall");
  render_cmd->add_option("--circle", render_opts.circle,
                         "cut-line overlay direction");
  render_cmd->add_option("--level", render_opts.level,
                         "cut-line overlay level");
  render_cmd->add_option("--verdict", render_opts.verdict_file,
                         "verdict document; highlights uncovered faces");
  render_cmd->callback([&] { run_render(render_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const txray::Error& e) {
    Json data = Json::object();
    for (const auto& [k, v] : e.data()) data[k] = v;
    Json err{{"error",
              Json{{"code", std::string(to_string(e.code()))},
                   {"message", e.what()},
                   {"data", data}}}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err{{"error", Json{{"code", "Internal"}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 70;
  }
  return 0;
}
