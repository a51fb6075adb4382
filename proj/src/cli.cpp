#include "occ/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "occ/gw.hpp"
#include "occ/serialize.hpp"

namespace occ::cli {

using nlohmann::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PoleAtRestriction:
    case ErrorKind::NonGenericFraming:
    case ErrorKind::OrderTooSmall:
    case ErrorKind::NonHomogeneous:
    case ErrorKind::DivisionByZero:
    case ErrorKind::ZeroWeightSlot:
    case ErrorKind::NonIntegerDegree:
      return Computation;
    default:
      return Validation;
  }
}

namespace {

std::string cone_str(const std::vector<int>& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "}";
}

void print_fan(std::ostream& out, const std::string& name, const Fan& fan) {
  out << name << " rays:\n";
  for (std::size_t i = 0; i < fan.num_rays(); ++i) out << "  " << i << ": " << class_str(fan.rays()[i]) << "\n";
  out << name << " max cones:\n";
  for (std::size_t c = 0; c < fan.cones().size(); ++c) out << "  " << c << ": " << cone_str(fan.cones()[c]) << "\n";
  auto cv = fan.charge_vectors();
  out << name << " charge vectors:\n";
  if (cv.empty()) out << "  none\n";
  for (const auto& v : cv) out << "  " << class_str(v) << "\n";
}

void print_compact_walls(std::ostream& out, const Fan& fan, const KahlerCertificate& k) {
  auto cw = fan.compact_walls();
  if (cw.empty()) {
    out << "no compact walls\n";
    return;
  }
  out << "compact walls:\n";
  for (int w : cw)
    out << "  wall " << w << " " << cone_str(fan.walls()[w].rays) << ": class " << class_str(wall_relation(fan, w))
        << ", kappa " << k.wall_values[w].get_str() << "\n";
}

int cmd_check(const std::string& path, std::ostream& out) {
  RawSpec spec = load_fan_spec(path);
  Normalization n = normalize(spec);
  GeometrySet g = build_geometry(n);
  out << "OK\n";
  out << "framing: " << g.f.get_str() << "\n";
  out << "brane: tau0 = " << cone_str(g.X.walls()[g.tau0_X].rays) << ", sigma0 = " << g.sigma0 << "\n";
  out << "input ray of each normalized ray: " << cone_str(n.perm) << "\n";
  print_fan(out, "X", g.X);
  print_compact_walls(out, g.X, g.kappa_X);
  return Ok;
}

int cmd_construct(const std::string& path, std::ostream& out) {
  GeometrySet g = build_geometry(load_fan_spec(path));
  out << "framing: " << g.f.get_str() << "\n";
  print_fan(out, "Y", g.Y);
  out << "Y divisor ray: " << g.R << "\n";
  print_compact_walls(out, g.Y, g.kappa_Y);
  out << "Y brane wall class: " << class_str(wall_relation(g.Y, g.tau0_Y)) << "\n";
  print_fan(out, "X4", g.X4);
  print_compact_walls(out, g.X4, g.kappa_X4);
  out << "X4 brane wall class: " << class_str(wall_relation(g.X4, g.tau0_X4)) << "\n";
  return Ok;
}

CurveClass parse_beta(const GeometrySet& g, const std::string& beta, const std::string& edges) {
  CurveClass c(g.X.num_rays(), Int(0));
  if (!beta.empty() && !edges.empty()) throw Error(ErrorKind::InvalidSpec, "give --beta or --edges, not both");
  if (!beta.empty()) {
    auto basis = g.X.charge_vectors();
    std::vector<Int> coeffs;
    std::stringstream ss(beta);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      Int x;
      if (x.set_str(tok, 10) != 0) throw Error(ErrorKind::InvalidSpec, "bad coefficient '" + tok + "'");
      coeffs.push_back(x);
    }
    if (coeffs.size() != basis.size())
      throw Error(ErrorKind::InvalidSpec, "expected " + std::to_string(basis.size()) + " coefficients");
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) c[j] += coeffs[i] * basis[i][j];
  }
  if (!edges.empty()) {
    std::stringstream ss(edges);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) throw Error(ErrorKind::InvalidSpec, "edge entry must be wallId:mult");
      Int w, m;
      if (w.set_str(tok.substr(0, colon), 10) != 0 || m.set_str(tok.substr(colon + 1), 10) != 0)
        throw Error(ErrorKind::InvalidSpec, "bad edge entry '" + tok + "'");
      if (w < 0 || w >= (long)g.X.walls().size() || !g.X.walls()[w.get_si()].compact())
        throw Error(ErrorKind::InvalidSpec, "wall " + w.get_str() + " is not a compact wall of X");
      auto l = wall_relation(g.X, (int)w.get_si());
      for (std::size_t j = 0; j < c.size(); ++j) c[j] += m * l[j];
    }
  }
  return c;
}

std::string fmt(const Rat& r, int dec) { return dec >= 0 ? decimal(r, dec) : to_string(r); }

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
    out << "\r\n";
  }
}

int cmd_invariants(const std::string& path, const std::string& beta, const std::string& edges, long winding,
                   const std::string& which, const std::string& format, int dec, std::ostream& out) {
  GeometrySet g = build_geometry(load_fan_spec(path));
  CurveClass bp = parse_beta(g, beta, edges);
  Int d(winding);
  bool all = which == "all";
  std::vector<std::string> header{"beta_prime", "d"};
  std::vector<std::string> row{class_str(bp), d.get_str()};
  json obj{{"d", d.get_str()}};
  json bj = json::array();
  for (const auto& x : bp) bj.push_back(x.get_str());
  obj["beta_prime"] = bj;
  auto add = [&](const std::string& name, const std::string& key, const Rat& v) {
    header.push_back(name);
    row.push_back(fmt(v, dec));
    obj[key] = rat_to_json(v);
  };
  if (all) {
    InvariantReport r = verify(g, bp, d);
    add("disk", "N_disk", r.disk);
    add("relative", "N_rel", r.rel);
    add("closed0", "N_cl0", r.cl0);
    add("closed1", "N_cl1", r.cl1);
    obj = report_to_json(r);
  } else if (which == "disk") {
    add("disk", "N_disk", disk_invariant(g, bp, d));
  } else {
    CurveClass bh = class_X_to_Y(g, bp, d);
    if (which == "relative") {
      add("relative", "N_rel", relative_invariant(g, bh));
    } else {
      CurveClass bt = class_Y_to_X4(g, bh);
      if (which == "closed0") add("closed0", "N_cl0", closed_invariant(g, bt, 0));
      else add("closed1", "N_cl1", closed_invariant(g, bt, 1));
    }
  }
  if (format == "json") out << json::array({obj}).dump(2) << "\n";
  else if (format == "csv") print_csv(out, {header, row});
  else print_table(out, {header, row});
  return Ok;
}

int cmd_verify(const std::string& path, long kdeg, const std::string& format, int dec, std::ostream& out) {
  GeometrySet g = build_geometry(load_fan_spec(path));
  std::vector<std::vector<std::string>> rows{{"beta_prime", "d", "disk", "relative", "closed0", "closed1",
                                              "open_relative", "relative_local", "divisor_relation", "open_closed"}};
  json arr = json::array();
  long failed = 0;
  auto pf = [](bool b) { return std::string(b ? "PASS" : "FAIL"); };
  for (const auto& [bp, d] : classes_up_to(g, kdeg)) {
    InvariantReport r = verify(g, bp, d);
    if (!r.all_pass()) ++failed;
    rows.push_back({class_str(bp), d.get_str(), fmt(r.disk, dec), fmt(r.rel, dec), fmt(r.cl0, dec), fmt(r.cl1, dec),
                    pf(r.open_relative), pf(r.relative_local), pf(r.divisor_relation), pf(r.open_closed)});
    arr.push_back(report_to_json(r));
  }
  if (format == "json") {
    out << arr.dump(2) << "\n";
  } else if (format == "csv") {
    print_csv(out, rows);
  } else {
    print_table(out, rows);
    out << (rows.size() - 1) << " rows, " << failed << " failed\n";
  }
  return failed ? CheckFailed : Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"open/closed correspondence calculator for toric Calabi-Yau threefolds", "occ"};
  app.require_subcommand(1);

  std::string spec, beta, edges, which = "all", format = "text";
  long winding = 1, kdeg = 0;
  int dec = -1;
  auto* check = app.add_subcommand("check", "validate a fan spec and print the normalized fan");
  check->add_option("spec", spec, "FanSpec JSON file")->required();
  auto* construct = app.add_subcommand("construct", "print the relative threefold and the local fourfold");
  construct->add_option("spec", spec, "FanSpec JSON file")->required();
  auto* inv = app.add_subcommand("invariants", "compute invariants of one class");
  inv->add_option("spec", spec, "FanSpec JSON file")->required();
  inv->add_option("--beta", beta, "coefficients in the charge-vector basis, comma separated");
  inv->add_option("--edges", edges, "wallId:mult,... over compact walls of X");
  inv->add_option("--winding", winding, "winding d")->required()->check(CLI::PositiveNumber);
  inv->add_option("--which", which)->check(CLI::IsMember({"disk", "relative", "closed0", "closed1", "all"}));
  inv->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  inv->add_option("--decimal", dec, "print k-digit decimals")->check(CLI::NonNegativeNumber);
  auto* ver = app.add_subcommand("verify", "check the correspondences over a range of classes");
  ver->add_option("spec", spec, "FanSpec JSON file")->required();
  ver->add_option("--max-kdeg", kdeg, "bound on kappa(beta') + d")->required();
  ver->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  ver->add_option("--decimal", dec, "print k-digit decimals")->check(CLI::NonNegativeNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: InvalidArguments: " << e.what() << "\n";
    return Validation;
  }
  try {
    if (*check) return cmd_check(spec, out);
    if (*construct) return cmd_construct(spec, out);
    if (*inv) return cmd_invariants(spec, beta, edges, winding, which, format, dec, out);
    if (*ver) return cmd_verify(spec, kdeg, format, dec, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return Ok;
}

}  // namespace occ::cli
