// Command-line front end: builds the association schemes of the two
// prime-power-pair families, verifies their identities exactly, and emits
// reports as JSON, CSV, or readable text.
//
// Exit codes: 0 all requested verifications pass, 1 a verification failed,
// 2 invalid input, 3 I/O failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pairscheme/runner.hpp"

namespace {

using namespace pairscheme;

std::vector<AuxLabel> parse_phi_file(const std::string& path, long r, long q) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open phi mapping file '" + path + "'");
  std::vector<AuxLabel> varphi(static_cast<std::size_t>(r), AuxLabel::x());
  std::vector<int> assigned(static_cast<std::size_t>(r), 0);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string src, dst;
    if (!std::getline(ls, src, ',') || !std::getline(ls, dst))
      throw std::invalid_argument("phi file: malformed line '" + line + "'");
    long b = std::stol(src);
    if (b < 0 || b >= r) throw std::invalid_argument("phi file: source index out of range in '" + line + "'");
    if (assigned[static_cast<std::size_t>(b)]++) throw std::invalid_argument("phi file: duplicate source " + src);
    if (dst == "x")
      varphi[static_cast<std::size_t>(b)] = AuxLabel::x();
    else if (dst == "y")
      varphi[static_cast<std::size_t>(b)] = AuxLabel::y();
    else {
      long e = std::stol(dst);
      if (e < 0 || e >= q) throw std::invalid_argument("phi file: target index out of range in '" + line + "'");
      varphi[static_cast<std::size_t>(b)] = AuxLabel::element(e);
    }
  }
  for (int a : assigned)
    if (!a) throw std::invalid_argument("phi file: not every element is assigned");
  return varphi;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cyc_csv(const Json& entry) {
  std::string out = std::to_string(entry.at("order").get<long>()) + ":";
  bool first = true;
  for (const auto& c : entry.at("coeffs")) {
    if (!first) out += ";";
    out += c.get<std::string>();
    first = false;
  }
  return out;
}

void csv_check_section(std::ostream& os, const std::string& section, const Json& clauses) {
  for (const auto& c : clauses) {
    os << section << "," << csv_escape(c.at("name").get<std::string>()) << "," << (c.at("ok").get<bool>() ? 1 : 0);
    if (!c.at("witness").is_null()) {
      const auto& w = c.at("witness");
      os << "," << w.at("row").get<long>() << "," << w.at("col").get<long>() << ","
         << csv_escape(w.at("lhs").get<std::string>()) << "," << csv_escape(w.at("rhs").get<std::string>());
    }
    os << "\n";
  }
}

void emit_csv(std::ostream& os, const Json& report) {
  if (report.contains("rows")) {  // sweep
    os << "q,vertices,classes,ok,elapsed_ms\n";
    for (const auto& row : report.at("rows"))
      os << row.at("q").get<long>() << "," << row.at("vertices").get<long>() << "," << row.at("classes").get<long>()
         << "," << (row.at("ok").get<bool>() ? 1 : 0) << "," << row.at("elapsed_ms").get<double>() << "\n";
    return;
  }
  os << "section,name,ok,row,col,lhs,rhs\n";
  if (report.contains("axioms")) csv_check_section(os, "axioms", report.at("axioms"));
  if (report.contains("incidence_identities")) csv_check_section(os, "identities", report.at("incidence_identities"));
  if (report.contains("designs") && report.at("designs").is_array() && !report.at("designs").empty() &&
      report.at("designs")[0].contains("name"))
    csv_check_section(os, "designs", report.at("designs"));
  else if (report.contains("designs"))
    for (const auto& d : report.at("designs"))
      os << "designs,beta=" << d.at("beta").get<std::string>() << "," << (d.at("ok").get<bool>() ? 1 : 0) << "\n";
  if (report.contains("difference_set")) {
    const auto& ds = report.at("difference_set");
    os << "difference_set,(" << ds.at("v").get<long>() << ";" << ds.at("k").get<long>() << ";"
       << ds.at("lambda").get<long>() << ")," << (ds.at("verified").get<bool>() ? 1 : 0) << "\n";
  }
  if (report.contains("eigen")) {
    const auto& m = report.at("eigen").at("matrix");
    for (const auto& row : m.at("rows")) {
      os << "eigen," << csv_escape(row.at("label").get<std::string>()) << "," << row.at("multiplicity").get<long>();
      for (const auto& e : row.at("entries")) os << "," << csv_escape(cyc_csv(e));
      os << "\n";
    }
  }
}

void emit_pretty(std::ostream& os, const Json& report) {
  if (report.contains("rows")) {  // sweep
    os << "family " << report.at("family").get<std::string>() << ", q <= " << report.at("max_q").get<long>() << "\n";
    os << "  q  vertices  classes  ok  elapsed_ms\n";
    for (const auto& row : report.at("rows")) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "%3ld  %8ld  %7ld  %s  %10.1f\n", row.at("q").get<long>(),
                    row.at("vertices").get<long>(), row.at("classes").get<long>(),
                    row.at("ok").get<bool>() ? "ok" : "FAIL", row.at("elapsed_ms").get<double>());
      os << buf;
    }
    return;
  }
  os << "family " << report.at("family").get<std::string>() << ", q=" << report.at("q").get<long>();
  if (report.contains("vertices")) os << ", " << report.at("vertices").get<long>() << " vertices";
  if (report.contains("classes")) os << ", " << report.at("classes").get<long>() << " classes";
  os << "\n";
  if (report.contains("phi")) {
    os << "phi:";
    for (const auto& [k, v] : report.at("phi").items()) os << " " << k << "->" << v.get<std::string>();
    os << "\n";
  }
  auto print_checks = [&](const char* title, const Json& clauses) {
    os << title << ":\n";
    for (const auto& c : clauses) {
      os << "  " << c.at("name").get<std::string>() << ": " << (c.at("ok").get<bool>() ? "ok" : "FAIL");
      if (!c.at("witness").is_null()) {
        const auto& w = c.at("witness");
        os << "  [at (" << w.at("row").get<long>() << "," << w.at("col").get<long>() << "): "
           << w.at("lhs").get<std::string>() << " vs " << w.at("rhs").get<std::string>() << "]";
      }
      os << "\n";
    }
  };
  if (report.contains("incidence_identities")) print_checks("incidence identities", report.at("incidence_identities"));
  if (report.contains("designs")) {
    if (report.at("designs").is_array() && !report.at("designs").empty() && report.at("designs")[0].contains("beta")) {
      os << "designs:\n";
      for (const auto& d : report.at("designs")) {
        os << "  beta=" << d.at("beta").get<std::string>() << " (";
        bool first = true;
        for (const auto& p : d.at("params")) {
          if (!first) os << ",";
          os << p.get<long>();
          first = false;
        }
        os << "): " << (d.at("ok").get<bool>() ? "ok" : "FAIL") << "\n";
      }
    } else {
      print_checks("designs", report.at("designs"));
    }
  }
  if (report.contains("difference_set")) {
    const auto& ds = report.at("difference_set");
    os << "difference set: (" << ds.at("v").get<long>() << "," << ds.at("k").get<long>() << ","
       << ds.at("lambda").get<long>() << ") " << (ds.at("verified").get<bool>() ? "ok" : "FAIL") << "\n";
  }
  if (report.contains("axioms")) {
    print_checks("axioms", report.at("axioms"));
    os << "symmetric: " << (report.at("symmetric").get<bool>() ? "yes" : "no") << "\n";
  }
  if (report.contains("eigen")) {
    const auto& eig = report.at("eigen");
    const auto& m = eig.at("matrix");
    os << "first eigenmatrix (order " << m.at("order").get<long>() << "):\n";
    os << "  columns:";
    for (const auto& c : m.at("columns")) os << " " << c.get<std::string>();
    os << "\n";
    for (const auto& row : m.at("rows")) {
      os << "  " << row.at("label").get<std::string>() << " [m=" << row.at("multiplicity").get<long>() << "]";
      for (const auto& e : row.at("entries")) {
        Cyclotomic c = cyclotomic_from_json(e);
        os << "  " << c.str();
        if (!c.is_rational()) os << " (" << c.approx(6) << ")";  // decimal column for the surd entries
      }
      os << "\n";
    }
    if (eig.contains("closed_form_match"))
      os << "closed-form match: " << (eig.at("closed_form_match").get<bool>() ? "ok" : "FAIL") << "\n";
    if (eig.contains("multiplicities_ok"))
      os << "multiplicities: " << (eig.at("multiplicities_ok").get<bool>() ? "ok" : "FAIL") << "\n";
    if (eig.contains("self_dual"))
      os << "self-dual witness: " << (eig.at("self_dual").at("found").get<bool>() ? "found" : "NONE") << "\n";
  }
  os << (report.at("ok").get<bool>() ? "all requested checks passed" : "SOME CHECKS FAILED") << "\n";
}

int emit(const Json& report, const std::string& format, const std::string& out_path) {
  std::ostringstream body;
  if (format == "json")
    body << report.dump(2) << "\n";
  else if (format == "csv")
    emit_csv(body, report);
  else
    emit_pretty(body, report);
  if (out_path.empty()) {
    std::cout << body.str();
    return 0;
  }
  std::ofstream out(out_path);
  out << body.str();
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 3;
  }
  return 0;
}

struct FamilyArgs {
  long q = 0;
  std::string verify;
  bool eigen = false;
  bool selfdual = false;
  bool timings = false;
  bool approx = false;
  std::string format = "pretty";
  std::string out;
  std::string phi_file;
};

void add_family_flags(CLI::App* cmd, FamilyArgs& args, bool with_phi) {
  cmd->add_option("--q", args.q, "field size q of the pair")->required();
  cmd->add_option("--verify", args.verify, "axioms, designs, props, or all")
      ->check(CLI::IsMember({"axioms", "designs", "props", "all"}));
  cmd->add_flag("--eigen", args.eigen, "compute the first eigenmatrix");
  cmd->add_flag("--selfdual", args.selfdual, "search for a self-duality witness");
  cmd->add_flag("--timings", args.timings, "include elapsed time in the report");
  cmd->add_flag("--approx", args.approx, "add decimal approximations to eigenmatrix entries");
  cmd->add_option("--format", args.format, "json, csv, or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  cmd->add_option("--out", args.out, "write the report to a file instead of stdout");
  if (with_phi) cmd->add_option("--phi", args.phi_file, "custom bijection as two-column CSV (index,target)");
}

int run_family(const std::string& family, const FamilyArgs& args) {
  RunRequest req;
  req.family = family;
  req.q = args.q;
  if (args.verify == "axioms") req.do_axioms = true;
  if (args.verify == "designs") req.do_designs = true;
  if (args.verify == "props") req.do_props = true;
  if (args.verify == "all") req.do_axioms = req.do_designs = req.do_props = req.do_eigen = req.do_selfdual = true;
  req.do_eigen = req.do_eigen || args.eigen;
  req.do_selfdual = req.do_selfdual || args.selfdual;
  req.timings = args.timings;
  req.approx = args.approx;
  if (!args.phi_file.empty()) {
    long r = args.q + (family == "twin" ? 2 : 1);
    req.varphi = parse_phi_file(args.phi_file, r, args.q);
  }
  auto result = run(req);
  int io = emit(result.report, args.format, args.out);
  if (io) return io;
  return result.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction and verification of association schemes from prime-power pairs"};
  app.require_subcommand(1);

  FamilyArgs twin_args, gdd_args, intro_args;
  auto* twin_cmd = app.add_subcommand("twin", "the (q, q+2) family: symmetric designs, q+3 classes");
  add_family_flags(twin_cmd, twin_args, true);
  auto* gdd_cmd = app.add_subcommand("gdd", "the (q, q+1) family: group divisible designs, q+4 classes");
  add_family_flags(gdd_cmd, gdd_args, true);
  auto* intro_cmd = app.add_subcommand("intro", "the quadratic-character scheme on F_q x F_{q+2}");
  add_family_flags(intro_cmd, intro_args, false);

  std::string sweep_family = "twin", sweep_format = "pretty", sweep_out;
  long max_q = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "run full verification for every valid q up to --max-q");
  sweep_cmd->add_option("--family", sweep_family, "twin, gdd, or intro")
      ->check(CLI::IsMember({"twin", "gdd", "intro"}));
  sweep_cmd->add_option("--max-q", max_q, "largest q to try")->required();
  sweep_cmd->add_option("--format", sweep_format, "json, csv, or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  sweep_cmd->add_option("--out", sweep_out, "write the report to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (twin_cmd->parsed()) return run_family("twin", twin_args);
    if (gdd_cmd->parsed()) return run_family("gdd", gdd_args);
    if (intro_cmd->parsed()) return run_family("intro", intro_args);
    if (sweep_cmd->parsed()) {
      if (max_q < 1) {
        std::cerr << "error: --max-q must be positive\n";
        return 2;
      }
      Json report = pairscheme::sweep(sweep_family, max_q);
      int io = emit(report, sweep_format, sweep_out);
      if (io) return io;
      return report.at("ok").get<bool>() ? 0 : 1;
    }
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
