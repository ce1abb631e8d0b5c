#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gln/encode.hpp"
#include "gln/errors.hpp"
#include "gln/jsonio.hpp"
#include "gln/ktheory.hpp"
#include "gln/textio.hpp"

namespace {

using namespace gln;

struct Options {
  std::string format = "table";
  std::string cache_dir;
  int max_points = 12;
};

std::string cache_file(const Options& opt) {
  return (std::filesystem::path(opt.cache_dir) / "klcache.txt").string();
}

GuardOptions guard_of(const Options& opt) {
  GuardOptions guard;
  guard.max_points_per_line = opt.max_points;
  return guard;
}

void load_cache_into(Workspace& ws, const Options& opt) {
  if (opt.cache_dir.empty()) return;
  std::string f = cache_file(opt);
  if (std::filesystem::exists(f)) ws.kl().load_cache(f);
}

void finish(Workspace& ws, const Options& opt) {
  if (opt.cache_dir.empty()) return;
  std::filesystem::create_directories(opt.cache_dir);
  ws.kl().save_cache(cache_file(opt));
}

std::string table_pad(const std::string& s, std::size_t width) {
  std::string out = s;
  while (out.size() < width) out += ' ';
  return out;
}

int run_orbits(const Options& opt, const std::string& lambda_str) {
  Workspace ws(guard_of(opt));
  load_cache_into(ws, opt);
  InfinitesimalParameter lambda = parse_lambda(lambda_str);
  const OrbitSpace& sp = ws.space(lambda);
  if (opt.format == "json") {
    std::cout << orbit_space_json(sp);
  } else if (opt.format == "latex") {
    std::cout << "% lambda = " << render(lambda) << ", dim V = " << sp.dim_v() << "\n";
    std::cout << "\\begin{tabular}{rrl}\n";
    for (int i = 0; i < sp.size(); ++i)
      std::cout << i << " & " << sp.dim(i) << " & $" << render(sp.orbit(i))
                << "$ \\\\\n";
    std::cout << "\\end{tabular}\n";
  } else {
    std::cout << "lambda: " << render(lambda) << "\n";
    std::cout << "dimV: " << sp.dim_v() << "\n";
    std::cout << "orbit  dim  multisegment\n";
    for (int i = 0; i < sp.size(); ++i)
      std::cout << table_pad(std::to_string(i), 7) << table_pad(std::to_string(sp.dim(i)), 5)
                << render(sp.orbit(i)) << "\n";
  }
  finish(ws, opt);
  return 0;
}

int run_matrices(const Options& opt, const std::string& lambda_str) {
  Workspace ws(guard_of(opt));
  load_cache_into(ws, opt);
  InfinitesimalParameter lambda = parse_lambda(lambda_str);
  const OrbitSpace& sp = ws.space(lambda);
  const MultiplicityMatrices& mm = ws.matrices(lambda);
  if (opt.format == "json") {
    std::cout << matrices_json(sp, mm);
  } else if (opt.format == "latex") {
    std::cout << "% lambda = " << render(lambda) << "\n";
    std::cout << "m_\\lambda = " << mm.m.latex();
    std::cout << "c_\\lambda = " << mm.c.latex();
  } else {
    std::cout << "lambda: " << render(lambda) << "\n";
    for (int i = 0; i < sp.size(); ++i)
      std::cout << "orbit " << i << ": " << render(sp.orbit(i)) << " (dim "
                << sp.dim(i) << ")\n";
    std::cout << "m:\n" << mm.m.str();
    std::cout << "c:\n" << mm.c.str();
  }
  finish(ws, opt);
  return 0;
}

// Splits the components of psi, in canonical order, into consecutive groups
// of the given degrees.
std::vector<std::vector<int>> grouping_for(const ArthurParameter& psi,
                                           const std::string& levi_spec) {
  std::vector<std::vector<int>> groups;
  if (levi_spec.empty()) {
    for (int i = 0; i < static_cast<int>(psi.components().size()); ++i)
      groups.push_back({i});
    return groups;
  }
  std::vector<long> degrees;
  std::stringstream ss(levi_spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      degrees.push_back(std::stol(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("bad Levi block degree: " + tok);
    }
  }
  int next = 0;
  const auto& comps = psi.components();
  for (long want : degrees) {
    std::vector<int> group;
    long got = 0;
    while (got < want && next < static_cast<int>(comps.size())) {
      got += comps[next].degree();
      group.push_back(next++);
    }
    if (got != want)
      throw ParseError("Levi degrees do not split the parameter at " +
                       std::to_string(want));
    groups.push_back(std::move(group));
  }
  if (next != static_cast<int>(comps.size()))
    throw ParseError("Levi degrees do not exhaust the parameter");
  return groups;
}

int run_lift(const Options& opt, const std::string& psi_str,
             const std::string& levi_spec) {
  Workspace ws(guard_of(opt));
  load_cache_into(ws, opt);
  ArthurParameter psi = parse_arthur(psi_str);
  std::vector<std::vector<int>> grouping = grouping_for(psi, levi_spec);
  std::vector<ArthurParameter> parts;
  std::vector<InfinitesimalParameter> lambdas;
  for (const auto& group : grouping) {
    std::vector<ArthurComponent> cs;
    for (int k : group) cs.push_back(psi.components().at(k));
    parts.push_back(ArthurParameter(std::move(cs)));
    lambdas.push_back(infinitesimal(parts.back()));
  }
  InfinitesimalParameter lambda = infinitesimal(psi);
  LeviBlocks levi = ws.levi_blocks(lambdas);
  IntMat lsim = lift_sim(ws, lambda, levi);
  IntMat lstd = lift_std(ws, lambda, levi);
  IntMat estd = eps_star_std(ws, lambda, levi);
  IntMat esim = eps_star_simple(ws, lambda, levi);
  if (opt.format == "json") {
    std::cout << lift_json(ws, psi, grouping);
  } else if (opt.format == "latex") {
    std::cout << "% psi = " << render(psi) << "\n";
    std::cout << "[\\varepsilon^*]_{sts} = " << estd.latex();
    std::cout << "[\\varepsilon^*]_{ssim} = " << esim.latex();
    std::cout << "[\\mathrm{Lift}]_{std} = " << lstd.latex();
    std::cout << "[\\mathrm{Lift}]_{sim} = " << lsim.latex();
  } else {
    std::cout << "psi: " << render(psi) << "\n";
    std::cout << "lambda: " << render(lambda) << "\n";
    std::cout << "levi blocks:";
    for (const auto& p : parts) std::cout << " " << render(p);
    std::cout << "\n";
    std::cout << "eps_std:\n" << estd.str();
    std::cout << "eps_sim:\n" << esim.str();
    std::cout << "lift_std:\n" << lstd.str();
    std::cout << "lift_sim:\n" << lsim.str();
    for (int t = 0; t < levi.tuple_count(); ++t) {
      std::vector<int> idx = levi.tuple_at(t);
      std::cout << "tuple";
      for (std::size_t i = 0; i < idx.size(); ++i) std::cout << " " << idx[i];
      std::cout << " -> ";
      bool first = true;
      for (int r = 0; r < lsim.rows(); ++r) {
        if (lsim.at(r, t) == 0) continue;
        if (!first) std::cout << " + ";
        first = false;
        if (lsim.at(r, t) != 1) std::cout << lsim.at(r, t) << "*";
        std::cout << "pi_" << r;
      }
      std::cout << "\n";
    }
  }
  finish(ws, opt);
  return 0;
}

int run_packet(const Options& opt, const std::string& psi_str) {
  Workspace ws(guard_of(opt));
  load_cache_into(ws, opt);
  ArthurParameter psi = parse_arthur(psi_str);
  if (opt.format == "json") {
    std::cout << packet_json(ws, psi);
  } else {
    InfinitesimalParameter lambda = infinitesimal(psi);
    const OrbitSpace& sp = ws.space(lambda);
    int pi_idx = sp.index_of(pi_of(psi));
    std::cout << "psi: " << render(psi) << "\n";
    std::cout << "pi: " << render(pi_of(psi)) << "\n";
    std::cout << "c_psi: " << render(pi_of(psi)) << " (dim "
              << (pi_idx < 0 ? -1 : sp.dim(pi_idx)) << ")\n";
    std::cout << "abv_packet:\n";
    for (const auto& c : abv_packet(ws, psi))
      std::cout << "  " << render(c) << " (evs_rank " << evs_rank(ws, psi, c)
                << ")\n";
  }
  finish(ws, opt);
  return 0;
}

int run_check_square(const Options& opt, const std::string& psi_str) {
  Workspace ws(guard_of(opt));
  load_cache_into(ws, opt);
  ArthurParameter psi = parse_arthur(psi_str);
  SquareReport report = endoscopy_square_check(ws, psi);
  if (opt.format == "json") {
    std::cout << square_report_json(report);
  } else if (opt.format == "latex") {
    std::cout << "% psi = " << render(psi) << "\n";
    std::cout << "\\begin{tabular}{llrrrrl}\n";
    for (const auto& r : report.rows)
      std::cout << "$" << render(r.f) << "$ & "
                << (r.basis == BasisTag::ICSheaf ? "IC" : "std") << " & " << r.top
                << " & " << r.left << " & " << r.bottom << " & " << r.right << " & "
                << (r.pass ? "pass" : "FAIL") << " \\\\\n";
    std::cout << "\\end{tabular}\n";
  } else {
    std::cout << "psi: " << render(psi) << "\n";
    std::cout << "basis  top  left  bottom  right  pass  F\n";
    for (const auto& r : report.rows)
      std::cout << table_pad(r.basis == BasisTag::ICSheaf ? "IC" : "std", 7)
                << table_pad(std::to_string(r.top), 5)
                << table_pad(std::to_string(r.left), 6)
                << table_pad(std::to_string(r.bottom), 8)
                << table_pad(std::to_string(r.right), 7)
                << table_pad(r.pass ? "yes" : "NO", 6) << render(r.f) << "\n";
    std::cout << (report.all_pass ? "square commutes" : "square FAILS") << "\n";
  }
  finish(ws, opt);
  return 0;
}

int run_selftest(const Options& opt) {
  Workspace ws(guard_of(opt));
  load_cache_into(ws, opt);
  int matched = 0;
  const int total = 4;

  // 1: rank-two principal block.
  {
    auto l = parse_lambda("[1/2]+[-1/2]");
    const auto& mm = ws.matrices(l);
    bool ok = mm.m == IntMat{{1, 0}, {1, 1}} && mm.c == IntMat{{1, 1}, {0, 1}};
    if (ok) ++matched;
    else std::cerr << "example 1 mismatch\n";
  }
  // 2: rank-four block with a multiplicity-two exponent pair.
  {
    auto l = parse_lambda("[1/2]+[1/2]+[-1/2]+[-1/2]");
    const auto& sp = ws.space(l);
    const auto& mm = ws.matrices(l);
    bool ok = sp.size() == 3 && sp.dim(0) == 0 && sp.dim(1) == 3 && sp.dim(2) == 4 &&
              mm.m == IntMat{{1, 0, 0}, {2, 1, 0}, {1, 1, 1}} &&
              mm.c == IntMat{{1, 2, 1}, {0, 1, 1}, {0, 0, 1}};
    if (ok) ++matched;
    else std::cerr << "example 2 mismatch\n";
  }
  // 3: tensor law on the product of two rank-two blocks.
  {
    auto la = parse_lambda("[1/2]+[-1/2]");
    auto levi = ws.levi_blocks({la, la});
    IntMat golden{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
    bool ok = levi_c(ws, levi) == golden &&
              m_matrix_product_direct(ws, levi) == golden.transpose();
    if (ok) ++matched;
    else std::cerr << "example 3 mismatch\n";
  }
  // 4: restriction and lifting through the rank-(2,2) Levi.
  {
    auto psi = parse_arthur("(a=2,b=1)+(a=1,b=2)");
    auto lambda = infinitesimal(psi);
    std::vector<InfinitesimalParameter> ls;
    for (const auto& [deg, part] : levi_of(psi)) ls.push_back(infinitesimal(part));
    auto levi = ws.levi_blocks(ls);
    IntMat eps{{1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    IntMat lift{{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}};
    IntMat lsim = lift_sim(ws, lambda, levi);
    bool ok = eps_star_std(ws, lambda, levi) == eps &&
              eps_star_simple(ws, lambda, levi) == eps &&
              lsim == lift;
    // unit-column assignments pi_00 -> pi_0, pi_01 -> pi_1, pi_10 -> pi_1,
    // pi_11 -> pi_2
    int want[4] = {0, 1, 1, 2};
    for (int t = 0; ok && t < 4; ++t)
      for (int r = 0; r < 3; ++r)
        if (lsim.at(r, t) != (r == want[t] ? 1 : 0)) ok = false;
    if (ok) ++matched;
    else std::cerr << "example 4 mismatch\n";
  }

  std::cout << matched << "/" << total << " examples match\n";
  finish(ws, opt);
  return matched == total ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbit spaces, multiplicity matrices and endoscopic lifting for p-adic GL(n)"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "json", "latex"}));
  app.add_option("--cache-dir", opt.cache_dir, "directory holding the KL cache");
  app.add_option("--max-points", opt.max_points, "per-line point guard override");

  std::string lambda_str, psi_str, levi_spec;

  auto* orbits = app.add_subcommand("orbits", "list the orbits of V_lambda");
  orbits->add_option("--lambda", lambda_str, "infinitesimal parameter literal")
      ->required();

  auto* matrices = app.add_subcommand("matrices", "multiplicity matrices m and c");
  matrices->add_option("--lambda", lambda_str, "infinitesimal parameter literal")
      ->required();

  auto* lift = app.add_subcommand("lift", "restriction and lifting matrices");
  lift->add_option("psi", psi_str, "Arthur parameter literal")->required();
  lift->add_option("--levi", levi_spec, "comma-separated Levi block degrees");

  auto* packet = app.add_subcommand("packet", "ABV packet of an Arthur parameter");
  packet->add_option("psi", psi_str, "Arthur parameter literal")->required();

  auto* square = app.add_subcommand("check-square", "verify the lifting square");
  square->add_option("psi", psi_str, "Arthur parameter literal")->required();

  auto* selftest = app.add_subcommand("selftest", "recompute the built-in examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*orbits) return run_orbits(opt, lambda_str);
    if (*matrices) return run_matrices(opt, lambda_str);
    if (*lift) return run_lift(opt, psi_str, levi_spec);
    if (*packet) return run_packet(opt, psi_str);
    if (*square) return run_check_square(opt, psi_str);
    if (*selftest) return run_selftest(opt);
  } catch (const gln::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
