#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gln/errors.hpp"
#include "gln/jsonio.hpp"
#include "gln/kl.hpp"
#include "gln/ktheory.hpp"
#include "gln/orbit.hpp"
#include "gln/textio.hpp"
#include "util.hpp"

using namespace gln;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool note(int k, const std::string& label, bool ok) {
  std::cout << "criterion " << k << ": " << (ok ? "PASS" : "FAIL") << "  " << label
            << std::endl;
  return ok;
}

// Collects sub-checks; remembers the first failure for the log.
struct Gate {
  bool ok = true;
  std::string first_fail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) first_fail = what;
    ok = ok && cond;
  }
};

Permutation perm(std::initializer_list<int> vals) {
  std::vector<std::uint8_t> w;
  for (int v : vals) w.push_back(static_cast<std::uint8_t>(v));
  return Permutation(std::move(w));
}

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cmd(const std::string& cmd) {
  RunResult res;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int rc = pclose(pipe);
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

bool is_int_matrix(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& row : j) {
    if (!row.is_array()) return false;
    for (const auto& v : row)
      if (!v.is_number_integer()) return false;
  }
  return true;
}

bool valid_orbits_json(const json& j) {
  if (!j.is_object() || j.value("schema", 0) != 1) return false;
  if (!j.contains("lambda") || !j["lambda"].is_string()) return false;
  if (!j.contains("dimV") || !j["dimV"].is_number_integer()) return false;
  if (!j.contains("orbits") || !j["orbits"].is_array() || j["orbits"].empty()) return false;
  for (const auto& o : j["orbits"]) {
    if (!o.is_object()) return false;
    if (!o.contains("multisegment") || !o["multisegment"].is_string()) return false;
    if (!o.contains("dim") || !o["dim"].is_number_integer()) return false;
    if (!o.contains("ranks") || !o["ranks"].is_object()) return false;
    for (const auto& [key, val] : o["ranks"].items()) {
      (void)key;
      if (!val.is_number_integer()) return false;
    }
  }
  return true;
}

bool valid_matrices_json(const json& j) {
  if (!j.is_object() || j.value("schema", 0) != 1) return false;
  if (!j.contains("lambda") || !j["lambda"].is_string()) return false;
  if (!j.contains("orbits") || !j["orbits"].is_array()) return false;
  for (const auto& o : j["orbits"])
    if (!o.is_string()) return false;
  if (!j.contains("m") || !is_int_matrix(j["m"])) return false;
  if (!j.contains("c") || !is_int_matrix(j["c"])) return false;
  std::size_t n = j["orbits"].size();
  return j["m"].size() == n && j["c"].size() == n;
}

bool valid_square_json(const json& j) {
  if (!j.is_object() || j.value("schema", 0) != 1) return false;
  if (!j.contains("psi") || !j["psi"].is_string()) return false;
  if (!j.contains("lambda") || !j["lambda"].is_string()) return false;
  if (!j.contains("square") || !j["square"].is_array() || j["square"].empty()) return false;
  for (const auto& row : j["square"]) {
    if (!row.is_object()) return false;
    if (!row.contains("F") || !row["F"].is_string()) return false;
    if (!row.contains("basis") ||
        (row["basis"] != "IC" && row["basis"] != "std")) return false;
    for (const char* corner : {"top", "left", "bottom", "right"})
      if (!row.contains(corner) || !row[corner].is_number_integer()) return false;
    if (!row.contains("pass") || !row["pass"].is_boolean()) return false;
  }
  return true;
}

bool valid_packet_json(const json& j) {
  if (!j.is_object() || j.value("schema", 0) != 1) return false;
  for (const char* key : {"psi", "lambda", "pi", "c_psi"})
    if (!j.contains(key) || !j[key].is_string()) return false;
  if (!j.contains("d") || !j["d"].is_number_integer()) return false;
  if (!j.contains("abv_packet") || !j["abv_packet"].is_array() ||
      j["abv_packet"].empty()) return false;
  for (const auto& p : j["abv_packet"])
    if (!p.is_string()) return false;
  if (!j.contains("evs_rank") || !j["evs_rank"].is_array()) return false;
  for (const auto& v : j["evs_rank"])
    if (!v.is_number_integer()) return false;
  return true;
}

bool valid_lift_json(const json& j) {
  if (!j.is_object() || j.value("schema", 0) != 1) return false;
  for (const char* key : {"psi", "lambda"})
    if (!j.contains(key) || !j[key].is_string()) return false;
  if (!j.contains("levi") || !j["levi"].is_array() || j["levi"].empty()) return false;
  if (!j.contains("tuples") || !j["tuples"].is_array() || j["tuples"].empty()) return false;
  for (const auto& t : j["tuples"]) {
    if (!t.is_object() || !t.contains("index") || !t["index"].is_number_integer())
      return false;
    if (!t.contains("factors") || !t["factors"].is_array()) return false;
    if (!t.contains("image") || !t["image"].is_array()) return false;
    for (const auto& term : t["image"]) {
      if (!term.is_object()) return false;
      if (!term.contains("multisegment") || !term["multisegment"].is_string())
        return false;
      if (!term.contains("mult") || !term["mult"].is_number_integer()) return false;
    }
  }
  for (const char* key : {"lift_sim", "lift_std", "eps_std", "eps_sim"})
    if (!j.contains(key) || !is_int_matrix(j[key])) return false;
  return true;
}

}  // namespace

TEST_CASE("criterion 1: rank two golden matrices") {
  auto t0 = Clock::now();
  Gate g;
  Workspace ws;
  const auto& mm = ws.matrices(parse_lambda("[1/2]+[-1/2]"));
  g.require(mm.m == IntMat{{1, 0}, {1, 1}}, "m");
  g.require(mm.c == IntMat{{1, 1}, {0, 1}}, "c");
  double dt = secs(t0);
  g.require(dt < 1.0, "runtime");
  bool ok = note(1, "rank-two multiplicity matrices", g.ok);
  if (!ok) std::cerr << "  first failure: " << g.first_fail << "\n";
  CHECK(ok);
}

TEST_CASE("criterion 2: rank four golden matrices") {
  auto t0 = Clock::now();
  Gate g;
  Workspace ws;
  InfinitesimalParameter lambda = parse_lambda("[1/2]+[1/2]+[-1/2]+[-1/2]");
  const OrbitSpace& sp = ws.space(lambda);
  g.require(sp.size() == 3, "orbit count");
  if (sp.size() == 3) {
    g.require(sp.dim(0) == 0 && sp.dim(1) == 3 && sp.dim(2) == 4, "orbit dims");
  }
  const auto& mm = ws.matrices(lambda);
  g.require(mm.c == IntMat{{1, 2, 1}, {0, 1, 1}, {0, 0, 1}}, "c");
  g.require(mm.m == IntMat{{1, 0, 0}, {2, 1, 0}, {1, 1, 1}}, "m");
  double dt = secs(t0);
  g.require(dt < 1.0, "runtime");
  bool ok = note(2, "rank-four multiplicity matrices and orbit dims", g.ok);
  if (!ok) std::cerr << "  first failure: " << g.first_fail << "\n";
  CHECK(ok);
}

TEST_CASE("criterion 3: levi tensor law") {
  Gate g;
  Workspace ws;
  InfinitesimalParameter gl2 = parse_lambda("[1/2]+[-1/2]");
  LeviBlocks levi = ws.levi_blocks({gl2, gl2});
  IntMat golden = {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  const IntMat& c2 = ws.matrices(gl2).c;
  g.require(c2.kron(c2) == golden, "kronecker square");
  g.require(levi_c(ws, levi) == golden, "tensor law");
  g.require(m_matrix_product_direct(ws, levi) == golden.transpose(),
            "direct product space computation");
  bool ok = note(3, "product-space stalk matrix, both routes", g.ok);
  if (!ok) std::cerr << "  first failure: " << g.first_fail << "\n";
  CHECK(ok);
}

TEST_CASE("criterion 4: golden endoscopy matrices") {
  Gate g;
  Workspace ws;
  InfinitesimalParameter lambda = parse_lambda("[1/2]+[1/2]+[-1/2]+[-1/2]");
  InfinitesimalParameter gl2 = parse_lambda("[1/2]+[-1/2]");
  LeviBlocks levi = ws.levi_blocks({gl2, gl2});
  IntMat eps = eps_star_std(ws, lambda, levi);
  g.require(eps == IntMat{{1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}}, "eps std");
  g.require(eps_star_simple(ws, lambda, levi) == eps, "eps simple");
  IntMat lift = lift_sim(ws, lambda, levi);
  g.require(lift == IntMat{{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}, "lift sim");
  int want[4] = {0, 1, 1, 2};
  for (int t = 0; t < 4; ++t)
    for (int i = 0; i < 3; ++i)
      g.require(lift.at(i, t) == (i == want[t] ? 1 : 0),
                "assignment of tuple " + std::to_string(t));
  bool ok = note(4, "restriction and lifting of the split rank-four space", g.ok);
  if (!ok) std::cerr << "  first failure: " << g.first_fail << "\n";
  CHECK(ok);
}

TEST_CASE("criterion 5: packet identity sweep through degree six") {
  auto t0 = Clock::now();
  Gate g;
  Workspace ws;
  int count = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& psi : testutil::one_line_psis(n)) {
      ++count;
      std::string name = render(psi);
      KVector e = eta(ws, psi);
      KVector evs = eta_evs(ws, psi);
      g.require(e.coords == evs.coords, "eta mismatch at " + name);
      auto packet = abv_packet(ws, psi);
      g.require(packet.size() == 1 && packet[0] == pi_of(psi),
                "packet not a singleton at " + name);
      SquareReport report = endoscopy_square_check(ws, psi);
      g.require(report.all_pass, "square fails at " + name);
      g.require(report.rows.size() ==
                    2u * static_cast<std::size_t>(ws.space(infinitesimal(psi)).size()),
                "square coverage at " + name);
    }
  g.require(count > 0, "parameter enumeration is empty");
  double dt = secs(t0);
  g.require(dt < 60.0, "runtime");
  std::ostringstream label;
  label << "packets and squares for " << count << " parameters in " << std::fixed
        << std::setprecision(2) << dt << " s";
  bool ok = note(5, label.str(), g.ok);
  if (!ok) std::cerr << "  first failure: " << g.first_fail << "\n";
  CHECK(ok);
}

TEST_CASE("criterion 6: lift routes agree on every maximal levi") {
  Gate g;
  Workspace ws;
  int count = 0;
  for (int n = 2; n <= 6; ++n)
    for (const auto& mult : testutil::compositions(n)) {
      InfinitesimalParameter lambda = testutil::lambda_of(mult);
      for (const auto& [f, h] : testutil::splits(mult)) {
        std::vector<InfinitesimalParameter> parts;
        for (const auto& half : {f, h}) {
          InfinitesimalParameter part;
          for (int i = 0; i < static_cast<int>(half.size()); ++i)
            for (int c = 0; c < half[i]; ++c) part.add(LineId{}, HalfInt::whole(i));
          parts.push_back(part);
        }
        ++count;
        LeviBlocks levi = ws.levi_blocks(parts);
        IntMat cat = lift_std(ws, lambda, levi);
        g.require(cat == eps_star_std(ws, lambda, levi).transpose(),
                  "standard-basis routes at " + render(lambda));
        const IntMat& m = ws.matrices(lambda).m;
        IntMat mm_inv = levi_m(ws, levi).inverse_unitriangular();
        g.require(lift_sim(ws, lambda, levi) == m * cat * mm_inv,
                  "simple-basis routes at " + render(lambda));
      }
    }
  g.require(count > 0, "split enumeration is empty");
  std::ostringstream label;
  label << "conjugation equals concatenation on " << count << " splits";
  bool ok = note(6, label.str(), g.ok);
  if (!ok) std::cerr << "  first failure: " << g.first_fail << "\n";
  CHECK(ok);
}

TEST_CASE("criterion 7: orbit dimensions against the nullspace oracle") {
  auto t0 = Clock::now();
  Gate g;
  Workspace ws;
  int orbits = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& mult : testutil::compositions(n)) {
      InfinitesimalParameter lambda = testutil::lambda_of(mult);
      const OrbitSpace& sp = ws.space(lambda);
      long dh = dim_H(lambda);
      for (int i = 0; i < sp.size(); ++i) {
        ++orbits;
        g.require(sp.dim(i) == dh - stabilizer_dim_bruteforce(sp.orbit(i)),
                  "oracle disagrees on " + render(sp.orbit(i)));
      }
    }
  double dt = secs(t0);
  g.require(dt < 30.0, "runtime");
  std::ostringstream label;
  label << "hom formula equals nullspace oracle on " << orbits << " orbits in "
        << std::fixed << std::setprecision(2) << dt << " s";
  bool ok = note(7, label.str(), g.ok);
  if (!ok) std::cerr << "  first failure: " << g.first_fail << "\n";
  CHECK(ok);
}

TEST_CASE("criterion 8: regularity dimension identity") {
  Gate g;
  int count = 0, failures = 0;
  std::string sample;
  for (int n = 1; n <= 8; ++n)
    for (const auto& psi : testutil::one_line_psis(n)) {
      ++count;
      long lhs = orbit_dim(phi_of(psi)) + orbit_dim(dual_orbit_of_arthur(psi));
      long rhs = dim_V(infinitesimal(psi));
      if (lhs != rhs) {
        ++failures;
        if (sample.empty()) {
          std::ostringstream ss;
          ss << render(psi) << " gives " << lhs << " != " << rhs;
          sample = ss.str();
        }
      }
      g.require(lhs == rhs, "identity fails at " + render(psi));
    }
  g.require(count > 0, "parameter enumeration is empty");
  std::ostringstream label;
  label << "dimension identity on " << count << " parameters";
  if (failures) label << " (" << failures << " violations, first: " << sample << ")";
  bool ok = note(8, label.str(), g.ok);
  if (!ok) std::cerr << "  first failure: " << g.first_fail << "\n";
  CHECK(ok);
}

TEST_CASE("criterion 9: multiplicity free spaces are smooth") {
  auto t0 = Clock::now();
  Gate g;
  Workspace ws;
  for (int n = 1; n <= 8; ++n) {
    InfinitesimalParameter lambda = testutil::lambda_of(std::vector<int>(n, 1));
    const OrbitSpace& sp = ws.space(lambda);
    g.require(sp.size() == (1 << (n - 1)),
              "orbit count at n = " + std::to_string(n));
    const auto& mm = ws.matrices(lambda);
    g.require(mm.m.is_zero_one(), "entries at n = " + std::to_string(n));
    for (int i = 0; i < sp.size(); ++i)
      for (int j = 0; j < sp.size(); ++j)
        g.require(mm.m.at(i, j) == (closure_leq(sp.orbit(j), sp.orbit(i)) ? 1 : 0),
                  "incidence at n = " + std::to_string(n));
  }
  double dt = secs(t0);
  g.require(dt < 60.0, "runtime");
  std::ostringstream label;
  label << "closure incidence through 128 orbits in " << std::fixed
        << std::setprecision(2) << dt << " s";
  bool ok = note(9, label.str(), g.ok);
  if (!ok) std::cerr << "  first failure: " << g.first_fail << "\n";
  CHECK(ok);
}

TEST_CASE("criterion 10: two block stalks are binomial") {
  Gate g;
  Workspace ws;
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      InfinitesimalParameter lambda = testutil::lambda_of({p, q});
      const auto& mm = ws.matrices(lambda);
      int r = std::min(p, q);
      g.require(mm.c.rows() == r + 1,
                "orbit count at p=" + std::to_string(p) + " q=" + std::to_string(q));
      for (int s = 0; s <= r && s < mm.c.rows(); ++s)
        for (int k = 0; k <= r && k < mm.c.cols(); ++k)
          g.require(mm.c.at(s, k) == (k >= s ? binom(r - s, k - s) : 0),
                    "stalk at p=" + std::to_string(p) + " q=" + std::to_string(q) +
                        " s=" + std::to_string(s) + " k=" + std::to_string(k));
    }
  g.require(ws.matrices(testutil::lambda_of({2, 2})).c.at(0, 1) == 2,
            "degree-two stalk entry");
  bool ok = note(10, "binomial stalk oracle for two-block spaces", g.ok);
  if (!ok) std::cerr << "  first failure: " << g.first_fail << "\n";
  CHECK(ok);
}

TEST_CASE("criterion 11: kl engine properties") {
  Gate g;
  KlEngine eng;
  std::mt19937 rng(7);

  std::vector<Permutation> s4;
  {
    std::vector<std::uint8_t> base = {1, 2, 3, 4};
    do {
      s4.emplace_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
  }
  for (const auto& x : s4)
    for (const auto& w : s4) {
      g.require(eng.poly(w, w) == KlPoly::one(), "reflexive value at " + w.str());
      KlPoly p = eng.poly(x, w);
      g.require(p.is_zero() == !bruhat_leq(x, w),
                "support at " + x.str() + " under " + w.str());
      if (!p.is_zero() && !(x == w))
        g.require(2 * p.degree() <= w.length() - x.length() - 1,
                  "degree bound at " + x.str() + " under " + w.str());
    }
  std::vector<std::uint8_t> base5 = {1, 2, 3, 4, 5};
  std::vector<Permutation> s5;
  do {
    s5.emplace_back(base5);
  } while (std::next_permutation(base5.begin(), base5.end()));
  std::uniform_int_distribution<std::size_t> pick(0, s5.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation& x = s5[pick(rng)];
    const Permutation& w = s5[pick(rng)];
    KlPoly p = eng.poly(x, w);
    g.require(p.is_zero() == !bruhat_leq(x, w), "support in rank five");
    if (!p.is_zero()) {
      g.require(p.coeff(0) == 1, "constant term in rank five");
      if (!(x == w))
        g.require(2 * p.degree() <= w.length() - x.length() - 1,
                  "degree bound in rank five");
    }
  }

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "gln-acceptance-cache";
  fs::create_directories(dir);
  std::string p1 = (dir / "a.txt").string(), p2 = (dir / "b.txt").string();
  eng.save_cache(p1);
  KlEngine reload;
  reload.load_cache(p1);
  reload.save_cache(p2);
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string bytes1 = slurp(p1);
  g.require(!bytes1.empty() && bytes1 == slurp(p2), "cache round trip bytes");
  g.require(reload.poly(perm({2, 1, 4, 3}), perm({4, 2, 3, 1})) == KlPoly({1, 1}),
            "reloaded value");
  fs::remove_all(dir);

  RunResult bench = run_cmd(std::string(KLBENCH_BIN) +
                            " --lambda \"[0]+[0]+[0]+[1]+[1]+[1]\"");
  g.require(bench.status == 0, "benchmark harness exit");
  g.require(bench.out.find("cold:") != std::string::npos &&
                bench.out.find("warm:") != std::string::npos &&
                bench.out.find("speedup:") != std::string::npos,
            "benchmark harness reports timings");
  bool ok = note(11, "recursion properties, cache round trip, benchmark", g.ok);
  if (!ok) std::cerr << "  first failure: " << g.first_fail << "\n";
  CHECK(ok);
}

TEST_CASE("criterion 12: cli selftest and json schemas") {
  Gate g;
  std::string bin = GLNPACK_BIN;

  RunResult self = run_cmd(bin + " selftest");
  g.require(self.status == 0, "selftest exit status");
  g.require(self.out.find("4/4 examples match") != std::string::npos,
            "selftest match report");

  auto parsed = [&g](const RunResult& r, const std::string& what) {
    g.require(r.status == 0, what + " exit status");
    json j = json::parse(r.out, nullptr, false);
    g.require(!j.is_discarded(), what + " parses as json");
    return j;
  };

  std::string lam = " --lambda \"[1/2]+[1/2]+[-1/2]+[-1/2]\"";
  RunResult orbits = run_cmd(bin + " orbits --format json" + lam);
  g.require(valid_orbits_json(parsed(orbits, "orbits")), "orbits schema");

  RunResult mats = run_cmd(bin + " matrices --format json" + lam);
  g.require(valid_matrices_json(parsed(mats, "matrices")), "matrices schema");

  RunResult packet = run_cmd(bin + " packet --format json \"(a=2,b=2)\"");
  json pj = parsed(packet, "packet");
  g.require(valid_packet_json(pj), "packet schema");
  if (pj.is_object() && pj.contains("abv_packet"))
    g.require(pj["abv_packet"] == json::array({"[0,1]+[-1,0]"}), "packet contents");

  RunResult square = run_cmd(bin + " check-square --format json \"(a=2,b=2)\"");
  json sj = parsed(square, "square");
  g.require(valid_square_json(sj), "square schema");
  if (sj.is_object() && sj.contains("square"))
    for (const auto& row : sj["square"]) g.require(row.value("pass", false), "square rows");

  RunResult lift = run_cmd(bin + " lift --format json \"(a=2,b=1)+(a=1,b=1)\"");
  g.require(valid_lift_json(parsed(lift, "lift")), "lift schema");

  RunResult lift2 = run_cmd(bin + " lift --format json \"(a=2,b=1)+(a=1,b=1)\"");
  g.require(lift2.out == lift.out, "deterministic output");

  bool ok = note(12, "selftest and json schema validation", g.ok);
  if (!ok) std::cerr << "  first failure: " << g.first_fail << "\n";
  CHECK(ok);
}
