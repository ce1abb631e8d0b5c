#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gln/ktheory.hpp"
#include "gln/textio.hpp"

using Clock = std::chrono::steady_clock;

static double run_once(const std::string& lambda_str, const std::string& cache) {
  gln::Workspace ws;
  if (!cache.empty() && std::filesystem::exists(cache)) ws.kl().load_cache(cache);
  auto t0 = Clock::now();
  gln::InfinitesimalParameter lambda = gln::parse_lambda(lambda_str);
  ws.matrices(lambda);
  auto t1 = Clock::now();
  if (!cache.empty()) ws.kl().save_cache(cache);
  auto st = ws.kl().stats();
  std::cout << "  pair hits " << st.pair_hits << ", misses " << st.pair_misses
            << ", columns built " << st.columns_built << "\n";
  return std::chrono::duration<double>(t1 - t0).count();
}

int main(int argc, char** argv) {
  CLI::App app{"cold versus warm multiplicity-matrix timing"};
  std::string lambda_str = "[0]+[0]+[0]+[0]+[1]+[1]+[1]+[1]";
  std::string cache_dir;
  app.add_option("--lambda", lambda_str, "infinitesimal parameter literal");
  app.add_option("--cache-dir", cache_dir, "cache directory (default: temp)");
  CLI11_PARSE(app, argc, argv);

  std::filesystem::path dir = cache_dir.empty()
                                  ? std::filesystem::temp_directory_path() / "klbench"
                                  : std::filesystem::path(cache_dir);
  std::filesystem::create_directories(dir);
  std::string cache = (dir / "klcache.txt").string();
  std::filesystem::remove(cache);

  std::cout << "lambda: " << lambda_str << "\n";
  std::cout << "cold run:\n";
  double cold = run_once(lambda_str, cache);
  std::cout << "warm run:\n";
  double warm = run_once(lambda_str, cache);
  std::cout << "cold: " << cold << " s\n";
  std::cout << "warm: " << warm << " s\n";
  if (warm > 0) std::cout << "speedup: " << cold / warm << "x\n";
  return 0;
}
