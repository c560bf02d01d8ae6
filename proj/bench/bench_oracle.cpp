// Serial reference against the OpenMP kernels.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "majdom/enumerate.hpp"
#include "majdom/families.hpp"
#include "majdom/solver.hpp"

using namespace majdom;
namespace fam = majdom::families;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& name, int reps, const std::function<int()>& serial, const std::function<int()>& parallel) {
  int a = 0;
  int b = 0;
  const double ts = best_of(reps, [&] { a = serial(); });
  const double tp = best_of(reps, [&] { b = parallel(); });
  std::printf("%-34s %10.4f %10.4f %8.2fx %s\n", name.c_str(), ts, tp, ts / tp, a == b ? "" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oracle benchmark"};
  int min_n = 16;
  int max_n = 22;
  int reps = 3;
  int threads = 0;
  app.add_option("--min-n", min_n, "Smallest order")->check(CLI::Range(1, kOracleCap));
  app.add_option("--max-n", max_n, "Largest order")->check(CLI::Range(1, kOracleCap));
  app.add_option("--reps", reps, "Repetitions, best time kept")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "OpenMP threads (0 keeps the default)");
  CLI11_PARSE(app, argc, argv);
  if (threads > 0) set_threads(threads);

  std::printf("threads %d\n%-34s %10s %10s %9s\n", max_threads(), "instance", "serial s", "omp s", "ratio");
  enumerate::Rng rng(7);
  for (int n = min_n; n <= max_n; n += 2) {
    const Digraph t = fam::transitive_tournament(n);
    row("oracle transitive_tournament(" + std::to_string(n) + ")", reps,
        [&] { return serial::gamma_maj_out_oracle(t).optimum; }, [&] { return gamma_maj_out_oracle(t).optimum; });
    const Digraph r = enumerate::random_digraph(n, 0.3, rng);
    row("oracle random(" + std::to_string(n) + ", 0.3)", reps, [&] { return serial::gamma_maj_out_oracle(r).optimum; },
        [&] { return gamma_maj_out_oracle(r).optimum; });
    const Graph c = fam::cycle_graph(n);
    row("undirected cycle_graph(" + std::to_string(n) + ")", reps,
        [&] { return serial::gamma_maj_undirected(c).optimum; }, [&] { return gamma_maj_undirected(c).optimum; });
    const Digraph o = enumerate::random_out_regular(n, 3, rng);
    row("gamma_minus out_regular(" + std::to_string(n) + ", 3)", reps,
        [&] { return serial::gamma_minus(o).optimum; }, [&] { return gamma_minus(o).optimum; });
  }
  return 0;
}
