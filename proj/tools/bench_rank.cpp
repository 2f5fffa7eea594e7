// Benchmark: exact rank via the parallel fraction-free elimination against
// the single-threaded rational reference, on dense random matrices and on
// the power-block matrices the profile computation produces.
#include <omp.h>

#include <cstdio>
#include <random>
#include <vector>

#include "gkm/embedded_graph.hpp"
#include "gkm/linalg.hpp"
#include "gkm/matrix.hpp"
#include "gkm/profile.hpp"

using namespace gkm;

namespace {

RatMatrix random_int_matrix(std::mt19937_64& rng, int rows, int cols, int span) {
  std::uniform_int_distribution<int> pick(-span, span);
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = Rat(pick(rng));
  return m;
}

struct Timing {
  double serial_reference = 0;
  double one_thread = 0;
  double all_threads = 0;
};

Timing time_all(const RatMatrix& m, std::size_t* rank_out) {
  Timing t;
  const int max_threads = omp_get_max_threads();

  double t0 = omp_get_wtime();
  const std::size_t r_serial = rank_serial(m);
  t.serial_reference = omp_get_wtime() - t0;

  omp_set_num_threads(1);
  t0 = omp_get_wtime();
  const std::size_t r_one = rank(m);
  t.one_thread = omp_get_wtime() - t0;

  omp_set_num_threads(max_threads);
  t0 = omp_get_wtime();
  const std::size_t r_all = rank(m);
  t.all_threads = omp_get_wtime() - t0;

  if (r_serial != r_one || r_one != r_all) {
    std::fprintf(stderr, "rank mismatch: serial %zu, 1 thread %zu, %d threads %zu\n", r_serial,
                 r_one, max_threads, r_all);
    std::exit(1);
  }
  *rank_out = r_all;
  return t;
}

void report(const char* name, std::size_t rank_value, const Timing& t) {
  std::printf("%-28s rank %4zu   rational-gauss %8.3fs   fraction-free x1 %8.3fs   x%-2d %8.3fs   speedup %5.2f\n",
              name, rank_value, t.serial_reference, t.one_thread, omp_get_max_threads(),
              t.all_threads, t.one_thread / (t.all_threads > 0 ? t.all_threads : 1e-9));
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", omp_get_max_threads());
  std::mt19937_64 rng(123456789);

  for (int n : {60, 90}) {
    const RatMatrix m = random_int_matrix(rng, n, 2 * n, 50);
    std::size_t r = 0;
    const Timing t = time_all(m, &r);
    char name[64];
    std::snprintf(name, sizeof(name), "dense %dx%d", n, 2 * n);
    report(name, r, t);
  }

  // Relation matrices of a random dense instance: entries are slope powers,
  // numerators and denominators grow with the degree.
  RandomGraphSpec spec;
  spec.m = 12;
  spec.density = Rat(4, 5);
  const EmbeddedGraph g = EmbeddedGraph::random_general_position(spec, 77);
  for (int k : {6, 9}) {
    const RatMatrix mk = build_mk(g, k);
    std::size_t r = 0;
    const Timing t = time_all(mk, &r);
    char name[64];
    std::snprintf(name, sizeof(name), "power block m=12 k=%d %zux%zu", k, mk.rows(), mk.cols());
    report(name, r, t);
  }
  return 0;
}
