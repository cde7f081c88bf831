// Benchmark comparing the serial reference kernels with their OpenMP
// counterparts: Bruhat closure matrix, full KL table fill, and the
// whole-group smoothness scan. Results are checked for equality.

#include <omp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <memory>

#include "weylkl/bruhat.hpp"
#include "weylkl/kl.hpp"
#include "weylkl/schubert.hpp"
#include "weylkl/weyl.hpp"

using namespace weylkl;

namespace {

template <class F>
double time_best_of(int repeat, F f) {
  double best = 1e300;
  for (int r = 0; r < repeat; ++r) {
    double t0 = omp_get_wtime();
    f();
    best = std::min(best, omp_get_wtime() - t0);
  }
  return best;
}

void print_line(const char* label, double serial, double parallel, bool match) {
  std::printf("%-22s serial %9.4fs   openmp %9.4fs   speedup %5.2fx   match: %s\n", label,
              serial, parallel, serial / parallel, match ? "yes" : "NO");
}

bool same_data(const std::vector<SchubertDatum>& a, const std::vector<SchubertDatum>& b) {
  if (a.size() != b.size()) return false;
  for (size_t k = 0; k < a.size(); ++k) {
    if (a[k].w != b[k].w || a[k].dim != b[k].dim || a[k].codim != b[k].codim ||
        a[k].rationally_smooth != b[k].rationally_smooth ||
        a[k].singular_locus_maximals != b[k].singular_locus_maximals)
      return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP benchmark for the whole-group kernels"};
  std::string type_str = "A4";
  int repeat = 3;
  int threads = 0;
  uint64_t max_order = 10'000'000;
  app.add_option("--type", type_str, "Cartan type (default A4)");
  app.add_option("--repeat", repeat, "repetitions, best-of (default 3)");
  app.add_option("--threads", threads, "OpenMP thread count (default: runtime)");
  app.add_option("--max-order", max_order, "enumeration cap");
  CLI11_PARSE(app, argc, argv);

  if (threads > 0) omp_set_num_threads(threads);

  std::shared_ptr<const WeylGroup> g;
  try {
    g = WeylGroup::build(CartanType::parse(type_str), {max_order});
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  std::printf("group %s: order %u, longest length %d, %d openmp threads\n",
              g->type().str().c_str(), g->size(), g->max_length(), omp_get_max_threads());

  // Bruhat closure matrix.
  std::unique_ptr<BruhatOrder> bo_serial, bo_parallel;
  double ts = time_best_of(repeat, [&] { bo_serial = std::make_unique<BruhatOrder>(*g, ExecMode::serial); });
  double tp = time_best_of(repeat, [&] { bo_parallel = std::make_unique<BruhatOrder>(*g, ExecMode::parallel); });
  bool ok = *bo_serial == *bo_parallel;
  print_line("bruhat closure", ts, tp, ok);

  // Full KL table. KLContext caches rows, so each run uses a fresh context.
  std::unique_ptr<KLContext> kl_serial, kl_parallel;
  ts = time_best_of(repeat, [&] {
    kl_serial = std::make_unique<KLContext>(g, ExecMode::serial);
    kl_serial->fill(ExecMode::serial);
  });
  tp = time_best_of(repeat, [&] {
    kl_parallel = std::make_unique<KLContext>(g, ExecMode::parallel);
    kl_parallel->fill(ExecMode::parallel);
  });
  bool kl_ok = true;
  for (uint32_t id = 0; id < g->size() && kl_ok; ++id) {
    Element w = g->element(id);
    auto ps = kl_serial->row_polys(w);
    auto qs = kl_parallel->row_polys(w);
    kl_ok = std::equal(ps.begin(), ps.end(), qs.begin(), qs.end());
  }
  print_line("kl table fill", ts, tp, kl_ok);
  ok = ok && kl_ok;

  // Smoothness scan over the filled tables.
  std::vector<SchubertDatum> data_serial, data_parallel;
  ts = time_best_of(repeat, [&] { data_serial = classify_all(*kl_serial, ExecMode::serial); });
  tp = time_best_of(repeat, [&] { data_parallel = classify_all(*kl_parallel, ExecMode::parallel); });
  bool scan_ok = same_data(data_serial, data_parallel);
  print_line("smoothness scan", ts, tp, scan_ok);
  ok = ok && scan_ok;

  size_t singular = 0;
  for (const auto& d : data_serial) singular += d.rationally_smooth ? 0 : 1;
  std::printf("rationally singular Schubert varieties: %zu of %u\n", singular, g->size());

  return ok ? 0 : 1;
}
