// Compares the serial reference and the OpenMP kernel for the Hochster-formula
// Betti computation on the built-in instances.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sfdepth/betti.hpp"
#include "sfdepth/instances.hpp"

using namespace sfdepth;

namespace {

double run_ms(const SquarefreeIdeal& ideal, FieldSpec field, bool parallel,
              int repeats) {
  OracleOptions opts;
  opts.parallel = parallel;
  opts.internal_checks = false;
  auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) {
    BettiTable t = parallel ? hochster_betti(ideal, field, opts)
                            : hochster_betti_serial(ideal, field, opts);
    (void)t;
  }
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / repeats;
}

bool tables_equal(const BettiTable& a, const BettiTable& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t k = 0; k < a.entries.size(); ++k)
    if (a.entries[k].i != b.entries[k].i ||
        a.entries[k].sigma != b.entries[k].sigma ||
        a.entries[k].dim != b.entries[k].dim)
      return false;
  return true;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
  std::printf("OpenMP: not enabled\n");
#endif
  std::printf("%-8s %-6s %12s %12s %9s  %s\n", "instance", "field", "serial[ms]",
              "parallel[ms]", "speedup", "tables");

  for (const std::string& name : {"vechi", "ex3", "rp2", "k3join"}) {
    SquarefreeIdeal ideal = corpus(name);
    for (int c : {0, 2}) {
      FieldSpec field = c == 0 ? FieldSpec::rationals() : FieldSpec::mod(c);
      OracleOptions opts;
      opts.internal_checks = false;
      opts.parallel = true;
      BettiTable par = hochster_betti(ideal, field, opts);
      BettiTable ser = hochster_betti_serial(ideal, field, opts);
      int repeats = ideal.n() >= 12 ? 3 : 10;
      double t_ser = run_ms(ideal, field, false, repeats);
      double t_par = run_ms(ideal, field, true, repeats);
      std::printf("%-8s %-6s %12.2f %12.2f %8.2fx  %s\n", name.c_str(),
                  field.str().c_str(), t_ser, t_par, t_ser / t_par,
                  tables_equal(par, ser) ? "equal" : "DIFFER");
    }
  }
  return 0;
}
