/*
 * Timing comparison of the serial reference kernels against their parallel
 * counterparts.  Each row reports wall milliseconds for one step on a large
 * input and checks that both paths return identical values, so the numbers
 * are meaningful and the equivalence is exercised outside the unit tests.
 */

#include <chrono>
#include <cstdio>

#include "qgram/catalog.hpp"
#include "qgram/freealg.hpp"
#include "qgram/grammar.hpp"
#include "qgram/oracle.hpp"
#include "qgram/qseries.hpp"

using namespace qgram;

namespace {

template <class F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double ser, double par, bool agree) {
  std::printf("%-36s %10.2f %10.2f %7.2fx %s\n", name, ser, par,
              par > 0 ? ser / par : 0.0, agree ? "yes" : "NO");
}

}  // namespace

int main() {
  std::printf("%-36s %10s %10s %8s %s\n", "kernel", "serial", "parallel",
              "speedup", "agree");

  {
    const CatalogEntry& ent = get_entry("G_maj");
    Expr base = derive_n(ent.grammar, ent.seed, 8);
    Expr s, p;
    double ts = time_ms([&] { s = derive_serial(ent.grammar, base); });
    double tp = time_ms([&] { p = derive_parallel(ent.grammar, base); });
    row("derive step, major-index grammar", ts, tp, s == p);
  }

  {
    const CatalogEntry& ent = get_entry("G_AndI");
    Expr base = derive_n(ent.grammar, ent.seed, 11);
    Expr s, p;
    double ts = time_ms([&] { s = derive_serial(ent.grammar, base); });
    double tp = time_ms([&] { p = derive_parallel(ent.grammar, base); });
    row("derive step, Andre grammar", ts, tp, s == p);
  }

  {
    ESeries f = std_series("tan_q", 32);
    ESeries s = series_one(0), p = series_one(0);
    double ts = time_ms([&] { s = series_mul_serial(f, f); });
    double tp = time_ms([&] { p = series_mul_parallel(f, f); });
    row("series product, q-tangent order 32", ts, tp, s == p);
  }

  {
    QPoly e;
    double t = time_ms([&] { e = eulerian_poly(8, "maj"); });
    std::printf("%-36s %10.2f ms, %zu terms\n",
                "oracle Eulerian enumeration n=8", t, e.size());
  }

  return 0;
}
