// Compares the parallel search against the single-threaded reference on the
// finite-language rows and checks that both produce identical tables.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "avoid/catalog.hpp"
#include "avoid/search.hpp"

using namespace avoid;

namespace {

double run_ms(const ConstraintSet& c, int limit, const SearchOptions& opts, bool serial,
              AvoidanceTable& out) {
  const auto start = std::chrono::steady_clock::now();
  out = serial ? enumerate_avoiders_serial(c, 2, limit, opts)
               : enumerate_avoiders(c, 2, limit, opts);
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"search benchmark: parallel kernel vs serial reference"};
  int limit = 120;
  int threads = 0;
  std::vector<std::string> formulas;
  app.add_option("--limit,-n", limit, "length limit");
  app.add_option("--threads", threads, "worker threads (0 = default)");
  app.add_option("--formula,-f", formulas, "extra formulas to benchmark");
  CLI11_PARSE(app, argc, argv);

  std::vector<std::string> rows;
  for (const FiniteRow& r : finite_binary_rows()) rows.push_back(r.formula);
  rows.insert(rows.end(), formulas.begin(), formulas.end());

  std::printf("%-28s %12s %12s %8s %s\n", "formula", "serial ms", "parallel ms", "speedup",
              "tables");
  bool all_equal = true;
  for (const std::string& text : rows) {
    ConstraintSet c;
    c.formulas.push_back(parse_formula(text));
    SearchOptions opts;
    opts.threads = threads;
    AvoidanceTable serial_table, parallel_table;
    const double serial_ms = run_ms(c, limit, opts, true, serial_table);
    const double parallel_ms = run_ms(c, limit, opts, false, parallel_table);
    const bool equal = serial_table.counts == parallel_table.counts &&
                       serial_table.max_length == parallel_table.max_length &&
                       serial_table.witness_longest == parallel_table.witness_longest;
    all_equal = all_equal && equal;
    std::printf("%-28s %12.1f %12.1f %7.2fx %s\n", text.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "equal" : "DIFFER");
  }
  return all_equal ? 0 : 1;
}
