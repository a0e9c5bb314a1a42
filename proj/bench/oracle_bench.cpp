// timing comparison between the OpenMP enumeration kernel and the serial
// reference checker; run with --full for the larger instances
#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "ramsey/constructions.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/oracle.hpp"

namespace {

struct Case {
  std::string name;
  ramsey::Graph g;
  int r, t;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  bool full = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--full") == 0) full = true;

  std::vector<Case> cases;
  cases.push_back({"K5 (3,P3)", ramsey::Graph::complete(5), 3, 3});
  cases.push_back({"K6 (3,P3)", ramsey::Graph::complete(6), 3, 3});
  cases.push_back({"tight(3,4) (3,P4)", *ramsey::construct_example_tight_n(3, 4).graph, 3, 4});
  if (full) {
    cases.push_back({"K6 (3,P4)", ramsey::Graph::complete(6), 3, 4});
    cases.push_back({"K7 (3,P3)", ramsey::Graph::complete(7), 3, 3});
    cases.push_back({"tight(4,3) (4,P3)", *ramsey::construct_example_tight_n(4, 3).graph, 4, 3});
  }

  const int thread_counts[] = {1, 2, 4, 8};
  std::printf("%-20s %12s %10s", "instance", "colourings", "serial");
  for (int nt : thread_counts) std::printf("  par x%-4d", nt);
  std::printf("\n");

  for (const auto& c : cases) {
    ramsey::ArrowOptions opts;
    opts.max_edges = 36;

    auto t0 = std::chrono::steady_clock::now();
    ramsey::ArrowVerdict serial = ramsey::arrows_serial(c.g, c.r, c.t, opts);
    double serial_ms = ms_since(t0);

    std::printf("%-20s %12llu %8.1fms", c.name.c_str(),
                static_cast<unsigned long long>(serial.colourings_examined), serial_ms);

    for (int nt : thread_counts) {
      opts.threads = nt;
      t0 = std::chrono::steady_clock::now();
      ramsey::ArrowVerdict par = ramsey::arrows(c.g, c.r, c.t, opts);
      double par_ms = ms_since(t0);
      if (par.arrows != serial.arrows) {
        std::printf("\nverdict mismatch on %s at %d threads\n", c.name.c_str(), nt);
        return 1;
      }
      std::printf(" %7.1fms", par_ms);
    }
    std::printf("\n");
  }
  return 0;
}
