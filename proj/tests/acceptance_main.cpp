// One line per acceptance criterion; exit status 1 when any fails.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "csg/acceptance.hpp"

int main(int argc, char** argv) {
  const char* json_path = argc > 1 ? argv[1] : nullptr;
  bool all = true;
  csg::Json doc = csg::Json::array();
  for (int n = 1; n <= 10; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    csg::CriterionResult r;
    try {
      switch (n) {
        case 1: r = csg::criterion_axioms(); break;
        case 2: r = csg::criterion_canonical_basis(); break;
        case 3: r = csg::criterion_catalog(); break;
        case 4: r = csg::criterion_coarsenings(); break;
        case 5: r = csg::criterion_b12_lambda_uniqueness(); break;
        case 6: r = csg::criterion_isomorphisms(); break;
        case 7: r = csg::criterion_okubo_facts(); break;
        case 8: r = csg::criterion_para_units(); break;
        case 9: r = csg::criterion_fineness(); break;
        default: r = csg::criterion_orthogonality(); break;
      }
    } catch (const std::exception& e) {
      r.number = n;
      r.name = "criterion " + std::to_string(n);
      r.pass = false;
      r.summary = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d %s  %s: %s (%.1fs)\n", n, r.pass ? "PASS" : "FAIL", r.name.c_str(), r.summary.c_str(), secs);
    std::fflush(stdout);
    all = all && r.pass;
    doc.push_back(csg::to_json(r));
  }
  if (json_path) std::ofstream(json_path) << doc.dump(2) << "\n";
  return all ? 0 : 1;
}
