// Acceptance suite: one line per criterion, with the runtime limits pinned.
// Exit code 0 iff every criterion passes.
#include "wildbraid/braidvariety.hpp"
#include "wildbraid/steinberg.hpp"
#include "wildbraid/stokes.hpp"
#include "wildbraid/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace wildbraid;

namespace {

struct Criterion {
  std::string name;
  double time_limit_seconds;
  std::function<bool(std::string&)> run;
};

bool report_ok(const report::Report& rep, std::string& detail) {
  if (rep.all_pass()) return true;
  for (const auto& c : rep.checks)
    if (!c.pass) {
      detail = c.claim + " " + c.outputs.dump();
      return false;
    }
  return false;
}

}  // namespace

int main() {
  verify::Options opt;  // fixed default seed: reports are reproducible

  std::vector<Criterion> criteria;

  criteria.push_back({"1 kloosterman-rigidity SL2/SL3/SL4 over Q", 10.0,
                      [&](std::string& detail) {
                        for (int n : {2, 3, 4}) {
                          auto rep = verify::kloosterman_sweep_q(n, 20, opt);
                          if (!report_ok(rep, detail)) return false;
                        }
                        return true;
                      }});

  criteria.push_back({"2 Tw-transitivity PGL2/F13 PGL3/F7", 30.0,
                      [&](std::string& detail) {
                        auto r2 = verify::tw_transitivity(2, 13, 10, opt);
                        if (!report_ok(r2, detail)) return false;
                        auto r3 = verify::tw_transitivity(3, 7, 10, opt);
                        return report_ok(r3, detail);
                      }});

  criteria.push_back({"3 delta-surjectivity PGL2/PGL3/PGL4", 30.0,
                      [&](std::string& detail) {
                        // p = 1 mod n; for n = 4 the field must also carry the
                        // 8th roots of unity so every fixed-torus element lifts.
                        for (auto [n, p] : {std::pair{2, 13L}, {3, 13L}, {4, 17L}}) {
                          auto rep = verify::delta_surjectivity(n, p);
                          if (!report_ok(rep, detail)) return false;
                        }
                        return true;
                      }});

  criteria.push_back({"4 center table: all rows, exponent divides h", 5.0,
                      [&](std::string& detail) {
                        auto rep = verify::center_table();
                        if (rep.checks.size() != 11) {
                          detail = "expected 11 instantiated rows";
                          return false;
                        }
                        return report_ok(rep, detail);
                      }});

  criteria.push_back({"5 full twist c~^h = Delta^2", 5.0,
                      [&](std::string& detail) {
                        for (auto [t, rank] :
                             {std::pair{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2},
                              {'B', 3}, {'G', 2}}) {
                          bool bfs = t == 'A' && rank <= 2;
                          auto rep = verify::full_twist_check(t, rank, bfs);
                          if (!report_ok(rep, detail)) {
                            detail += std::string(" type ") + t + std::to_string(rank);
                            return false;
                          }
                        }
                        return true;
                      }});

  criteria.push_back({"6 airy rigidity", 60.0,
                      [&](std::string& detail) {
                        for (auto [t, rank] : {std::pair{'A', 1}, {'A', 2}, {'A', 3},
                                               {'A', 4}, {'B', 2}, {'G', 2}}) {
                          auto rep = verify::airy(t, rank);
                          if (!report_ok(rep, detail)) {
                            detail += std::string(" type ") + t + std::to_string(rank);
                            return false;
                          }
                        }
                        return true;
                      }});

  criteria.push_back({"7 dimension formula point-count fits", 60.0,
                      [&](std::string& detail) {
                        auto rep = verify::dimension_sweep(10, opt);
                        return report_ok(rep, detail);
                      }});

  criteria.push_back(
      {"8 isoclinic braid extraction", 5.0, [&](std::string& detail) {
         for (auto [rank, d, m] : {std::tuple{1, 1L, 2L}, {1, 3L, 2L}, {2, 1L, 3L}}) {
           auto rep = verify::stokes_braid('A', rank, d, m);
           if (!report_ok(rep, detail)) return false;
         }
         auto rs = rootdata::build_root_system('A', 1);
         auto spec = stokes::build_irregular_class(rs, 3, 2, stokes::default_labels(rs));
         if (stokes::stokes_directions(spec).size() != 3 ||
             stokes::singular_directions(spec).size() != 3) {
           detail = "A1 Airy diagram must have 3 Stokes and 3 singular directions";
           return false;
         }
         return true;
       }});

  criteria.push_back({"9 He-Lusztig section properties over F3/F5", 120.0,
                      [&](std::string& detail) {
                        for (long q : {3L, 5L})
                          for (int n : {2, 3}) {
                            auto rep = verify::he_lusztig(n, q);
                            if (!report_ok(rep, detail)) {
                              detail += " n=" + std::to_string(n) + " q=" + std::to_string(q);
                              return false;
                            }
                          }
                        return true;
                      }});

  criteria.push_back({"10 finite stabilizers over F11", 60.0,
                      [&](std::string& detail) {
                        auto rep = verify::finite_stabilizers(10, opt);
                        return report_ok(rep, detail);
                      }});

  int failures = 0;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = elapsed < c.time_limit_seconds;
    if (ok && in_time) {
      std::printf("PASS  criterion %-45s (%.2fs, limit %.0fs)\n", c.name.c_str(), elapsed,
                  c.time_limit_seconds);
    } else {
      ++failures;
      std::printf("FAIL  criterion %-45s (%.2fs, limit %.0fs)%s%s\n", c.name.c_str(),
                  elapsed, c.time_limit_seconds, detail.empty() ? "" : " :: ",
                  detail.c_str());
    }
  }
  if (failures == 0) std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
