// Verification suites: each function runs one family of checks and returns a
// deterministic report.  The acceptance binary pins the parameters the
// criteria demand; the CLI exposes the same entry points.
#pragma once

#include "wildbraid/report.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace wildbraid::verify {

struct Options {
  std::uint64_t seed = 20250808;
};

// Steinberg-section rigidity for one class (or a seeded sample when the class
// string is empty): SL/GL over Q, PGL over F_q.
report::Report kloosterman(const std::string& family, int n, const std::string& cls,
                           std::optional<long> q, const Options& opt);

// Kloosterman rigidity sweep over Q: `samples` random regular semisimple
// classes plus the regular unipotent and one mixed regular class.
report::Report kloosterman_sweep_q(int n, int samples, const Options& opt);

// T^w-transitivity and |C ∩ Σ| = |K/K(x1)| over F_q for PGL_n.
report::Report tw_transitivity(int n, long q, int samples, const Options& opt);

// delta: T^w -> K surjectivity for PGL_n over F_p, p = 1 mod n.
report::Report delta_surjectivity(int n, long p);

// Centers/Coxeter-number table with the exponent | h verdict per row.
report::Report center_table();

// c~^h = Delta^2 via normal forms; optional BFS cross-validation.
report::Report full_twist_check(char type, int rank, bool bfs_crosscheck);

// Airy rigidity package for one type/rank.
report::Report airy(char type, int rank);

// Stokes braid extraction + isoclinic-braid identity for slope d/m.
report::Report stokes_braid(char type, int rank, long d, long m);

// Dimension formula: point-count degree fits for random short braids.
report::Report dimension_sweep(int samples, const Options& opt);

// Finite-stabilizer criterion on sampled (beta, w) pairs over F_11.
report::Report finite_stabilizers(int samples, const Options& opt);

// He-Lusztig section properties, exhaustive over F_q.
report::Report he_lusztig(int n, long q);

// Braid-variety point count through the CLI.
report::Report count_command(const std::string& family, int n, long q,
                             const std::vector<int>& letters, const std::string& target_mode,
                             const std::string& cls);

}  // namespace wildbraid::verify
