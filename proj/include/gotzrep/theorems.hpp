#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gotzrep/integer.hpp"
#include "gotzrep/monomial.hpp"
#include "gotzrep/numpoly.hpp"

namespace gotzrep {

enum class Verdict { holds, sharp, violated, premise_fails };

std::string to_string(Verdict v);

/// Outcome of one bound check: lhs compared against rhs, lhs <= rhs expected.
struct CheckReport {
  std::string name;
  nlohmann::json instance;
  bool premises_hold = true;
  /// Absent when the left side is -infinity (regularity of the zero module).
  std::optional<Integer> bound_lhs;
  Integer bound_rhs;
  Verdict verdict = Verdict::holds;
  nlohmann::json context = nlohmann::json::object();
};

/// holds if lhs < rhs, sharp if equal, violated otherwise.
Verdict compare_bound(const Integer& lhs, const Integer& rhs);

/// Rank-and-degree adjusted Macaulay bound on H(M, d+1). d >= f_{m-r} + 1.
CheckReport check_macaulay_adjusted(const MonomialSubmodule& module, long d);

/// Rank-and-degree adjusted Green bound on a general hyperplane section.
CheckReport check_green_adjusted(const MonomialSubmodule& module, long d, std::uint64_t seed,
                                 int samples = 3);

enum class GasharovKind { macaulay, green };

/// Module Macaulay / Green bounds with transform index d - f_m - p.
CheckReport check_gasharov(const MonomialSubmodule& module, long d, long p, GasharovKind which,
                           std::uint64_t seed, int samples = 3);

/// If H(M, d+1) meets the adjusted Macaulay bound, equality must persist.
/// The literal conclusion is at d + 2; the chain through d + horizon is an
/// extension by induction and is labelled as such in the context.
CheckReport check_persistence_adjusted(const MonomialSubmodule& module, long d, long horizon);

/// reg(sat N) <= max(s, f_m) with s the rank-and-degree adjusted Gotzmann number.
CheckReport check_gotzmann_regularity_adjusted(const MonomialSubmodule& module);

/// The saturated lex module attains regularity exactly s when f_{m-r} = 0 and s >= f_m.
CheckReport check_sharpness(const NumPoly& p, const GradedFreeModule& f, long r);

/// Adjusted Macaulay right side never exceeds the module (p = 0) bound.
CheckReport check_adjusted_refines_classical(const MonomialSubmodule& module, long d);

struct RandomSubmoduleSpec {
  int max_n = 3;
  int max_m = 3;
  int max_gens = 5;
  int max_deg = 5;
  long min_f = -2;
  long max_f = 2;
};

/// Deterministic in `seed`.
MonomialSubmodule random_submodule(const RandomSubmoduleSpec& spec, std::uint64_t seed);

/// Strongly stable closure of a few random monomials; deterministic in `seed`.
MonomialIdeal random_stable_ideal(int n, int max_gens, int max_deg, std::uint64_t seed);

/// Admissible Gotzmann representation: non-increasing values <= max_value.
GotzmannRep random_gotzmann_rep(std::size_t max_len, long max_value, std::uint64_t seed);

struct SweepOptions {
  std::size_t instances = 500;
  std::uint64_t seed = 0;
  long window = 6;
  long max_p = 2;
  long horizon = 4;
  int samples = 3;
  RandomSubmoduleSpec spec;
};

/// Every checker over a seeded random corpus, each over a window of degrees
/// above its precondition threshold. Reports are ordered by instance id.
std::vector<CheckReport> run_sweep(const SweepOptions& options);

}  // namespace gotzrep
