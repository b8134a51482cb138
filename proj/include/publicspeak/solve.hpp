// solve.hpp: MAP inference for the grounded HL-MRF. Consensus ADMM is the
// production path; brute-force grid search is the small-instance oracle.
#ifndef PUBLICSPEAK_SOLVE_HPP
#define PUBLICSPEAK_SOLVE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "publicspeak/logic.hpp"

namespace publicspeak {

struct SolverConfig {
  double rho = 1.0;
  double eps_abs = 1e-5;
  double eps_rel = 1e-3;
  int max_iterations = 25000;
  std::uint64_t seed = 0;  // recorded for replay; initialization is the uniform point
};

struct InferenceResult {
  std::vector<std::string> atoms;  // open-atom keys, aligned with values
  std::vector<double> values;
  double objective = 0.0;
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  bool converged = false;

  double value_of(const std::string& atom_key) const;  // throws if absent
  std::string to_json_text() const;
};

// Euclidean projection onto { x >= 0, sum x = 1 }.
std::vector<double> project_simplex(std::vector<double> values);

// Consensus-ADMM solver with reusable state: weight updates and warm starts
// across repeated solves of one grounding (the learner's inner loop).
class AdmmSolver {
 public:
  explicit AdmmSolver(const Mrf& mrf);

  void set_rule_weights(const std::map<std::string, double>& weights);
  InferenceResult solve(const SolverConfig& cfg);

 private:
  struct Local {
    int pot = 0;                 // index into mrf potentials
    std::vector<int> vars;       // open variables touched (deduped)
    std::vector<double> coeffs;  // aligned with vars
    double constant = 0.0;
    double coeff_norm2 = 0.0;
    std::vector<double> x;  // local copy
    std::vector<double> u;  // scaled dual
  };

  void local_step(Local& loc, double weight, int exponent, double rho);

  const Mrf& mrf_;
  std::vector<Local> locals_;
  std::vector<double> weights_;  // per potential, overridable
  std::vector<double> y_;
  std::vector<std::vector<std::pair<int, int>>> members_;  // var -> (local idx, slot)
  bool warm_ = false;
};

InferenceResult map_infer(const Mrf& mrf, const SolverConfig& cfg = {});

// Exhaustive feasible-grid search (open vars <= 10) refined by fixed-step
// coordinate descent, for cross-checking the ADMM path on small instances.
InferenceResult brute_force_infer(const Mrf& mrf, double grid_step);

// Weighted total potential; the assignment must be feasible within 1e-6.
double evaluate_objective(const Mrf& mrf, std::span<const double> assignment);

}  // namespace publicspeak

#endif
