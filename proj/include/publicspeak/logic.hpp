// logic.hpp: Lukasiewicz semantics, the weighted-rule model over meeting
// predicates, and grounding into hinge potentials plus simplex constraints.
#ifndef PUBLICSPEAK_LOGIC_HPP
#define PUBLICSPEAK_LOGIC_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "publicspeak/corpus.hpp"
#include "publicspeak/featurize.hpp"

namespace publicspeak {

// Lukasiewicz conjunction max(0, sum - (n-1)); empty conjunction is 1.
double luk_and(std::span<const double> values);
double luk_not(double value);
// max(0, body - head): zero exactly when the implication holds fully.
double distance_to_satisfaction(double body_truth, double head_truth);

struct Term {
  bool is_var = false;
  std::string text;

  static Term var(std::string name) { return {true, std::move(name)}; }
  static Term constant(std::string value) { return {false, std::move(value)}; }
};

struct Literal {
  Pred pred;
  std::vector<Term> args;
  bool negated = false;
};

// A weighted implication body => head. An absent head is falsum: the rule
// penalizes its body truth directly (the negative-prior form). Hard
// templates carry no body/head and stand for a sum-to-one constraint over
// the categorical predicate `hard_pred`.
struct RuleTemplate {
  std::string id;
  std::vector<Literal> body;
  std::optional<Literal> head;
  double weight = 1.0;
  int exponent = 2;
  bool hard = false;
  Pred hard_pred = Pred::Section;
};

struct Model {
  int arity = 3;
  std::vector<RuleTemplate> templates;

  static const std::vector<std::string>& section_kinds();  // PC, PH, Other
  static const std::vector<std::string>& role_kinds();     // Public, Other
  std::vector<std::string> remark_kinds() const;           // drops PH at arity 2

  // Soft-rule weights keyed by id; hard constraints are excluded.
  std::map<std::string, double> weights() const;
  void set_weights(const std::map<std::string, double>& weights);
};

// Instantiates the full rule set at the given arity. `weight_overrides` and
// `exponent_overrides` key on rule ids; unknown ids raise ConfigError.
Model build_model(int arity,
                  const std::map<std::string, double>& weight_overrides = {},
                  const std::map<std::string, int>& exponent_overrides = {});

struct LinearTerm {
  int var = 0;
  double coeff = 0.0;
};

// weight * max(0, constant + sum coeff*y)^exponent, with provenance.
struct GroundPotential {
  int rule = 0;  // index into Mrf::rule_ids()
  double weight = 1.0;
  int exponent = 2;
  double constant = 0.0;
  std::vector<LinearTerm> terms;

  double linear(std::span<const double> y) const;
  double value(std::span<const double> y) const;  // weighted
};

struct HardConstraint {
  std::vector<int> vars;  // sum over these open variables equals one
};

// The grounded optimization problem: open variables in [0,1], hinge
// potentials, and one simplex group per categorical ground atom.
class Mrf {
 public:
  int add_open(const std::string& name);
  void add_group(std::vector<int> vars);
  void add_observed(const std::string& key, double value);
  int intern_rule(const std::string& rule_id);
  void add_potential(const std::string& rule_id, double weight, int exponent,
                     double constant, std::vector<LinearTerm> terms);

  int open_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& open_names() const { return names_; }
  int find_open(const std::string& name) const;  // -1 when absent
  std::optional<double> observed_value(const std::string& key) const;

  const std::vector<GroundPotential>& potentials() const { return potentials_; }
  std::vector<GroundPotential>& potentials() { return potentials_; }
  const std::vector<HardConstraint>& constraints() const { return constraints_; }
  const std::vector<std::string>& rule_ids() const { return rule_ids_; }
  // group index per variable, -1 for ungrouped
  const std::vector<int>& group_of() const { return group_of_; }

  void set_rule_weights(const std::map<std::string, double>& weights);
  void dump(std::ostream& os) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::unordered_map<std::string, double> observed_;
  std::vector<GroundPotential> potentials_;
  std::vector<HardConstraint> constraints_;
  std::vector<int> group_of_;
  std::vector<std::string> rule_ids_;
  std::unordered_map<std::string, int> rule_index_;
};

// Instantiates the model over one meeting. Open atoms are Section and
// RemarkType per utterance and SpeakerRole per speaker, unless `clamp`
// provides gold labels, in which case those atoms become observed one-hots.
// Ground rules that can never be violated are dropped.
Mrf ground(const Model& model, const Meeting& meeting,
           const std::vector<Atom>& observed, const LabelSet* clamp = nullptr);

struct PotentialTotals {
  std::map<std::string, double> by_rule;  // unweighted sums per rule id
  double weighted_total = 0.0;
};

// Sum of max(0, l)^p per provenance rule at the given assignment.
PotentialTotals total_potential(const Mrf& mrf, std::span<const double> assignment);

}  // namespace publicspeak

#endif
