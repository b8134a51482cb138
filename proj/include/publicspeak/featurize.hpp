// featurize.hpp: observed predicates over a meeting, as soft-truth atoms.
#ifndef PUBLICSPEAK_FEATURIZE_HPP
#define PUBLICSPEAK_FEATURIZE_HPP

#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "publicspeak/corpus.hpp"

namespace publicspeak {

enum class Pred {
  First,
  Precedes,
  Spoken,
  SpeaksOften,
  SpeaksRarely,
  LongUtteranceRatio,
  CommentTransition,
  HearingTransition,
  Introduction,
  SectionGenAI,
  RemarkTypePLM,
  Section,      // open
  RemarkType,   // open
  SpeakerRole,  // open
};

const char* pred_name(Pred p);
std::optional<Pred> pred_from_name(const std::string& name);
int pred_arity(Pred p);
bool pred_is_open(Pred p);

struct Atom {
  Pred pred;
  std::vector<std::string> args;
  double value = 1.0;
  bool observed = true;

  // Canonical key "Pred|arg|arg|..."; ids therefore must not contain '|'.
  std::string key() const;
  static std::string make_key(Pred p, const std::vector<std::string>& args);
};

// Per-city patterns and thresholds driving featurization.
struct LocaleConfig {
  std::string city;
  std::vector<std::string> comment_transition_patterns;
  std::vector<std::string> hearing_transition_patterns;
  std::vector<std::string> introduction_patterns = default_introduction_patterns();
  std::vector<std::string> section_end_patterns = default_section_end_patterns();
  int delta_words = 75;  // long-utterance threshold
  int k_often = 10;
  int k_rare = 5;
  int arity = 3;

  static const std::vector<std::string>& default_introduction_patterns();
  static const std::vector<std::string>& default_section_end_patterns();

  // Compiles every pattern (case-insensitive); throws ConfigError on a bad
  // regex so match time never fails.
  void compile();
  bool compiled() const { return compiled_; }
  const std::vector<std::regex>& comment_regexes() const;
  const std::vector<std::regex>& hearing_regexes() const;
  const std::vector<std::regex>& introduction_regexes() const;
  const std::vector<std::regex>& end_regexes() const;

  static LocaleConfig from_json_text(const std::string& text);
  static LocaleConfig load_file(const std::string& path);
  std::string to_json_text() const;

 private:
  bool compiled_ = false;
  std::vector<std::regex> comment_rx_, hearing_rx_, intro_rx_, end_rx_;
};

struct PredicateTable {
  std::string meeting_id;
  std::vector<Atom> atoms;
};

// First / Precedes / Spoken over utterance order.
std::vector<Atom> structural_atoms(const Meeting& meeting);

// SpeaksOften(M,S) = min(1, n_S / k_often)
std::vector<Atom> speaks_often(const Meeting& meeting, const LocaleConfig& cfg);

// SpeaksRarely(M,S) = max(0, 1 - (n_S - 1) / k_rare); exact zeros omitted
std::vector<Atom> speaks_rarely(const Meeting& meeting, const LocaleConfig& cfg);

// LongUtteranceRatio(M,S) = |{u : words(u) >= delta}| / n_S; zeros omitted
std::vector<Atom> long_utterance_ratio(const Meeting& meeting, const LocaleConfig& cfg);

// CommentTransition / HearingTransition / Introduction, binary, closed world
// (only matches are emitted).
std::vector<Atom> transition_atoms(const Meeting& meeting, const LocaleConfig& cfg);

// Everything above in one deterministic bundle, plus any loaded tables.
std::vector<Atom> build_evidence(const Meeting& meeting, const LocaleConfig& cfg,
                                 const std::vector<const PredicateTable*>& tables = {});

// Parses a predicate-table document; clamps values into [0,1] (with a
// warning), rejects unknown predicate names. When `meeting` is given, atoms
// must reference its utterances/speakers.
PredicateTable load_predicate_table(const std::string& bytes,
                                    const Meeting* meeting = nullptr,
                                    std::vector<std::string>* warnings = nullptr);
std::string serialize_predicate_table(const PredicateTable& table);

}  // namespace publicspeak

#endif
