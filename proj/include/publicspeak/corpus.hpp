// corpus.hpp: transcript data model, ingestion, cleaning, snippet grouping,
// and gold-label derivation.
#ifndef PUBLICSPEAK_CORPUS_HPP
#define PUBLICSPEAK_CORPUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace publicspeak {

// Section and remark categories share one vocabulary; PH is only a legal
// remark at arity 3.
enum class Category { PC, PH, Other };
enum class Role { Public, Other };

const char* to_string(Category c);
const char* to_string(Role r);
Category category_from_string(const std::string& s);
Role role_from_string(const std::string& s);

struct Utterance {
  std::string utterance_id;
  std::string meeting_id;
  int index = 0;
  std::string speaker_id;
  std::optional<double> start_s;
  std::optional<double> end_s;
  std::string text;
  int word_count = 0;  // whitespace tokens of text, kept in sync by make()

  static Utterance make(std::string utterance_id, std::string meeting_id, int index,
                        std::string speaker_id, std::string text,
                        std::optional<double> start_s = std::nullopt,
                        std::optional<double> end_s = std::nullopt);

  bool operator==(const Utterance&) const = default;
};

struct Meeting {
  std::string meeting_id;
  std::string city;
  std::string held_at;          // original ISO-8601 string
  std::int64_t held_at_epoch = 0;
  std::vector<Utterance> utterances;  // sorted by index, 0..n-1
  std::set<std::string> speakers;

  // Derives speakers, normalizes indices to 0..n-1 and checks invariants.
  void finalize();

  bool operator==(const Meeting&) const = default;
};

struct LabelRecord {
  Category section = Category::Other;
  Role role = Role::Other;
  Category remark = Category::Other;  // as annotated (3-class canonical)

  bool operator==(const LabelRecord&) const = default;
};

struct LabelSet {
  std::map<std::string, LabelRecord> by_utterance;
  std::map<std::string, Role> speaker_roles;  // majority over the speaker's records

  // Gold remark label at the given task arity, from section and role.
  Category gold_remark(const std::string& utterance_id, int arity) const;

  bool operator==(const LabelSet&) const = default;
};

struct Corpus {
  std::vector<Meeting> meetings;
  std::map<std::string, LabelSet> labels;  // meeting_id -> labels
  std::set<std::string> cities;

  const Meeting* find_meeting(const std::string& meeting_id) const;
  void finalize();  // derives cities, validates label coverage

  bool operator==(const Corpus&) const = default;
};

// One diarized ASR snippet, pre-grouping.
struct Segment {
  std::string speaker_id;
  std::string text;
  std::optional<double> start_s;
  std::optional<double> end_s;
};

// Default hallucination markers; the first three are the classic ASR tells.
const std::vector<std::string>& default_hallucination_markers();

// Drops segments whose lowercased text contains any marker; keeps order.
std::vector<Segment> clean_segments(const std::vector<Segment>& segments,
                                    const std::vector<std::string>& markers =
                                        default_hallucination_markers());

// Merges maximal runs of consecutive same-speaker segments into utterances.
// Texts join with a single space; start/end span the run. Utterance ids are
// "<meeting_id>_u<index>".
std::vector<Utterance> group_snippets(const std::vector<Segment>& segments,
                                      const std::string& meeting_id);

// The remark-category rule: PC for a public speaker in a comment period,
// PH for a public speaker in a hearing (3-class only), Other otherwise.
Category derive_gold_label(Category section, Role role, int arity);

// Corpus document I/O. parse_corpus also accepts newline-delimited
// per-meeting JSON objects.
Corpus parse_corpus(const std::string& bytes);
std::string serialize_corpus(const Corpus& corpus);

Corpus load_corpus_file(const std::string& path);
void save_corpus_file(const Corpus& corpus, const std::string& path);

}  // namespace publicspeak

#endif
