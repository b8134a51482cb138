// genai.hpp: optional HTTP client that asks a chat-completions endpoint for
// section spans and expands them into SectionGenAI atoms. Offline/file mode
// is the default; nothing here runs unless a config enables it.
#ifndef PUBLICSPEAK_GENAI_HPP
#define PUBLICSPEAK_GENAI_HPP

#include <string>
#include <vector>

#include "publicspeak/corpus.hpp"
#include "publicspeak/featurize.hpp"

namespace publicspeak {

struct AnnotatorConfig {
  bool enabled = false;            // network mode must be switched on explicitly
  std::string endpoint_url;        // e.g. http://host:port/v1/chat/completions
  std::string model = "gpt-4";
  std::string auth_token_env = "PUBLICSPEAK_ANNOTATOR_TOKEN";
  double timeout_s = 60.0;
  int window = 120;                // utterances per request
  int retries = 2;
  double backoff_s = 1.0;
  bool strict = false;             // strict: failures throw; lenient: empty table + warning
};

// Section span as returned by the annotator; indices are inclusive utterance
// positions within the meeting.
struct SectionSpan {
  int start_index = 0;
  int end_index = 0;
  Category section = Category::Other;
};

const std::string& default_genai_prompt();

// Expands spans over an n-utterance meeting: covered utterances take the
// span's section (later spans win on overlap, with a warning), everything
// else is Other.
PredicateTable expand_section_spans(const Meeting& meeting,
                                    const std::vector<SectionSpan>& spans,
                                    std::vector<std::string>* warnings = nullptr);

// Parses the assistant content of a chat reply into spans. Tolerates a
// markdown code fence around the JSON array.
std::vector<SectionSpan> parse_span_reply(const std::string& content);

PredicateTable fetch_genai_sections(const Meeting& meeting, const AnnotatorConfig& cfg,
                                    const std::string& prompt_template = default_genai_prompt(),
                                    std::vector<std::string>* warnings = nullptr);

}  // namespace publicspeak

#endif
