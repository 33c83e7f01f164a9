#ifndef EMOLAG_TEXTPREP_HPP
#define EMOLAG_TEXTPREP_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace emolag::textprep {

using StopwordSet = std::unordered_set<std::string>;
using LemmaDict = std::unordered_map<std::string, std::string>;

struct PrepConfig {
  StopwordSet stopwords;  // union of all configured language sets
  LemmaDict lemmas;
  bool keep_hashtag_bodies = true;
};

// One token per line; merges into `into` so several language files
// can be stacked.
void load_stopwords(const std::filesystem::path& path, StopwordSet& into);

// Two-column surface<TAB>lemma file. Rejects non-idempotent entries
// (a lemma that is itself mapped to something else).
LemmaDict load_lemma_dict(const std::filesystem::path& path);

// The six cleanup steps, in order: lowercase, whitespace tokenize,
// link removal, strip to [a-z], stopword removal, lemma lookup.
std::vector<std::string> preprocess(std::string_view raw, const PrepConfig& cfg);

std::string lemmatize(std::string_view token, const LemmaDict& lemmas);

}  // namespace emolag::textprep

#endif  // EMOLAG_TEXTPREP_HPP
