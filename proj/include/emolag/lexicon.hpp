#ifndef EMOLAG_LEXICON_HPP
#define EMOLAG_LEXICON_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace emolag::lexicon {

// Category lexicon. Entries are unigrams ("case") or underscore-joined
// bigrams ("test_positive"); multiword phrases are normalized to the
// underscore form at load time. Immutable once built: scoring indexes
// are derived in the constructor.
class Lexicon {
 public:
  explicit Lexicon(std::map<std::string, std::set<std::string>> categories);

  const std::vector<std::string>& categories() const { return names_; }
  std::size_t size() const { return names_.size(); }
  int category_index(std::string_view name) const;  // -1 when absent
  const std::set<std::string>& entries(std::string_view category) const;
  bool contains(std::string_view category, std::string_view entry) const;

  std::map<std::string, std::set<std::string>> as_map() const;

  // category ids hit by a unigram / joined bigram, empty when none
  std::span<const std::uint32_t> unigram_hits(const std::string& token) const;
  std::span<const std::uint32_t> bigram_hits(const std::string& joined) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::set<std::string>> entries_;
  std::unordered_map<std::string, std::vector<std::uint32_t>> unigrams_, bigrams_;
};

struct LexiconModification {
  std::string category;
  std::vector<std::string> add_tokens;
  std::vector<std::string> remove_tokens;
  bool create_if_missing = false;
};

struct CategoryScores {
  std::map<std::string, std::uint32_t> raw;  // only categories with hits
  std::size_t total_tokens = 0;

  std::uint32_t raw_of(const std::string& category) const {
    const auto it = raw.find(category);
    return it != raw.end() ? it->second : 0u;
  }
  // raw / max(total_tokens, 1)
  double normalized_of(const std::string& category) const {
    return static_cast<double>(raw_of(category)) /
           static_cast<double>(total_tokens > 0 ? total_tokens : 1);
  }
};

struct SentimentLexicon {
  std::unordered_set<std::string> positive;
  std::unordered_set<std::string> negative;
};

// Accepts two layouts, mixed freely: "category<TAB>entry" lines, or a
// category header line followed by indented entry lines.
Lexicon load_lexicon(const std::filesystem::path& path);

// Modification file: blocks of "category:", "add:", "remove:",
// "create:" lines, blank-line separated.
std::vector<LexiconModification> load_modifications(const std::filesystem::path& path);

// Copy of `lex` with every add applied and every remove dropped.
Lexicon apply_modifications(const Lexicon& lex, std::span<const LexiconModification> mods);

// Counts unigram hits plus adjacent-pair bigram hits per category.
CategoryScores score(std::span<const std::string> tokens, const Lexicon& lex);

// Counting core behind score(): hit counts per category id into a
// preallocated vector of lex.size() zeros.
void score_into(std::span<const std::string> tokens, const Lexicon& lex,
                std::vector<std::uint32_t>& counts);

// Same lexicon format with exactly the categories "positive" and "negative".
SentimentLexicon load_sentiment_lexicon(const std::filesystem::path& path);

// +1 / -1 / 0
int sentiment_of(std::string_view token, const SentimentLexicon& slex);

// "positive case" -> "positive_case"; lowercases as well.
std::string normalize_entry(std::string_view entry);

}  // namespace emolag::lexicon

#endif  // EMOLAG_LEXICON_HPP
