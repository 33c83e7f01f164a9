#include "emolag/lexicon.hpp"

#include <fstream>

#include "emolag/errors.hpp"
#include "emolag/strings.hpp"

namespace emolag::lexicon {

std::string normalize_entry(std::string_view entry) {
  std::string out = to_lower_ascii(trim(entry));
  for (char& c : out)
    if (c == ' ' || c == '\t') c = '_';
  // collapse runs of underscores from multi-space phrases
  std::string squeezed;
  for (char c : out)
    if (c != '_' || (!squeezed.empty() && squeezed.back() != '_')) squeezed += c;
  while (!squeezed.empty() && squeezed.back() == '_') squeezed.pop_back();
  while (!squeezed.empty() && squeezed.front() == '_') squeezed.erase(squeezed.begin());
  return squeezed;
}

Lexicon::Lexicon(std::map<std::string, std::set<std::string>> categories) {
  names_.reserve(categories.size());
  entries_.reserve(categories.size());
  for (auto& [name, entries] : categories) {
    const auto id = static_cast<std::uint32_t>(names_.size());
    names_.push_back(name);
    for (const auto& e : entries) {
      if (e.find('_') == std::string::npos)
        unigrams_[e].push_back(id);
      else
        bigrams_[e].push_back(id);
    }
    entries_.push_back(std::move(entries));
  }
}

int Lexicon::category_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

const std::set<std::string>& Lexicon::entries(std::string_view category) const {
  const int idx = category_index(category);
  if (idx < 0) throw UnknownCategory("no such category: " + std::string(category));
  return entries_[static_cast<std::size_t>(idx)];
}

bool Lexicon::contains(std::string_view category, std::string_view entry) const {
  const int idx = category_index(category);
  if (idx < 0) return false;
  return entries_[static_cast<std::size_t>(idx)].contains(normalize_entry(entry));
}

std::map<std::string, std::set<std::string>> Lexicon::as_map() const {
  std::map<std::string, std::set<std::string>> out;
  for (std::size_t i = 0; i < names_.size(); ++i) out[names_[i]] = entries_[i];
  return out;
}

std::span<const std::uint32_t> Lexicon::unigram_hits(const std::string& token) const {
  const auto it = unigrams_.find(token);
  return it != unigrams_.end() ? std::span<const std::uint32_t>(it->second)
                               : std::span<const std::uint32_t>{};
}

std::span<const std::uint32_t> Lexicon::bigram_hits(const std::string& joined) const {
  const auto it = bigrams_.find(joined);
  return it != bigrams_.end() ? std::span<const std::uint32_t>(it->second)
                              : std::span<const std::uint32_t>{};
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UnreadablePath("cannot open " + path.string());

  std::map<std::string, std::set<std::string>> cats;
  std::string current;  // active header-style category
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    if (trim(line).front() == '#') continue;
    const bool indented = line.front() == ' ' || line.front() == '\t';
    const auto tab = line.find('\t');

    if (!indented && tab != std::string::npos) {
      // category<TAB>entry
      const std::string cat = to_lower_ascii(trim(line.substr(0, tab)));
      const std::string entry = normalize_entry(line.substr(tab + 1));
      if (cat.empty() || entry.empty())
        throw ParseError(path.string() + ":" + std::to_string(lineno) + ": empty field");
      cats[cat].insert(entry);
      current.clear();
    } else if (!indented) {
      // header line
      const std::string cat = to_lower_ascii(trim(line));
      if (cats.contains(cat))
        throw DuplicateCategory(path.string() + ":" + std::to_string(lineno) +
                                ": duplicate category '" + cat + "'");
      cats[cat];  // create
      current = cat;
    } else {
      if (current.empty())
        throw ParseError(path.string() + ":" + std::to_string(lineno) +
                         ": indented entry without a category header");
      const std::string entry = normalize_entry(line);
      if (!entry.empty()) cats[current].insert(entry);
    }
  }
  if (cats.empty()) throw EmptyLexicon("no categories in " + path.string());
  return Lexicon(std::move(cats));
}

std::vector<LexiconModification> load_modifications(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UnreadablePath("cannot open " + path.string());
  std::vector<LexiconModification> mods;
  LexiconModification cur;
  bool open = false;
  auto flush = [&]() {
    if (open) mods.push_back(std::move(cur));
    cur = LexiconModification{};
    open = false;
  };
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto colon = t.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected key: value");
    const auto key = trim(t.substr(0, colon));
    const auto value = t.substr(colon + 1);
    if (key == "category") {
      flush();
      cur.category = to_lower_ascii(trim(value));
      open = true;
    } else if (!open) {
      throw ParseError(path.string() + ":" + std::to_string(lineno) +
                       ": '" + std::string(key) + "' before any category");
    } else if (key == "add") {
      for (const auto& e : split_list(value)) cur.add_tokens.push_back(normalize_entry(e));
    } else if (key == "remove") {
      for (const auto& e : split_list(value)) cur.remove_tokens.push_back(normalize_entry(e));
    } else if (key == "create") {
      const auto v = to_lower_ascii(trim(value));
      cur.create_if_missing = (v == "true" || v == "yes" || v == "1");
    } else {
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": unknown key '" +
                       std::string(key) + "'");
    }
  }
  flush();
  return mods;
}

Lexicon apply_modifications(const Lexicon& lex, std::span<const LexiconModification> mods) {
  auto cats = lex.as_map();
  for (const auto& mod : mods) {
    auto it = cats.find(mod.category);
    if (it == cats.end()) {
      if (!mod.create_if_missing)
        throw UnknownCategory("modification targets unknown category '" + mod.category + "'");
      it = cats.emplace(mod.category, std::set<std::string>{}).first;
    }
    for (const auto& e : mod.add_tokens) it->second.insert(e);
    for (const auto& e : mod.remove_tokens) it->second.erase(e);
  }
  return Lexicon(std::move(cats));
}

void score_into(std::span<const std::string> tokens, const Lexicon& lex,
                std::vector<std::uint32_t>& counts) {
  std::string joined;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (const auto id : lex.unigram_hits(tokens[i])) ++counts[id];
    if (i + 1 < tokens.size()) {
      joined.assign(tokens[i]);
      joined += '_';
      joined += tokens[i + 1];
      for (const auto id : lex.bigram_hits(joined)) ++counts[id];
    }
  }
}

CategoryScores score(std::span<const std::string> tokens, const Lexicon& lex) {
  std::vector<std::uint32_t> counts(lex.size(), 0);
  score_into(tokens, lex, counts);
  CategoryScores scores;
  scores.total_tokens = tokens.size();
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > 0) scores.raw[lex.categories()[i]] = counts[i];
  return scores;
}

SentimentLexicon load_sentiment_lexicon(const std::filesystem::path& path) {
  const Lexicon lex = load_lexicon(path);
  SentimentLexicon slex;
  for (const auto& name : lex.categories()) {
    if (name != "positive" && name != "negative")
      throw ParseError(path.string() + ": sentiment lexicon may only contain 'positive' and 'negative', got '" +
                       name + "'");
  }
  if (lex.category_index("positive") >= 0)
    for (const auto& e : lex.entries("positive")) slex.positive.insert(e);
  if (lex.category_index("negative") >= 0)
    for (const auto& e : lex.entries("negative")) slex.negative.insert(e);
  for (const auto& w : slex.positive)
    if (slex.negative.contains(w))
      throw ParseError(path.string() + ": '" + w + "' is both positive and negative");
  return slex;
}

int sentiment_of(std::string_view token, const SentimentLexicon& slex) {
  const std::string t(token);
  if (slex.positive.contains(t)) return 1;
  if (slex.negative.contains(t)) return -1;
  return 0;
}

}  // namespace emolag::lexicon
