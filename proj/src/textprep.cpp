#include "emolag/textprep.hpp"

#include <fstream>

#include "emolag/errors.hpp"
#include "emolag/strings.hpp"

namespace emolag::textprep {

void load_stopwords(const std::filesystem::path& path, StopwordSet& into) {
  std::ifstream in(path);
  if (!in) throw UnreadablePath("cannot open " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (!t.empty()) into.insert(to_lower_ascii(t));
  }
}

LemmaDict load_lemma_dict(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UnreadablePath("cannot open " + path.string());
  LemmaDict dict;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto tab = t.find('\t');
    if (tab == std::string_view::npos)
      throw ParseError(path.string() + ":" + std::to_string(lineno) +
                       ": expected surface<TAB>lemma");
    const std::string surface = to_lower_ascii(trim(t.substr(0, tab)));
    const std::string lemma = to_lower_ascii(trim(t.substr(tab + 1)));
    if (surface.empty() || lemma.empty())
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": empty field");
    dict[surface] = lemma;
  }
  // lemma(lemma(x)) must equal lemma(x)
  for (const auto& [surface, lemma] : dict) {
    const auto it = dict.find(lemma);
    if (it != dict.end() && it->second != lemma)
      throw ParseError(path.string() + ": lemma dictionary not idempotent at '" + surface +
                       "' -> '" + lemma + "' -> '" + it->second + "'");
  }
  return dict;
}

std::string lemmatize(std::string_view token, const LemmaDict& lemmas) {
  const auto it = lemmas.find(std::string(token));
  return it != lemmas.end() ? it->second : std::string(token);
}

namespace {

inline bool is_space_byte(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool looks_like_link(std::string_view token) {
  return token.find("http") != std::string_view::npos ||
         token.find("www.") != std::string_view::npos ||
         token.find("://") != std::string_view::npos;
}

}  // namespace

std::vector<std::string> preprocess(std::string_view raw, const PrepConfig& cfg) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  std::string token, stripped;
  while (pos < raw.size()) {
    while (pos < raw.size() && is_space_byte(raw[pos])) ++pos;
    std::size_t end = pos;
    while (end < raw.size() && !is_space_byte(raw[end])) ++end;
    if (end == pos) break;

    token.assign(raw.substr(pos, end - pos));
    pos = end;
    for (char& c : token)
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');

    if (looks_like_link(token)) continue;
    if (!cfg.keep_hashtag_bodies && token.front() == '#') continue;

    stripped.clear();
    for (char c : token)
      if (c >= 'a' && c <= 'z') stripped += c;
    if (stripped.empty()) continue;

    if (cfg.stopwords.contains(stripped)) continue;

    const auto it = cfg.lemmas.find(stripped);
    out.push_back(it != cfg.lemmas.end() ? it->second : stripped);
  }
  return out;
}

}  // namespace emolag::textprep
