#ifndef EMOLAG_PIPELINE_HPP
#define EMOLAG_PIPELINE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "emolag/corpus.hpp"
#include "emolag/econ.hpp"
#include "emolag/lexicon.hpp"
#include "emolag/series.hpp"
#include "emolag/textprep.hpp"

// Data-parallel kernels for the document-level stages, OpenMP across
// documents (or category pairs), each paired with a serial reference
// used by the tests and the benchmark. Every kernel is schedule
// independent: per-item results land in preassigned slots and floating
// point reductions happen in a fixed order, so parallel output is
// bit-identical to the serial path.

namespace emolag::pipeline {

// Per-document scoring result, compact form of lexicon::CategoryScores.
struct DocScore {
  Day day = 0;
  std::uint32_t total_tokens = 0;
  std::vector<std::uint32_t> raw;  // by lexicon category id

  bool operator==(const DocScore&) const = default;
};

DocScore score_one(const corpus::Document& doc, const textprep::PrepConfig& cfg,
                   const lexicon::Lexicon& lex, int utc_offset_minutes);

std::vector<DocScore> score_documents_serial(std::span<const corpus::Document> docs,
                                             const textprep::PrepConfig& cfg,
                                             const lexicon::Lexicon& lex,
                                             int utc_offset_minutes = 0);

std::vector<DocScore> score_documents(std::span<const corpus::Document> docs,
                                      const textprep::PrepConfig& cfg,
                                      const lexicon::Lexicon& lex,
                                      int utc_offset_minutes = 0);

// Token frequencies over all documents (after preprocessing).
std::map<std::string, std::uint64_t> count_tokens_serial(
    std::span<const corpus::Document> docs, const textprep::PrepConfig& cfg);

std::map<std::string, std::uint64_t> count_tokens(std::span<const corpus::Document> docs,
                                                  const textprep::PrepConfig& cfg);

// Daily series for every lexicon category of one (region, source)
// selection, reduced in document order from precomputed scores.
// Matches series::aggregate over (Document, CategoryScores) pairs.
std::map<std::string, series::EmotionSeries> build_all_series(
    std::span<const corpus::Document> docs, std::span<const DocScore> scores,
    const lexicon::Lexicon& lex, const std::string& region, corpus::Source source,
    const series::AggregateOptions& opts);

// econ::granger_pairwise with the category fan-out parallelized.
std::vector<econ::GrangerRecord> granger_pairwise_parallel(
    const std::map<std::string, series::EmotionSeries>& bulletin,
    const std::map<std::string, series::EmotionSeries>& tweets, int max_p);

}  // namespace emolag::pipeline

#endif  // EMOLAG_PIPELINE_HPP
