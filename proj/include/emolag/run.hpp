#ifndef EMOLAG_RUN_HPP
#define EMOLAG_RUN_HPP

#include <map>
#include <string>

#include "emolag/config.hpp"

namespace emolag {

struct IngestReport {
  std::size_t tweets_loaded = 0;
  std::size_t bulletins_loaded = 0;
  std::size_t tweets_skipped = 0;
  std::size_t bulletins_skipped = 0;
  std::size_t window_dropped = 0;
  std::size_t foreign_dropped = 0;
  std::size_t dedup_dropped = 0;
  std::size_t store_documents = 0;
  std::map<std::string, std::size_t> per_region;
};

// Normalizes the raw corpora into a line-delimited document store and
// writes an ingest report next to it.
IngestReport run_ingest(const RunConfig& cfg);

struct RunOutputs {
  // filename (relative to out_dir) -> contents, already written to disk
  std::map<std::string, std::string> files;
  std::vector<std::string> warnings;  // gap fills and other non-fatal notes
};

// Full pipeline over the ingested store: series CSVs, ADF and Granger
// tables per region, chatterplot and corpus stats, each stamped with
// the config hash. Partial outputs are removed when a stage fails.
RunOutputs run_analyze(const RunConfig& cfg);

// Single-stage variants of run_analyze.
RunOutputs run_adf(const RunConfig& cfg);
RunOutputs run_granger(const RunConfig& cfg);
RunOutputs run_chatterplot(const RunConfig& cfg);
RunOutputs run_stats(const RunConfig& cfg);

}  // namespace emolag

#endif  // EMOLAG_RUN_HPP
