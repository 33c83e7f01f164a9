#ifndef EMOLAG_DOCUMENT_HPP
#define EMOLAG_DOCUMENT_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace emolag::corpus {

enum class Source { Tweet, Bulletin };

const char* source_name(Source s);  // "Tweet" / "Bulletin"

// One time-stamped text item. `region` is empty for national-level
// documents that have not been assigned to a state.
struct Document {
  std::string id;
  std::int64_t timestamp = 0;  // seconds since epoch, UTC
  std::string region;
  Source source = Source::Tweet;
  std::string text;
  std::optional<std::string> user_location;
};

}  // namespace emolag::corpus

#endif  // EMOLAG_DOCUMENT_HPP
