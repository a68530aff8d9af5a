#include "docsearch/records.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include "docsearch/errors.hpp"

namespace docsearch {

const char* to_string(DocStatus status) {
  switch (status) {
    case DocStatus::uploaded: return "uploaded";
    case DocStatus::processing: return "processing";
    case DocStatus::indexed: return "indexed";
    case DocStatus::failed: return "failed";
  }
  return "unknown";
}

DocStatus doc_status_from_string(const std::string& s) {
  if (s == "uploaded") return DocStatus::uploaded;
  if (s == "processing") return DocStatus::processing;
  if (s == "indexed") return DocStatus::indexed;
  if (s == "failed") return DocStatus::failed;
  throw Error(ErrorCode::validation, "unknown document status: " + s);
}

std::string make_child_id(const std::string& doc_id, int page, int ordinal) {
  return doc_id + ":" + std::to_string(page) + ":" + std::to_string(ordinal);
}

std::string rfc3339_utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec);
  return buf;
}

}  // namespace docsearch
