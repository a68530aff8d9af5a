#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace docsearch {

enum class DocStatus { uploaded, processing, indexed, failed };

const char* to_string(DocStatus status);
DocStatus doc_status_from_string(const std::string& s);

// Metadata record for one uploaded document. Status only moves along
// uploaded -> processing -> (indexed | failed); failure_reason is present
// exactly when status == failed.
struct DocumentRecord {
  std::string doc_id;
  std::string filename;
  std::string upload_time;  // RFC 3339 UTC
  std::size_t total_pages = 0;
  DocStatus status = DocStatus::uploaded;
  std::optional<std::string> failure_reason;

  bool operator==(const DocumentRecord&) const = default;
};

// One fixed-size text segment of a page; the unit of indexing and retrieval.
// char_start counts Unicode scalars from the beginning of the page text.
struct ChunkRecord {
  std::string chunk_id;
  std::string parent_doc_id;
  int page_number = 0;
  std::size_t char_start = 0;
  std::string text;
  bool text_processed = false;

  bool operator==(const ChunkRecord&) const = default;
};

struct FigureRecord {
  std::string figure_id;
  std::string parent_doc_id;
  int page_number = 0;
  std::string caption;
  std::optional<std::string> ocr_text;

  bool operator==(const FigureRecord&) const = default;
};

struct TableRecord {
  std::string table_id;
  std::string parent_doc_id;
  int page_number = 0;
  std::optional<std::string> caption;
  std::string markdown;  // non-empty

  bool operator==(const TableRecord&) const = default;
};

// Child record ids follow "{doc_id}:{page}:{ordinal}"; the deterministic
// scheme keeps parallel and sequential ingests byte-identical.
std::string make_child_id(const std::string& doc_id, int page, int ordinal);

// Current time as RFC 3339 UTC with second precision.
std::string rfc3339_utc_now();

}  // namespace docsearch
