#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ternalg/document.hpp"
#include "ternalg/report.hpp"

namespace ternalg {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct ParseOptions {
  /// Fill alternating orientations of listed bracket entries instead of requiring them.
  bool complete_skew = false;
};

/// Messages describing entries filled by skew completion.
using CompletionLog = std::vector<std::string>;

Json document_to_json(const Document& d);
/// Throws Error(ParseError) naming the offending field.
Document document_from_json(const Json& j, const ParseOptions& options = {}, CompletionLog* log = nullptr);

/// Pretty-printed with a trailing newline.
std::string serialize_document(const Document& d);
/// Throws Error(ParseError) naming the line and column for malformed JSON.
Document parse_document(std::string_view text, const ParseOptions& options = {}, CompletionLog* log = nullptr);

Json report_to_json(const CheckReport& r);
CheckReport report_from_json(const Json& j);
std::string serialize_report(const CheckReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace ternalg
