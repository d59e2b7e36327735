// Copyright 2026 The Meanpart Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "meanpart/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "meanpart/error.hpp"
#include "meanpart/report.hpp"

namespace meanpart {
namespace {

std::string line_error(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',' ||
                               line[i] == '\r'))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != ',' &&
           line[i] != '\r')
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<long long> to_integer(std::string_view token) {
  long long v = 0;
  const auto* end = token.data() + token.size();
  const auto res = std::from_chars(token.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) return std::nullopt;
  return v;
}

// Parses `ell=<k> m=<n>`; returns false if the line is not a header.
bool parse_header(std::string_view line, std::size_t line_no, std::size_t& ell, std::size_t& m) {
  const auto tokens = split_tokens(line);
  if (tokens.empty() || tokens.front().find('=') == std::string_view::npos) return false;
  bool have_ell = false, have_m = false;
  for (auto tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos)
      fail(ErrorCode::kParseError, line_error(line_no, "malformed header token"));
    const auto key = tok.substr(0, eq);
    const auto value = to_integer(tok.substr(eq + 1));
    if (!value || *value <= 0)
      fail(ErrorCode::kParseError, line_error(line_no, "header values must be positive integers"));
    if (key == "ell") {
      ell = static_cast<std::size_t>(*value);
      have_ell = true;
    } else if (key == "m") {
      m = static_cast<std::size_t>(*value);
      have_m = true;
    } else {
      fail(ErrorCode::kParseError, line_error(line_no, "unknown header key"));
    }
  }
  if (!have_ell || !have_m)
    fail(ErrorCode::kParseError, line_error(line_no, "header needs both ell and m"));
  return true;
}

}  // namespace

LabelFile parse_label_text(std::string_view text, std::optional<std::size_t> ell) {
  LabelFile file;
  bool header_seen = false;
  bool first_content = true;
  std::size_t line_no = 0;
  std::vector<std::size_t> row_lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (first_content) {
      first_content = false;
      if (parse_header(line, line_no, file.ell, file.m)) {
        header_seen = true;
        continue;
      }
    }
    std::vector<int> row;
    for (auto tok : split_tokens(line)) {
      const auto v = to_integer(tok);
      if (!v) fail(ErrorCode::kParseError, line_error(line_no, "'" + std::string(tok) +
                                                                   "' is not an integer label"));
      if (*v < 0 || *v > 1'000'000)
        fail(ErrorCode::kLabelOutOfRange, line_error(line_no, "label " + std::to_string(*v) +
                                                                  " out of range"));
      row.push_back(static_cast<int>(*v));
    }
    file.rows.push_back(std::move(row));
    row_lines.push_back(line_no);
    if (end == text.size()) break;
  }

  if (file.rows.empty()) fail(ErrorCode::kParseError, "no clusterings in label file");
  if (header_seen && ell && *ell != file.ell)
    fail(ErrorCode::kParseError, "header ell=" + std::to_string(file.ell) +
                                     " disagrees with requested ell=" + std::to_string(*ell));
  if (!header_seen) {
    file.m = file.rows.front().size();
    if (ell) {
      file.ell = *ell;
    } else {
      int top = 0;
      for (const auto& r : file.rows)
        for (int v : r) top = std::max(top, v);
      file.ell = static_cast<std::size_t>(top) + 1;
    }
  }
  if (file.ell == 0) fail(ErrorCode::kParseError, "ell must be positive");
  for (std::size_t r = 0; r < file.rows.size(); ++r) {
    if (file.rows[r].size() != file.m)
      fail(ErrorCode::kParseError,
           line_error(row_lines[r], "expected " + std::to_string(file.m) + " labels, found " +
                                        std::to_string(file.rows[r].size())));
    for (int v : file.rows[r])
      if (static_cast<std::size_t>(v) >= file.ell)
        fail(ErrorCode::kLabelOutOfRange,
             line_error(row_lines[r], "label " + std::to_string(v) + " not below ell=" +
                                          std::to_string(file.ell)));
  }
  return file;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIoError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) fail(ErrorCode::kIoError, "short write to '" + path.string() + "'");
}

LabelFile read_label_file(const std::filesystem::path& path, std::optional<std::size_t> ell) {
  return parse_label_text(read_text_file(path), ell);
}

std::string format_label_file(const Sample& sample) {
  std::ostringstream out;
  out << "ell=" << sample.ell() << " m=" << sample.m() << '\n';
  for (const auto& p : sample) {
    const auto labels = p.canonical().labels();
    for (std::size_t j = 0; j < labels.size(); ++j) out << (j ? " " : "") << labels[j];
    out << '\n';
  }
  return out.str();
}

void write_label_file(const std::filesystem::path& path, const Sample& sample) {
  write_text_file(path, format_label_file(sample));
}

Sample to_sample(const LabelFile& file) {
  std::vector<Partition> parts;
  parts.reserve(file.rows.size());
  for (const auto& r : file.rows) parts.emplace_back(LabeledPartition::from_labels(r, file.ell));
  return Sample(std::move(parts));
}

Sample parse_labels(const std::filesystem::path& path, std::optional<std::size_t> ell) {
  return to_sample(read_label_file(path, ell));
}

Sample load_sample(const std::filesystem::path& path, std::optional<std::size_t> ell) {
  if (path.extension() != ".json") return parse_labels(path, ell);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParseError, "'" + path.string() + "': " + e.what());
  }
  std::vector<Partition> parts;
  if (doc.is_array()) {
    for (const auto& item : doc) parts.push_back(partition_from_json(item));
  } else {
    parts.push_back(partition_from_json(doc));
  }
  if (ell && !parts.empty() && parts.front().ell() != *ell)
    fail(ErrorCode::kParseError, "JSON partitions disagree with requested ell");
  return Sample(std::move(parts));
}

}  // namespace meanpart
