#include "spinphase/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace spinphase::io {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

void JsonWriter::add(const std::string& key, double value) {
  items_.emplace_back(key, format_double(value));
}

void JsonWriter::add(const std::string& key, const std::string& value) {
  items_.emplace_back(key, "\"" + escape(value) + "\"");
}

void JsonWriter::add_int(const std::string& key, long long value) {
  items_.emplace_back(key, std::to_string(value));
}

std::string JsonWriter::str() const {
  std::string out = "{\n";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    out += "  \"" + escape(items_[i].first) + "\": " + items_[i].second;
    if (i + 1 < items_.size()) out += ",";
    out += "\n";
  }
  out += "}\n";
  return out;
}

CsvWriter::CsvWriter(std::string path, const std::vector<std::string>& header)
    : path_(std::move(path)), columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    buffer_ += header[i];
    if (i + 1 < header.size()) buffer_ += ',';
  }
  buffer_ += '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != columns_)
    throw std::invalid_argument("CsvWriter: row width does not match header");
  for (std::size_t i = 0; i < values.size(); ++i) {
    buffer_ += format_double(values[i]);
    if (i + 1 < values.size()) buffer_ += ',';
  }
  buffer_ += '\n';
}

void CsvWriter::close() {
  if (closed_) return;
  write_text_file(path_, buffer_);
  closed_ = true;
}

CsvWriter::~CsvWriter() {
  try {
    close();
  } catch (...) {
    // destructor must not throw; an explicit close() surfaces write errors
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace spinphase::io
