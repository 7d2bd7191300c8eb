#pragma once

#include <string>
#include <utility>
#include <vector>

/// Deterministic text output. Floats are printed with %.17g (shortest
/// representation padded to 17 significant digits), which round-trips doubles
/// exactly and keeps repeated runs byte-identical.
namespace spinphase::io {

std::string format_double(double v);

/// Flat JSON object with insertion-ordered keys.
class JsonWriter {
 public:
  void add(const std::string& key, double value);
  void add(const std::string& key, const std::string& value);
  void add_int(const std::string& key, long long value);
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> items_;  // key -> rendered value
};

/// Writes a CSV with a mandatory header row; one row per call.
class CsvWriter {
 public:
  CsvWriter(std::string path, const std::vector<std::string>& header);
  void row(const std::vector<double>& values);
  /// Flushes and closes; returns the rendered contents written.
  void close();
  ~CsvWriter();

 private:
  std::string path_;
  std::string buffer_;
  std::size_t columns_;
  bool closed_ = false;
};

void write_text_file(const std::string& path, const std::string& content);

}  // namespace spinphase::io
