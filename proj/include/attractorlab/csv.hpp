#pragma once

#include <cstdio>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "attractorlab/fields.hpp"

// Comma-separated numeric tables: header row, %.17g floats, LF endings.
namespace alab::csv {

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double v);

class Writer {
 public:
  Writer(const std::filesystem::path& path, std::vector<std::string> header);
  ~Writer();
  Writer(const Writer&) = delete;
  Writer& operator=(const Writer&) = delete;

  void row(std::span<const double> values);
  void row(std::initializer_list<double> values) { row(std::span<const double>(values.begin(), values.size())); }

  /// Flushes and closes; throws CsvError if any write failed.
  void close();

  std::size_t rows() const { return rows_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::size_t columns_;
  std::FILE* file_ = nullptr;
  std::size_t rows_ = 0;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Index of a named column; throws CsvError naming the missing column.
  std::size_t column(std::string_view name) const;
  std::vector<double> values(std::string_view name) const;
};

/// Parses a numeric CSV with a header row. Errors name the line number.
Table read(const std::filesystem::path& path);

/// snap_<8-digit step>.csv
std::string snapshot_name(std::size_t step);

/// Columns x, psi_re, psi_im, pi_re, pi_im. Returns the number of data rows.
std::size_t write_snapshot(const std::filesystem::path& path, const FieldState& state);

/// Reads a snapshot written by write_snapshot; the grid is rebuilt from x.
FieldState read_snapshot(const std::filesystem::path& path, double t = 0.0);

}  // namespace alab::csv
