#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace aces {

// Raised for any malformed or invalid input (files, dimensions, parameters).
// The CLI maps it to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for filesystem problems (missing file, write failure). Exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Binary n x m execution-outcome matrix. Entry (i, j) is 1 iff candidate i
// passes test j. Immutable after construction.
struct PassMatrix {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::uint8_t> entries;  // row-major, values 0/1
  std::vector<std::string> candidate_ids;
  std::vector<std::string> test_ids;

  std::uint8_t at(std::size_t i, std::size_t j) const { return entries[i * m + j]; }

  std::size_t row_sum(std::size_t i) const;
  std::size_t col_sum(std::size_t j) const;
  bool column_constant(std::size_t j) const;

  // Enforces the type invariants; throws ValidationError.
  void validate() const;

  bool operator==(const PassMatrix&) const = default;
};

struct LabelVector {
  std::vector<std::uint8_t> values;  // 1 = truly correct

  std::size_t n_pos() const;
  std::size_t n_neg() const { return values.size() - n_pos(); }
  double pi() const { return static_cast<double>(n_pos()) / static_cast<double>(values.size()); }

  bool operator==(const LabelVector&) const = default;
};

struct PrefilterResult {
  std::vector<std::size_t> kept_indices;  // ascending row indices into the source
  PassMatrix submatrix;
};

enum class FileFormat { json, csv };

struct LoadedMatrix {
  PassMatrix matrix;
  std::optional<LabelVector> labels;
};

// Structured-text ingestion. JSON: {"candidates", "tests", "matrix", "labels"?}.
// CSV: header row of test ids (optionally prefixed by an id column header),
// then one row per candidate with the candidate id in column 0. Entries must
// be the integer literals 0 or 1; booleans and floats are rejected.
LoadedMatrix load_pass_matrix(std::istream& in, FileFormat format);
LoadedMatrix load_pass_matrix_file(const std::string& path,
                                   std::optional<FileFormat> format = std::nullopt);

void save_pass_matrix(const PassMatrix& matrix, const std::optional<LabelVector>& labels,
                      std::ostream& out, FileFormat format);
void save_pass_matrix_file(const PassMatrix& matrix, const std::optional<LabelVector>& labels,
                           const std::string& path, FileFormat format);

// Labels sidecar for the CSV route: one 0/1 per line.
LabelVector load_labels_file(const std::string& path);

struct ConstantColumnResult {
  PassMatrix matrix;
  std::vector<std::string> removed_test_ids;
};

// Drops every column whose empirical pass rate is 0 or 1. Column order is
// preserved among survivors. Throws if nothing survives: downstream methods
// are undefined on an all-constant matrix.
ConstantColumnResult remove_constant_columns(const PassMatrix& matrix);

// Top-K candidate pre-filter by unweighted row sum, descending. Boundary ties
// are broken by ascending row index so the selection is deterministic.
PrefilterResult prefilter_top_k(const PassMatrix& matrix, std::size_t k);

}  // namespace aces
