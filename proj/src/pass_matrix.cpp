#include "aces/pass_matrix.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace aces {

namespace {

using nlohmann::ordered_json;

void check_unique(const std::vector<std::string>& ids, const char* what) {
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!seen.insert(ids[i]).second) {
      throw ValidationError("duplicate " + std::string(what) + " id \"" + ids[i] +
                            "\" at index " + std::to_string(i));
    }
  }
}

std::uint8_t parse_binary_json(const nlohmann::json& v, std::size_t row, std::size_t col) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw ValidationError("non-binary entry at (row " + std::to_string(row) + ", col " +
                          std::to_string(col) + "): entries must be integer 0 or 1");
  }
  const std::int64_t x = v.get<std::int64_t>();
  if (x != 0 && x != 1) {
    throw ValidationError("non-binary entry at (row " + std::to_string(row) + ", col " +
                          std::to_string(col) + "): got " + std::to_string(x));
  }
  return static_cast<std::uint8_t>(x);
}

LoadedMatrix load_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("candidates") || !doc.contains("tests") ||
      !doc.contains("matrix")) {
    throw ValidationError("matrix file must be an object with candidates/tests/matrix");
  }

  LoadedMatrix result;
  PassMatrix& pm = result.matrix;
  for (const auto& c : doc.at("candidates")) pm.candidate_ids.push_back(c.get<std::string>());
  for (const auto& t : doc.at("tests")) pm.test_ids.push_back(t.get<std::string>());
  pm.n = pm.candidate_ids.size();
  pm.m = pm.test_ids.size();

  const auto& rows = doc.at("matrix");
  if (!rows.is_array() || rows.size() != pm.n) {
    throw ValidationError("dimension mismatch: matrix has " + std::to_string(rows.size()) +
                          " rows, expected " + std::to_string(pm.n));
  }
  pm.entries.reserve(pm.n * pm.m);
  for (std::size_t i = 0; i < pm.n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != pm.m) {
      throw ValidationError("dimension mismatch at row " + std::to_string(i) + ": got " +
                            std::to_string(row.size()) + " entries, expected " +
                            std::to_string(pm.m));
    }
    for (std::size_t j = 0; j < pm.m; ++j) pm.entries.push_back(parse_binary_json(row[j], i, j));
  }

  if (doc.contains("labels") && !doc.at("labels").is_null()) {
    const auto& labels = doc.at("labels");
    if (!labels.is_array() || labels.size() != pm.n) {
      throw ValidationError("labels length " + std::to_string(labels.size()) +
                            " does not match n = " + std::to_string(pm.n));
    }
    LabelVector lv;
    for (std::size_t i = 0; i < pm.n; ++i) lv.values.push_back(parse_binary_json(labels[i], i, 0));
    result.labels = std::move(lv);
  }

  pm.validate();
  return result;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  cells.push_back(cur);
  return cells;
}

std::uint8_t parse_binary_csv(const std::string& tok, std::size_t row, std::size_t col) {
  if (tok == "0") return 0;
  if (tok == "1") return 1;
  throw ValidationError("non-binary entry at (row " + std::to_string(row) + ", col " +
                        std::to_string(col) + "): \"" + tok + "\"");
}

LoadedMatrix load_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("empty csv stream");
  std::vector<std::string> header = split_csv_line(line);
  // Accept an optional leading id-column header ("id" or empty).
  std::size_t header_skip = (!header.empty() && (header[0] == "id" || header[0].empty())) ? 1 : 0;

  LoadedMatrix result;
  PassMatrix& pm = result.matrix;
  pm.test_ids.assign(header.begin() + static_cast<std::ptrdiff_t>(header_skip), header.end());
  pm.m = pm.test_ids.size();

  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != pm.m + 1) {
      throw ValidationError("dimension mismatch at row " + std::to_string(row) + ": got " +
                            std::to_string(cells.size()) + " cells, expected " +
                            std::to_string(pm.m + 1));
    }
    pm.candidate_ids.push_back(cells[0]);
    for (std::size_t j = 0; j < pm.m; ++j)
      pm.entries.push_back(parse_binary_csv(cells[j + 1], row, j));
    ++row;
  }
  pm.n = row;
  pm.validate();
  return result;
}

}  // namespace

std::size_t PassMatrix::row_sum(std::size_t i) const {
  std::size_t s = 0;
  for (std::size_t j = 0; j < m; ++j) s += at(i, j);
  return s;
}

std::size_t PassMatrix::col_sum(std::size_t j) const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += at(i, j);
  return s;
}

bool PassMatrix::column_constant(std::size_t j) const {
  const std::size_t s = col_sum(j);
  return s == 0 || s == n;
}

void PassMatrix::validate() const {
  if (n < 2) throw ValidationError("need at least 2 candidates, got " + std::to_string(n));
  if (m < 1) throw ValidationError("need at least 1 test, got " + std::to_string(m));
  if (candidate_ids.size() != n || test_ids.size() != m || entries.size() != n * m) {
    throw ValidationError("internal dimension mismatch in pass matrix");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (at(i, j) > 1) {
        throw ValidationError("non-binary entry at (row " + std::to_string(i) + ", col " +
                              std::to_string(j) + ")");
      }
    }
  }
  check_unique(candidate_ids, "candidate");
  check_unique(test_ids, "test");
}

std::size_t LabelVector::n_pos() const {
  std::size_t s = 0;
  for (std::uint8_t v : values) s += v;
  return s;
}

LoadedMatrix load_pass_matrix(std::istream& in, FileFormat format) {
  return format == FileFormat::json ? load_json(in) : load_csv(in);
}

namespace {

FileFormat sniff_format(const std::string& path) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return FileFormat::csv;
  return FileFormat::json;
}

}  // namespace

LoadedMatrix load_pass_matrix_file(const std::string& path, std::optional<FileFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return load_pass_matrix(in, format.value_or(sniff_format(path)));
}

void save_pass_matrix(const PassMatrix& matrix, const std::optional<LabelVector>& labels,
                      std::ostream& out, FileFormat format) {
  if (format == FileFormat::json) {
    ordered_json doc;
    doc["candidates"] = matrix.candidate_ids;
    doc["tests"] = matrix.test_ids;
    auto rows = ordered_json::array();
    for (std::size_t i = 0; i < matrix.n; ++i) {
      auto row = ordered_json::array();
      for (std::size_t j = 0; j < matrix.m; ++j) row.push_back(static_cast<int>(matrix.at(i, j)));
      rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    if (labels) {
      auto arr = ordered_json::array();
      for (std::uint8_t v : labels->values) arr.push_back(static_cast<int>(v));
      doc["labels"] = std::move(arr);
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "id";
    for (const auto& t : matrix.test_ids) out << ',' << t;
    out << '\n';
    for (std::size_t i = 0; i < matrix.n; ++i) {
      out << matrix.candidate_ids[i];
      for (std::size_t j = 0; j < matrix.m; ++j) out << ',' << static_cast<int>(matrix.at(i, j));
      out << '\n';
    }
  }
}

void save_pass_matrix_file(const PassMatrix& matrix, const std::optional<LabelVector>& labels,
                           const std::string& path, FileFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  save_pass_matrix(matrix, labels, out, format);
  if (!out) throw IoError("write failed: " + path);
}

LabelVector load_labels_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  LabelVector lv;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lv.values.push_back(parse_binary_csv(line, row, 0));
    ++row;
  }
  if (lv.values.empty()) throw ValidationError("labels file is empty: " + path);
  return lv;
}

ConstantColumnResult remove_constant_columns(const PassMatrix& matrix) {
  std::vector<std::size_t> keep;
  ConstantColumnResult result;
  for (std::size_t j = 0; j < matrix.m; ++j) {
    if (matrix.column_constant(j)) {
      result.removed_test_ids.push_back(matrix.test_ids[j]);
    } else {
      keep.push_back(j);
    }
  }
  if (keep.empty()) throw ValidationError("no non-constant tests");

  PassMatrix& out = result.matrix;
  out.n = matrix.n;
  out.m = keep.size();
  out.candidate_ids = matrix.candidate_ids;
  for (std::size_t j : keep) out.test_ids.push_back(matrix.test_ids[j]);
  out.entries.reserve(out.n * out.m);
  for (std::size_t i = 0; i < matrix.n; ++i)
    for (std::size_t j : keep) out.entries.push_back(matrix.at(i, j));
  return result;
}

PrefilterResult prefilter_top_k(const PassMatrix& matrix, std::size_t k) {
  if (k == 0) throw ValidationError("prefilter cutoff must be at least 1");
  std::vector<std::size_t> order(matrix.n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> sums(matrix.n);
  for (std::size_t i = 0; i < matrix.n; ++i) sums[i] = matrix.row_sum(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sums[a] > sums[b]; });

  const std::size_t keep = std::min(k, matrix.n);
  PrefilterResult result;
  result.kept_indices.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep));
  std::sort(result.kept_indices.begin(), result.kept_indices.end());

  PassMatrix& out = result.submatrix;
  out.n = keep;
  out.m = matrix.m;
  out.test_ids = matrix.test_ids;
  for (std::size_t i : result.kept_indices) {
    out.candidate_ids.push_back(matrix.candidate_ids[i]);
    out.entries.insert(out.entries.end(), matrix.entries.begin() + static_cast<std::ptrdiff_t>(i * matrix.m),
                       matrix.entries.begin() + static_cast<std::ptrdiff_t>((i + 1) * matrix.m));
  }
  return result;
}

}  // namespace aces
