#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "icardo/csv.hpp"
#include "icardo/error.hpp"
#include "icardo/numerics.hpp"
#include "icardo/rng.hpp"
#include "icardo/schema.hpp"

namespace icardo {

/// Immutable-by-convention tabular dataset. Categorical columns keep their raw
/// text in `raw_text` until encode_labels() assigns integer codes.
struct Dataset {
  Matrix x;
  std::vector<int> y;  // 1 = CAD
  SchemaKind schema_kind = SchemaKind::Alizadeh56;
  std::vector<FeatureSchema> schema;
  bool encoded = false;
  bool scaled = false;
  // raw_text[j] is nonempty only for categorical column j before encoding.
  std::vector<std::vector<std::string>> raw_text;

  std::size_t n_rows() const { return x.rows; }
  std::size_t n_features() const { return x.cols; }

  std::pair<std::size_t, std::size_t> class_counts() const {
    std::size_t n0 = 0, n1 = 0;
    for (int v : y) (v == 1 ? n1 : n0)++;
    return {n0, n1};
  }

  /// Minority label over the full dataset; ties resolve to class 0.
  int minority_class() const {
    auto [n0, n1] = class_counts();
    return n1 < n0 ? 1 : 0;
  }
};

struct ScalerParams {
  std::vector<double> min;
  std::vector<double> max;
};

struct DataSplit {
  std::vector<std::size_t> train_indices;
  std::vector<std::size_t> test_indices;
  std::uint64_t seed = 0;
  double test_fraction = 0.0;
};

namespace detail {

inline bool parse_double(const std::string& s, double& out) {
  const char* b = s.data();
  const char* e = s.data() + s.size();
  while (b < e && (*b == ' ' || *b == '\t')) ++b;
  while (e > b && (*(e - 1) == ' ' || *(e - 1) == '\t')) --e;
  if (b == e) return false;
  auto [ptr, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && ptr == e;
}

inline bool is_missing(const std::string& s) {
  const std::string v = normalize_name(s);
  return v.empty() || v == "na" || v == "nan" || v == "?";
}

}  // namespace detail

/// Loads a CSV against one of the built-in schemas. Columns may appear in any
/// order; the header must contain exactly the schema's feature names plus the
/// label column (match is case- and whitespace-insensitive).
inline Dataset load_csv(const std::string& path, SchemaKind kind) {
  const CsvTable table = read_csv(path);
  Dataset ds;
  ds.schema_kind = kind;
  ds.schema = builtin_schema(kind);

  std::map<std::string, std::size_t> header_pos;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    const std::string key = normalize_name(table.header[i]);
    if (!header_pos.emplace(key, i).second)
      throw InputError("schema mismatch: duplicate column '" + table.header[i] + "'");
  }

  std::vector<std::size_t> col_of_feature(ds.schema.size());
  std::set<std::string> expected;
  for (std::size_t j = 0; j < ds.schema.size(); ++j) {
    const std::string key = normalize_name(ds.schema[j].name);
    expected.insert(key);
    auto it = header_pos.find(key);
    if (it == header_pos.end())
      throw InputError("schema mismatch: missing column '" + ds.schema[j].name + "'");
    col_of_feature[j] = it->second;
  }
  const std::string label_key = normalize_name(label_column(kind));
  expected.insert(label_key);
  auto label_it = header_pos.find(label_key);
  if (label_it == header_pos.end())
    throw InputError("schema mismatch: missing label column '" + label_column(kind) + "'");
  for (const auto& [key, pos] : header_pos)
    if (!expected.count(key))
      throw InputError("schema mismatch: unexpected column '" + table.header[pos] + "'");

  if (table.rows.empty())
    throw InputError("empty dataset: " + path + " has a header but no data rows");

  const std::size_t n = table.rows.size();
  const std::size_t m = ds.schema.size();
  ds.x = Matrix(n, m);
  ds.y.resize(n);
  ds.raw_text.assign(m, {});
  for (std::size_t j = 0; j < m; ++j)
    if (ds.schema[j].kind != FeatureKind::Numeric) ds.raw_text[j].resize(n);

  for (std::size_t r = 0; r < n; ++r) {
    const auto& fields = table.rows[r];
    for (std::size_t j = 0; j < m; ++j) {
      const std::string& cell = fields[col_of_feature[j]];
      if (detail::is_missing(cell))
        throw InputError("row " + std::to_string(r + 1) + ": missing value in column '" +
                         ds.schema[j].name + "'");
      if (ds.schema[j].kind == FeatureKind::Numeric) {
        double v;
        if (!detail::parse_double(cell, v))
          throw InputError("row " + std::to_string(r + 1) + ": cannot parse '" + cell +
                           "' as a number in column '" + ds.schema[j].name + "'");
        ds.x.at(r, j) = v;
      } else {
        ds.raw_text[j][r] = cell;
      }
    }
    ds.y[r] = parse_label(kind, fields[label_it->second]);
  }
  return ds;
}

/// Maps each categorical column's distinct strings to consecutive integers in
/// lexicographic (bytewise) order. Columns whose values are only yes/no get
/// the fixed map no->0, yes->1 so that "yes" is always the semantic 1.
inline Dataset encode_labels(const Dataset& input) {
  if (input.scaled) throw InputError("encode_labels: dataset already scaled");
  Dataset ds = input;
  for (std::size_t j = 0; j < ds.n_features(); ++j) {
    if (ds.schema[j].kind == FeatureKind::Numeric) continue;
    if (ds.raw_text[j].empty()) continue;  // already encoded
    std::set<std::string> distinct(ds.raw_text[j].begin(), ds.raw_text[j].end());
    if (distinct.size() > 16)
      throw InputError("column '" + ds.schema[j].name + "' has " +
                       std::to_string(distinct.size()) +
                       " distinct values; categorical cardinality limit is 16");

    bool yes_no = true;
    for (const auto& v : distinct) {
      const std::string nv = normalize_name(v);
      if (nv != "yes" && nv != "no") {
        yes_no = false;
        break;
      }
    }

    std::map<std::string, int> code;
    std::vector<std::string> categories;
    if (yes_no) {
      categories = {"No", "yes"};
      for (const auto& v : distinct) {
        const bool is_yes = normalize_name(v) == "yes";
        code[v] = is_yes ? 1 : 0;
        categories[is_yes ? 1 : 0] = v;  // keep the observed spelling
      }
    } else {
      categories.assign(distinct.begin(), distinct.end());  // set is sorted
      for (std::size_t c = 0; c < categories.size(); ++c)
        code[categories[c]] = static_cast<int>(c);
    }

    for (std::size_t r = 0; r < ds.n_rows(); ++r)
      ds.x.at(r, j) = code.at(ds.raw_text[j][r]);
    ds.schema[j].categories = std::move(categories);
    ds.raw_text[j].clear();
  }
  ds.encoded = true;
  return ds;
}

inline ScalerParams fit_scaler(const Matrix& x, std::span<const std::size_t> rows) {
  ScalerParams p;
  p.min.assign(x.cols, std::numeric_limits<double>::infinity());
  p.max.assign(x.cols, -std::numeric_limits<double>::infinity());
  for (std::size_t r : rows) {
    for (std::size_t j = 0; j < x.cols; ++j) {
      p.min[j] = std::min(p.min[j], x.at(r, j));
      p.max[j] = std::max(p.max[j], x.at(r, j));
    }
  }
  return p;
}

inline double scale_value(const ScalerParams& p, std::size_t j, double v) {
  const double range = p.max[j] - p.min[j];
  if (range == 0.0) return 0.0;  // constant column
  return (v - p.min[j]) / range;
}

/// Applies an existing scaler to every row; no clamping, so values outside
/// the fitted range land outside [0, 1].
inline Dataset apply_scaler(const Dataset& input, const ScalerParams& p) {
  Dataset ds = input;
  for (std::size_t r = 0; r < ds.n_rows(); ++r)
    for (std::size_t j = 0; j < ds.n_features(); ++j)
      ds.x.at(r, j) = scale_value(p, j, ds.x.at(r, j));
  ds.scaled = true;
  return ds;
}

/// Min-max scaling. Column extremes come from the training rows when a split
/// is given, else from the full data.
inline std::pair<Dataset, ScalerParams> minmax_scale(
    const Dataset& input, const DataSplit* split = nullptr) {
  for (std::size_t j = 0; j < input.n_features(); ++j)
    if (!input.raw_text.empty() && !input.raw_text[j].empty())
      throw InputError("minmax_scale: column '" + input.schema[j].name +
                       "' is still categorical text; run encode_labels first");
  std::vector<std::size_t> all;
  std::span<const std::size_t> rows;
  if (split != nullptr) {
    rows = split->train_indices;
  } else {
    all.resize(input.n_rows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    rows = all;
  }
  ScalerParams p = fit_scaler(input.x, rows);
  return {apply_scaler(input, p), p};
}

/// Deterministic stratified split. The total test size is round-half-up of
/// n * fraction, apportioned per class by largest remainder (ties to the
/// lower class index); within a class, membership is a seeded Fisher-Yates
/// draw. Index lists are sorted ascending.
inline DataSplit stratified_split(const Dataset& ds, double test_fraction,
                                  std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0))
    throw InputError("test_fraction must lie in (0, 1)");
  auto [n0, n1] = ds.class_counts();
  if (n0 < 2 || n1 < 2)
    throw InputError("stratified_split: each class needs at least 2 members (have " +
                     std::to_string(n0) + "/" + std::to_string(n1) + ")");

  const std::size_t n = ds.n_rows();
  const std::size_t total_test =
      static_cast<std::size_t>(std::floor(static_cast<double>(n) * test_fraction + 0.5));

  const double ideal0 = static_cast<double>(n0) * test_fraction;
  const double ideal1 = static_cast<double>(n1) * test_fraction;
  std::size_t t0 = static_cast<std::size_t>(std::floor(ideal0));
  std::size_t t1 = static_cast<std::size_t>(std::floor(ideal1));
  // Largest remainder; tie -> lower class index.
  while (t0 + t1 < total_test) {
    const double r0 = ideal0 - static_cast<double>(t0);
    const double r1 = ideal1 - static_cast<double>(t1);
    if (r0 >= r1 && t0 < n0)
      ++t0;
    else
      ++t1;
  }
  t0 = std::min(t0, n0 - 1);
  t1 = std::min(t1, n1 - 1);

  std::vector<std::size_t> class_rows[2];
  for (std::size_t i = 0; i < n; ++i) class_rows[ds.y[i] == 1 ? 1 : 0].push_back(i);

  DataSplit split;
  split.seed = seed;
  split.test_fraction = test_fraction;
  Rng rng(seed);
  const std::size_t takes[2] = {t0, t1};
  for (int c = 0; c < 2; ++c) {
    auto rows = class_rows[c];
    rng.shuffle(rows);
    for (std::size_t i = 0; i < rows.size(); ++i)
      (i < takes[c] ? split.test_indices : split.train_indices).push_back(rows[i]);
  }
  std::sort(split.test_indices.begin(), split.test_indices.end());
  std::sort(split.train_indices.begin(), split.train_indices.end());
  return split;
}

inline std::vector<int> select_labels(const Dataset& ds,
                                      std::span<const std::size_t> rows) {
  std::vector<int> out;
  out.reserve(rows.size());
  for (std::size_t r : rows) out.push_back(ds.y[r]);
  return out;
}

}  // namespace icardo
