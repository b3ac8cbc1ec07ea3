#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icardo/error.hpp"

namespace icardo {

enum class FeatureKind { Numeric, BinaryCategorical, MultiCategorical };

enum class SchemaKind { Alizadeh56, Uci13 };

inline std::string to_string(SchemaKind k) {
  return k == SchemaKind::Alizadeh56 ? "alizadeh56" : "uci13";
}

inline SchemaKind schema_kind_from_string(const std::string& s) {
  if (s == "alizadeh56") return SchemaKind::Alizadeh56;
  if (s == "uci13") return SchemaKind::Uci13;
  throw InputError("unknown schema kind: " + s);
}

inline std::string to_string(FeatureKind k) {
  switch (k) {
    case FeatureKind::Numeric: return "numeric";
    case FeatureKind::BinaryCategorical: return "binary-categorical";
    default: return "multi-categorical";
  }
}

struct FeatureSchema {
  int index = 0;  // 1-based feature id (f1..fN)
  std::string name;
  FeatureKind kind = FeatureKind::Numeric;
  std::optional<std::pair<double, double>> declared_range;
  // Post-encoding category table: encoded integer -> original string.
  std::vector<std::string> categories;
};

/// Case-folds and collapses whitespace; header matching is insensitive to both.
inline std::string normalize_name(const std::string& s) {
  std::string out;
  bool pending_space = false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  }
  return out;
}

namespace detail {

struct FeatureSpec {
  const char* name;
  FeatureKind kind;
  double lo, hi;
  bool has_range;
};

inline FeatureSpec num(const char* n, double lo, double hi) {
  return {n, FeatureKind::Numeric, lo, hi, true};
}
inline FeatureSpec bin(const char* n) {
  return {n, FeatureKind::BinaryCategorical, 0, 0, false};
}
inline FeatureSpec cat(const char* n) {
  return {n, FeatureKind::MultiCategorical, 0, 0, false};
}

}  // namespace detail

/// The 56-feature clinical schema (demographic, symptom/examination, ECG,
/// laboratory/echo groups). The label column is "Cath" (Cad / Normal).
inline std::vector<FeatureSchema> alizadeh56_schema() {
  using namespace detail;
  static const FeatureSpec specs[] = {
      num("Age", 48, 120),
      bin("Sex"),
      num("DM", 30, 86),
      bin("Ex-Smoker"),
      bin("Current Smoker"),
      bin("HTN"),
      bin("FH"),
      num("BMI", 18, 41),
      bin("DLP"),
      bin("Airway Disease"),
      bin("CRF"),
      bin("CVA"),
      bin("CHF"),
      bin("Obesity"),
      bin("Thyroid Disease"),
      bin("Edema"),
      bin("Systolic Murmur"),
      bin("Typical Chest Pain"),
      bin("Atypical"),
      bin("Weak Peripheral Pulse"),
      bin("Exertional CP"),
      bin("Nonanginal CP"),
      bin("Dyspnea"),
      bin("Lung Rales"),
      bin("Diastolic Murmur"),
      bin("Low Th Ang"),
      num("BP", 90, 190),
      num("Function Class", 1, 4),
      num("PR", 50, 110),
      bin("St Elevation"),
      bin("Poor R Progression"),
      bin("T Inversion"),
      bin("Q Wave"),
      bin("LVH"),
      bin("St Depression"),
      bin("Rhythm"),
      num("Lymph", 7, 60),
      num("K", 3.0, 6.6),
      cat("VHD"),
      num("BUN", 6, 52),
      num("CR", 0.5, 2.2),
      num("LDL", 18, 232),
      num("TG", 37, 1050),
      num("ESR", 1, 90),
      num("Neut", 32, 89),
      num("HDL", 15, 111),
      num("HB", 8.9, 17.6),
      num("PLT", 25, 742),
      num("FBS", 62, 400),
      num("Na", 128, 156),
      num("Region RWMA", 0, 4),
      num("EF-TTE", 15, 60),
      num("WBC", 3700, 18000),
      cat("BBB"),
      num("Weight", 48, 120),
      num("Length", 140, 188),
  };
  std::vector<FeatureSchema> out;
  int id = 1;
  for (const auto& s : specs) {
    FeatureSchema f;
    f.index = id++;
    f.name = s.name;
    f.kind = s.kind;
    if (s.has_range) f.declared_range = {s.lo, s.hi};
    out.push_back(std::move(f));
  }
  return out;
}

/// The 13-feature combined heart-disease schema (Cleveland, Hungarian,
/// Switzerland, Long Beach VA). All columns numeric; the label column is
/// "target" with values 0/1 (the raw archives' `num` 0-4 must be binarized
/// on export).
inline std::vector<FeatureSchema> uci13_schema() {
  static const char* names[] = {"age",     "sex",  "cp",      "trestbps", "chol",
                                "fbs",     "restecg", "thalach", "exang",
                                "oldpeak", "slope",   "ca",      "thal"};
  std::vector<FeatureSchema> out;
  int id = 1;
  for (const char* n : names) {
    FeatureSchema f;
    f.index = id++;
    f.name = n;
    f.kind = FeatureKind::Numeric;
    out.push_back(std::move(f));
  }
  return out;
}

inline std::vector<FeatureSchema> builtin_schema(SchemaKind kind) {
  return kind == SchemaKind::Alizadeh56 ? alizadeh56_schema() : uci13_schema();
}

inline std::string label_column(SchemaKind kind) {
  return kind == SchemaKind::Alizadeh56 ? "Cath" : "target";
}

/// Label cell -> {0, 1}. CAD/1 is the positive medical condition.
inline int parse_label(SchemaKind kind, const std::string& raw_value) {
  const std::string v = normalize_name(raw_value);
  if (kind == SchemaKind::Alizadeh56) {
    if (v == "cad") return 1;
    if (v == "normal") return 0;
    throw InputError("unrecognized Cath label value: '" + raw_value + "'");
  }
  if (v == "1") return 1;
  if (v == "0") return 0;
  throw InputError("unrecognized target label value: '" + raw_value +
                   "' (expected 0 or 1)");
}

inline std::string label_value_name(SchemaKind kind, int label) {
  if (kind == SchemaKind::Alizadeh56) return label == 1 ? "Cad" : "Normal";
  return label == 1 ? "1" : "0";
}

}  // namespace icardo
