#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cjones/braid.hpp"
#include "cjones/jones_engine.hpp"
#include "cjones/laurent.hpp"

namespace cjones {

/// One numeric evaluation J_N(q) at q = r e^(2 pi i x).
struct EvalEntry {
  int N = 2;
  double x = 0;
  double r = 1;
  std::complex<double> value;

  friend bool operator==(const EvalEntry&, const EvalEntry&) = default;
};

struct KnotRecord {
  std::string name;
  int crossings = 0;
  BraidWord braid;
  double volume = 0;
  std::optional<LaurentPoly> j2, j3;
  std::vector<EvalEntry> evals;

  const std::optional<LaurentPoly>& polynomial(int N) const;
  std::optional<LaurentPoly>& polynomial(int N);

  friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

struct RowError {
  std::size_t line = 0;  // 1-based line number in the file
  std::string message;
};

struct LoadResult {
  std::vector<KnotRecord> records;
  std::vector<RowError> errors;
};

/// Reads a CSV with header columns name, crossings, strands, braid, volume
/// and optional j2, j3 (canonical polynomial JSON). Fields may be quoted.
/// Malformed rows are reported in `errors`; a missing file throws IoError and
/// a bad header throws SchemaError.
LoadResult load_knots(const std::string& path);
LoadResult parse_knots_csv(const std::string& text);

/// Splits CSV text into rows of fields, honouring double-quoted fields.
/// Each row carries the line number on which it started.
std::vector<std::pair<std::size_t, std::vector<std::string>>> parse_csv(const std::string& text);

enum class BatchMode { Symbolic, Numeric };

struct BatchOptions {
  int N = 2;
  BatchMode mode = BatchMode::Symbolic;
  /// Worker threads; 0 reads CJONES_THREADS and falls back to the hardware count.
  int threads = 0;
  int max_strands = 7;
  /// Phases for numeric mode.
  std::vector<PhasePoint> phases;
  JonesOptions jones;
};

struct BatchResult {
  std::vector<KnotRecord> records;  // sorted by name
  nlohmann::json report;
  std::size_t failures = 0;
  std::size_t skipped = 0;
};

int default_threads();

/// Computes J_N for every record. Records whose braid exceeds max_strands or
/// closes to a link are skipped; errors are isolated per record.
BatchResult batch_compute(std::vector<KnotRecord> records, const BatchOptions& opt);

inline constexpr const char* kResultsFormat = "cjones-knots";
inline constexpr int kResultsVersion = 1;

nlohmann::json record_to_json(const KnotRecord& r);
KnotRecord record_from_json(const nlohmann::json& j);

/// JSON lines: a header {"format", "version"} followed by one record per line.
void save_results(const std::vector<KnotRecord>& records, const std::string& path);
std::vector<KnotRecord> load_results(const std::string& path);

}  // namespace cjones
