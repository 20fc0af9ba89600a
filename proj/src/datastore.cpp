#include "cjones/datastore.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "cjones/json_forms.hpp"

namespace cjones {

const std::optional<LaurentPoly>& KnotRecord::polynomial(int N) const {
  if (N == 2) return j2;
  if (N == 3) return j3;
  throw UnsupportedN("records store polynomials for N = 2, 3 only");
}

std::optional<LaurentPoly>& KnotRecord::polynomial(int N) {
  return const_cast<std::optional<LaurentPoly>&>(static_cast<const KnotRecord&>(*this).polynomial(N));
}

std::vector<std::pair<std::size_t, std::vector<std::string>>> parse_csv(const std::string& text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  std::size_t line = 1, row_line = 1;
  auto end_row = [&] {
    if (any || !field.empty() || !row.empty()) {
      row.push_back(std::move(field));
      rows.emplace_back(row_line, std::move(row));
    }
    row.clear();
    field.clear();
    any = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        any = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        any = true;
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        row_line = ++line;
        break;
      default:
        field.push_back(c);
        any = true;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field starting on line " + std::to_string(row_line));
  end_row();
  return rows;
}

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const char* what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + s + "'");
  }
  if (pos != s.size()) throw ParseError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

double parse_double(const std::string& s, const char* what) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + s + "'");
  }
  if (pos != s.size()) throw ParseError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

std::optional<LaurentPoly> parse_poly_cell(const std::string& s) {
  if (s.empty()) return std::nullopt;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const nlohmann::json::exception&) {
    throw ParseError("polynomial cell is not valid JSON");
  }
  try {
    return lp_from_json(j);
  } catch (const SchemaError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

LoadResult parse_knots_csv(const std::string& text) {
  LoadResult out;
  const auto rows = parse_csv(text);
  if (rows.empty()) throw SchemaError("missing CSV header");
  std::map<std::string, std::size_t> col;
  for (std::size_t k = 0; k < rows[0].second.size(); ++k) col[trim(rows[0].second[k])] = k;
  for (const char* req : {"name", "crossings", "strands", "braid", "volume"})
    if (!col.count(req)) throw SchemaError(std::string("CSV header lacks column '") + req + "'");
  const std::size_t width = rows[0].second.size();

  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& [line, f] = rows[r];
    try {
      if (f.size() != width)
        throw ParseError("expected " + std::to_string(width) + " fields, found " + std::to_string(f.size()));
      auto get = [&](const char* c) { return trim(f[col.at(c)]); };
      KnotRecord rec;
      rec.name = get("name");
      if (rec.name.empty()) throw ParseError("empty name");
      rec.crossings = parse_int(get("crossings"), "crossing number");
      const int strands = parse_int(get("strands"), "strand count");
      rec.braid = parse_braid(get("braid"), strands);
      rec.volume = parse_double(get("volume"), "volume");
      if (col.count("j2")) rec.j2 = parse_poly_cell(get("j2"));
      if (col.count("j3")) rec.j3 = parse_poly_cell(get("j3"));
      out.records.push_back(std::move(rec));
    } catch (const Error& e) {
      out.errors.push_back({line, e.what()});
    }
  }
  return out;
}

LoadResult load_knots(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_knots_csv(ss.str());
}

int default_threads() {
  if (const char* env = std::getenv("CJONES_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

BatchResult batch_compute(std::vector<KnotRecord> records, const BatchOptions& opt) {
  if (opt.N != 2 && opt.N != 3) throw UnsupportedN("batch computation supports N = 2, 3");
  const RMatrix& r = r_matrix(opt.N);
  std::sort(records.begin(), records.end(),
            [](const KnotRecord& a, const KnotRecord& b) { return a.name < b.name; });

  struct Entry {
    std::string status = "ok";
    std::string reason;
    double seconds = 0;
    std::size_t sector = 0;
  };
  std::vector<Entry> entries(records.size());
  std::atomic<std::size_t> next{0};
  const auto t0 = std::chrono::steady_clock::now();

  auto work = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      KnotRecord& rec = records[i];
      Entry& e = entries[i];
      const auto start = std::chrono::steady_clock::now();
      try {
        validate(rec.braid);
        e.sector = largest_sector_dimension(opt.N, rec.braid.strands);
        if (rec.braid.strands > opt.max_strands) {
          e.status = "skipped";
          e.reason = std::to_string(rec.braid.strands) + " strands exceeds the maximum of " +
                     std::to_string(opt.max_strands);
        } else if (closure_components(rec.braid) > 1) {
          e.status = "skipped";
          e.reason = "closure is a " + std::to_string(closure_components(rec.braid)) + "-component link";
        } else if (opt.mode == BatchMode::Symbolic) {
          rec.polynomial(opt.N) = jones(rec.braid, r, opt.jones).polynomial;
        } else {
          for (const PhasePoint& p : opt.phases)
            rec.evals.push_back({opt.N, p.x, p.r, jones_eval(rec.braid, r, p, opt.jones)});
        }
      } catch (const std::exception& ex) {
        e.status = "failed";
        e.reason = ex.what();
      }
      e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };

  const int threads = std::max(1, std::min<int>(opt.threads > 0 ? opt.threads : default_threads(),
                                                static_cast<int>(std::max<std::size_t>(records.size(), 1))));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  BatchResult out;
  nlohmann::json per = nlohmann::json::array();
  std::size_t largest = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Entry& e = entries[i];
    nlohmann::json j{{"name", records[i].name},
                     {"strands", records[i].braid.strands},
                     {"length", records[i].braid.letters.size()},
                     {"largest_sector", e.sector},
                     {"seconds", e.seconds},
                     {"status", e.status}};
    if (!e.reason.empty()) j["reason"] = e.reason;
    per.push_back(std::move(j));
    if (e.status == "failed") ++out.failures;
    if (e.status == "skipped") ++out.skipped;
    if (e.status == "ok") largest = std::max(largest, e.sector);
  }
  std::map<int, std::size_t> sectors;
  for (const auto& rec : records)
    if (rec.braid.strands >= 1) sectors[rec.braid.strands] = largest_sector_dimension(opt.N, rec.braid.strands);
  nlohmann::json sector_table = nlohmann::json::object();
  for (const auto& [m, d] : sectors) {
    std::uint64_t states = 1;
    for (int k = 0; k < m; ++k) states *= static_cast<std::uint64_t>(opt.N);
    sector_table[std::to_string(m)] = {{"states", states}, {"largest_sector", d}};
  }

  out.report = {{"N", opt.N},
                {"mode", opt.mode == BatchMode::Symbolic ? "symbolic" : "numeric"},
                {"threads", threads},
                {"records", records.size()},
                {"failures", out.failures},
                {"skipped", out.skipped},
                {"largest_sector", largest},
                {"sectors_by_strands", std::move(sector_table)},
                {"total_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()},
                {"per_record", std::move(per)}};
  out.records = std::move(records);
  return out;
}

nlohmann::json record_to_json(const KnotRecord& r) {
  nlohmann::json j{{"name", r.name},
                   {"crossings", r.crossings},
                   {"strands", r.braid.strands},
                   {"braid", r.braid.letters},
                   {"volume", r.volume}};
  if (r.j2) j["j2"] = lp_to_json(*r.j2);
  if (r.j3) j["j3"] = lp_to_json(*r.j3);
  if (!r.evals.empty()) {
    nlohmann::json ev = nlohmann::json::array();
    for (const auto& e : r.evals)
      ev.push_back({{"N", e.N}, {"x", e.x}, {"r", e.r}, {"re", e.value.real()}, {"im", e.value.imag()}});
    j["evals"] = std::move(ev);
  }
  return j;
}

KnotRecord record_from_json(const nlohmann::json& j) {
  try {
    KnotRecord r;
    r.name = j.at("name").get<std::string>();
    r.crossings = j.at("crossings").get<int>();
    r.braid.strands = j.at("strands").get<int>();
    r.braid.letters = j.at("braid").get<std::vector<int>>();
    validate(r.braid);
    r.volume = j.at("volume").get<double>();
    if (j.contains("j2")) r.j2 = lp_from_json(j.at("j2"));
    if (j.contains("j3")) r.j3 = lp_from_json(j.at("j3"));
    if (j.contains("evals"))
      for (const auto& e : j.at("evals"))
        r.evals.push_back({e.at("N").get<int>(), e.at("x").get<double>(), e.at("r").get<double>(),
                           {e.at("re").get<double>(), e.at("im").get<double>()}});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed record: ") + e.what());
  }
}

void save_results(const std::vector<KnotRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << nlohmann::json{{"format", kResultsFormat}, {"version", kResultsVersion}}.dump() << '\n';
  for (const auto& r : records) out << record_to_json(r).dump() << '\n';
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::vector<KnotRecord> load_results(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("results file is empty");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception&) {
    throw SchemaError("results header is not JSON");
  }
  if (!header.is_object() || header.value("format", "") != kResultsFormat)
    throw VersionError("unrecognized results format");
  if (!header.contains("version") || header.at("version") != kResultsVersion)
    throw VersionError("unsupported results version " + (header.contains("version") ? header.at("version").dump() : "(none)"));
  std::vector<KnotRecord> records;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      records.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception&) {
      throw SchemaError("line " + std::to_string(lineno) + " is not JSON");
    } catch (const Error& e) {
      throw SchemaError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return records;
}

}  // namespace cjones
