#include "cjones/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "cjones/analysis.hpp"
#include "cjones/datastore.hpp"
#include "cjones/jones_engine.hpp"
#include "cjones/json_forms.hpp"
#include "cjones/qformulas.hpp"
#include "cjones/volume_lab.hpp"

namespace cjones {

namespace {

// Signals a problem with the inputs that is found after flag parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "1/2" or a decimal such as "0.25"; short decimals become exact rationals.
PhasePoint parse_phase(const std::string& s, double r) {
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    try {
      const long long num = std::stoll(s.substr(0, slash));
      const long long den = std::stoll(s.substr(slash + 1));
      if (den == 0) throw UsageError("phase denominator is zero");
      return PhasePoint(Rational(num, den), r);
    } catch (const std::logic_error&) {
      throw UsageError("bad phase '" + s + "'");
    }
  }
  std::size_t pos = 0;
  double x = 0;
  try {
    x = std::stod(s, &pos);
  } catch (const std::logic_error&) {
    throw UsageError("bad phase '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("bad phase '" + s + "'");
  const auto dot = s.find('.');
  const std::size_t frac = dot == std::string::npos ? 0 : s.size() - dot - 1;
  if (s.find_first_of("eE") == std::string::npos && frac <= 9) {
    std::int64_t den = 1;
    for (std::size_t k = 0; k < frac; ++k) den *= 10;
    return PhasePoint(Rational(std::llround(x * static_cast<double>(den)), den), r);
  }
  return PhasePoint(x, r);
}

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string format_complex(std::complex<double> z) {
  const double scale = std::max(1.0, std::abs(z));
  if (std::abs(z.imag()) <= 1e-10 * scale) return format_number(std::abs(z.real()) <= 1e-12 * scale ? 0.0 : z.real());
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

JonesOptions jones_options(const std::string& framing, int f3) {
  JonesOptions o;
  if (framing == "raw")
    o.framing = Framing::Raw;
  else if (framing != "auto")
    throw UsageError("framing must be 'auto' or 'raw'");
  o.framing_multiplier_n3 = f3;
  return o;
}

std::vector<KnotRecord> read_records(const std::string& path, std::ostream& err, bool& row_errors) {
  if (path.size() >= 6 && path.substr(path.size() - 6) == ".jsonl") return load_results(path);
  auto res = load_knots(path);
  for (const auto& e : res.errors) err << path << ":" << e.line << ": " << e.message << "\n";
  row_errors = !res.errors.empty();
  return std::move(res.records);
}

// Output sink: a file when a path is given, otherwise `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw IoError("cannot write '" + path + "'");
    }
    os_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

BraidWord braid_from(const std::string& text, int strands) {
  return strands > 0 ? parse_braid(text, strands) : parse_braid(text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colored Jones polynomials from vertex-model braid representations", "cjones"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // shared flag storage
  std::string braid, input, output, report, framing = "auto", x_str = "0.5", knot = "fig8", rule = "both", poly;
  int strands = 0, color = 2, threads = 0, max_strands = 7, f3 = 0, steps = 11, nmin = 2, nmax = 30;
  double r = 1.0, x_min = 0.0, x_max = 1.0, j3abs = -1, threshold = 10.0;
  bool symbolic = false, fix_b = false;

  auto add_braid = [&](CLI::App* s) {
    s->add_option("--braid", braid, "Braid word, e.g. \"1 -2 1 -2\"");
    s->add_option("--strands", strands, "Strand count (default: inferred)")->check(CLI::PositiveNumber);
  };
  auto add_color = [&](CLI::App* s) {
    s->add_option("--color,-N", color, "Representation dimension N (2 or 3)")->check(CLI::IsMember({2, 3}));
    s->add_option("--framing", framing, "Framing mode: auto or raw")->check(CLI::IsMember({"auto", "raw"}));
    s->add_option("--framing-n3", f3, "Multiplier f of the q^(f(s - sigma)) prefactor at N = 3");
  };

  auto* compute = app.add_subcommand("compute", "Batch symbolic polynomials for a CSV of braids");
  compute->add_option("--input,-i", input, "Knot CSV or results JSONL")->required();
  compute->add_option("--output,-o", output, "Results JSONL")->required();
  compute->add_option("--report", report, "Run report JSON");
  compute->add_option("--threads,-j", threads, "Worker threads (default: CJONES_THREADS or hardware)");
  compute->add_option("--max-strands", max_strands, "Skip braids on more strands");
  add_color(compute);

  auto* eval = app.add_subcommand("eval", "Evaluate or expand J_N of one braid");
  add_braid(eval);
  eval->get_option("--braid")->required();
  add_color(eval);
  eval->add_option("--x", x_str, "Phase x of q = r exp(2 pi i x); decimals or a/b");
  eval->add_option("--r", r, "Modulus r")->check(CLI::PositiveNumber);
  eval->add_flag("--symbolic", symbolic, "Print the polynomial instead of a value");

  auto* scan = app.add_subcommand("scan-phases", "Evaluate J_N over a grid of phases");
  add_braid(scan);
  scan->add_option("--input,-i", input, "Knot CSV or results JSONL instead of --braid");
  add_color(scan);
  scan->add_option("--x-min", x_min, "First phase");
  scan->add_option("--x-max", x_max, "Last phase");
  scan->add_option("--steps", steps, "Grid points")->check(CLI::PositiveNumber);
  scan->add_option("--r", r, "Modulus r")->check(CLI::PositiveNumber);
  scan->add_option("--output,-o", output, "CSV output (default: stdout)");

  auto* vc = app.add_subcommand("vc", "Volume-conjecture sequence v(n) = (2 pi/n) log|J_n|");
  vc->add_option("--knot", knot, "fig8 or K0")->check(CLI::IsMember({"fig8", "K0"}));
  vc->add_option("--nmin", nmin, "First color")->check(CLI::Range(2, 100000));
  vc->add_option("--nmax", nmax, "Last color")->check(CLI::Range(2, 100000));
  vc->add_option("--rule", rule, "kashaev, improved or both")->check(CLI::IsMember({"kashaev", "improved", "both"}));
  vc->add_option("--output,-o", output, "CSV output (default: stdout)");

  auto* zeros = app.add_subcommand("zeros", "Complex zeros of J_N");
  add_braid(zeros);
  zeros->add_option("--poly", poly, "Polynomial in canonical JSON instead of --braid");
  add_color(zeros);
  zeros->add_option("--output,-o", output, "CSV output (default: stdout)");

  auto* stats = app.add_subcommand("stats", "Degree statistics of stored polynomials");
  stats->add_option("--input,-i", input, "Results JSONL or knot CSV")->required();
  stats->add_option("--color,-N", color, "Which polynomial")->check(CLI::IsMember({2, 3}));
  stats->add_option("--output,-o", output, "Per-crossing CSV (default: stdout)");

  auto* quad = app.add_subcommand("quadrel", "Fit |J_3(e^(2 pi i/3))| = |J_2(-1)|^2 / 10^C");
  quad->add_option("--input,-i", input, "Results JSONL or knot CSV with both polynomials")->required();
  quad->add_option("--threshold", threshold, "Use pairs with |J_2(-1)| above this");
  quad->add_option("--output,-o", output, "Scatter CSV of the pairs");

  auto* fit = app.add_subcommand("fit", "Fit vol = a log(b x + c) + d to a CSV of x,vol");
  fit->add_option("--input,-i", input, "CSV with columns x and vol")->required();
  fit->add_flag("--fix-b", fix_b, "Hold b = 1");

  auto* predict = app.add_subcommand("predict", "Volume from |J_3(e^(8 pi i/15))|");
  predict->add_option("--j3abs", j3abs, "Value of |J_3| at the improved phase");
  predict->add_option("--input,-i", input, "Results JSONL or knot CSV with J_3");

  std::vector<std::string> argv_store{"cjones"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    const JonesOptions jopt = jones_options(framing, f3);

    if (*compute) {
      bool row_errors = false;
      auto recs = read_records(input, err, row_errors);
      BatchOptions bo;
      bo.N = color;
      bo.threads = threads;
      bo.max_strands = max_strands;
      bo.jones = jopt;
      const auto res = batch_compute(std::move(recs), bo);
      save_results(res.records, output);
      if (!report.empty()) {
        std::ofstream rep(report, std::ios::trunc);
        if (!rep) throw IoError("cannot write '" + report + "'");
        rep << res.report.dump(2) << "\n";
      }
      for (const auto& e : res.report.at("per_record"))
        if (e.at("status") != "ok")
          err << e.at("name").get<std::string>() << ": " << e.at("status").get<std::string>() << " ("
              << e.value("reason", "") << ")\n";
      out << "records " << res.records.size() << ", failed " << res.failures << ", skipped " << res.skipped
          << ", largest sector " << res.report.at("largest_sector") << "\n";
      return (row_errors || res.failures > 0) ? 2 : 0;
    }

    if (*eval) {
      const BraidWord w = braid_from(braid, strands);
      if (symbolic) {
        out << jones(w, color, jopt).polynomial.to_string() << "\n";
      } else {
        out << format_complex(jones_eval(w, color, parse_phase(x_str, r), jopt)) << "\n";
      }
      return 0;
    }

    if (*scan) {
      std::vector<std::pair<std::string, BraidWord>> words;
      if (!input.empty()) {
        bool row_errors = false;
        for (auto& rec : read_records(input, err, row_errors)) words.emplace_back(rec.name, rec.braid);
        if (row_errors) return 2;
      } else if (!braid.empty()) {
        words.emplace_back("braid", braid_from(braid, strands));
      } else {
        throw UsageError("scan-phases needs --braid or --input");
      }
      Sink sink(output, out);
      *sink << "name,x,r,re,im,abs\n" << std::setprecision(12);
      for (const auto& [name, w] : words)
        for (int k = 0; k < steps; ++k) {
          const double x = steps == 1 ? x_min : x_min + (x_max - x_min) * k / (steps - 1);
          const auto v = jones_eval(w, color, PhasePoint(x, r), jopt);
          *sink << name << ',' << x << ',' << r << ',' << v.real() << ',' << v.imag() << ',' << std::abs(v) << "\n";
        }
      return 0;
    }

    if (*vc) {
      if (nmax < nmin) throw UsageError("--nmax must be at least --nmin");
      const KnotId id = knot == "fig8" ? KnotId::Fig8 : KnotId::K0;
      const double volume = id == KnotId::Fig8 ? kVolumeFig8 : kVolumeK0;
      Sink sink(output, out);
      *sink << "n,v_kashaev,v_improved,volume\n" << std::setprecision(12);
      for (int n = nmin; n <= nmax; ++n) {
        *sink << n << ',';
        if (rule != "improved") *sink << v_of_n(id, n, PhaseRule::kashaev()).v;
        *sink << ',';
        if (rule != "kashaev") *sink << v_of_n(id, n, PhaseRule::improved()).v;
        *sink << ',' << volume << "\n";
      }
      return 0;
    }

    if (*zeros) {
      LaurentPoly p;
      if (!poly.empty()) {
        try {
          p = lp_from_json(nlohmann::json::parse(poly));
        } catch (const nlohmann::json::exception&) {
          throw UsageError("--poly is not valid JSON");
        }
      } else if (!braid.empty()) {
        p = jones(braid_from(braid, strands), color, jopt).polynomial;
      } else {
        throw UsageError("zeros needs --braid or --poly");
      }
      RootOptions ro;
      ro.throw_on_failure = false;
      const RootSet rs = roots(p, ro);
      Sink sink(output, out);
      write_roots_csv(*sink, rs);
      err << "roots " << rs.roots.size() << ", at origin " << rs.zero_at_origin_count << ", max residual "
          << rs.residual_max << (rs.converged ? "" : ", NOT converged") << "\n";
      return rs.converged ? 0 : 2;
    }

    if (*stats) {
      bool row_errors = false;
      const auto recs = read_records(input, err, row_errors);
      const DegreeStats s = degree_stats(recs, color);
      err << std::setprecision(6) << "J_" << color << ": " << s.min_fit.count << " polynomials; min degree "
          << s.min_fit.mean << " +- " << s.min_fit.stddev << "; max degree " << s.max_fit.mean << " +- "
          << s.max_fit.stddev << "; length " << s.length_fit.mean << " +- " << s.length_fit.stddev << "\n";
      Sink sink(output, out);
      *sink << "crossings,count,mean_length,std_length,mean_volume\n" << std::setprecision(12);
      for (const auto& row : s.by_crossing)
        *sink << row.crossings << ',' << row.count << ',' << row.length.mean << ',' << row.length.stddev << ','
              << row.mean_volume << "\n";
      return row_errors ? 2 : 0;
    }

    if (*quad) {
      bool row_errors = false;
      const auto recs = read_records(input, err, row_errors);
      const QuadRelation q = quad_relation(recs, threshold);
      out << std::setprecision(10) << "C," << q.C << "\nused," << q.used << "\nfree_slope," << q.free_slope
          << "\nfree_C," << q.free_C << "\n";
      if (!output.empty()) {
        Sink sink(output, out);
        write_scatter_csv(*sink, q.pairs);
      }
      return row_errors ? 2 : 0;
    }

    if (*fit) {
      std::ifstream in(input, std::ios::binary);
      if (!in) throw IoError("cannot open '" + input + "'");
      std::ostringstream ss;
      ss << in.rdbuf();
      const auto rows = parse_csv(ss.str());
      if (rows.empty() || rows[0].second.size() < 2) throw SchemaError("fit input needs a header x,vol");
      std::vector<std::pair<double, double>> data;
      for (std::size_t k = 1; k < rows.size(); ++k) {
        const auto& row = rows[k].second;
        try {
          if (row.size() < 2) throw std::invalid_argument("short row");
          data.emplace_back(std::stod(row[0]), std::stod(row[1]));
        } catch (const std::logic_error&) {
          throw ParseError(input + ":" + std::to_string(rows[k].first) + ": expected two numbers");
        }
      }
      FitOptions fo;
      fo.fix_b = fix_b;
      const FitParams f = fit_log_model(data, fo);
      out << std::setprecision(10) << "a," << f.a << "\nb," << f.b << "\nc," << f.c << "\nd," << f.d
          << "\nr_squared," << f.r_squared << "\nresidual_norm," << f.residual_norm << "\n";
      return 0;
    }

    if (*predict) {
      if (!input.empty()) {
        bool row_errors = false;
        const auto recs = read_records(input, err, row_errors);
        const PhasePoint p(Rational(4, 15));
        out << "name,j3abs,predicted,volume\n" << std::setprecision(12);
        for (const auto& rec : recs) {
          if (!rec.j3) continue;
          const double a = std::abs(lp_eval(*rec.j3, p));
          out << rec.name << ',' << a << ',' << predict_volume(a) << ',' << rec.volume << "\n";
        }
        return row_errors ? 2 : 0;
      }
      if (j3abs < 0) throw UsageError("predict needs --j3abs >= 0 or --input");
      out << format_number(predict_volume(j3abs)) << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace cjones
