// hnum: exact evaluator, table generator, and cross-check harness for disk
// single Hurwitz numbers.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hurwitz/classical.hpp"
#include "hurwitz/engine.hpp"
#include "hurwitz/reports.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/table.hpp"

namespace {

using namespace hurwitz;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

Convention convention_from(const std::string& name) {
  if (name == "index") return Convention{DotWeight::Index};
  if (name == "twice-index") return Convention{DotWeight::TwiceIndex};
  throw CLI::ValidationError("--dot-weight", "must be index or twice-index");
}

int write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kExitFailure;
  }
  out << payload;
  return out.good() ? kExitOk : kExitFailure;
}

bool load_cache_if_any(Engine& engine, const std::string& path) {
  if (path.empty()) return true;
  std::ifstream in(path);
  if (!in) return true;  // not present yet: will be created on save
  engine.load_cache(in);
  return true;
}

int save_cache_if_any(const Engine& engine, const std::string& path) {
  if (path.empty()) return kExitOk;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "error: cannot write cache " << path << "\n";
      return kExitFailure;
    }
    engine.save_cache(out);
    if (!out.good()) return kExitFailure;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::cerr << "error: cannot move cache into place: " << path << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

struct EvalOptions {
  int m = 0;
  int points = -1;
  int acute = -1;
  int grave = -1;
  std::string b_text;
  std::string dot_weight = "index";
  std::string format = "text";
  std::string out_path;
  std::string cache_path;
  bool refined = false;
};

int run_eval(const EvalOptions& opt) {
  const bool has_points = opt.points >= 0;
  const bool has_refined = opt.acute >= 0 || opt.grave >= 0;
  if (has_points == has_refined) {
    std::cerr << "error: give either --points or both --acute and --grave\n";
    return kExitUsage;
  }
  if (has_refined && (opt.acute < 0 || opt.grave < 0)) {
    std::cerr << "error: --acute and --grave must be given together\n";
    return kExitUsage;
  }
  Monomial b;
  try {
    b = Monomial::parse(opt.b_text);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  Engine engine(convention_from(opt.dot_weight));
  load_cache_if_any(engine, opt.cache_path);

  Rational value;
  Rational part_acute, part_grave;
  int points = has_points ? opt.points : opt.acute + opt.grave;
  if (has_points) {
    value = engine.total(opt.m, opt.points, b);
    if (opt.refined) {
      for (int a = 0; a <= opt.points; ++a) {
        const RefinedValue rv = engine.refined(opt.m, a, opt.points - a, b);
        part_acute += rv.h_acute;
        part_grave += rv.h_grave;
      }
    }
  } else {
    const RefinedValue rv = engine.refined(opt.m, opt.acute, opt.grave, b);
    value = rv.total();
    part_acute = rv.h_acute;
    part_grave = rv.h_grave;
  }

  std::ostringstream out;
  const OutputFormat format = parse_format(opt.format);
  if (format == OutputFormat::Json) {
    out << "{\"m\":" << opt.m << ",\"points\":" << points;
    if (has_refined) out << ",\"acute\":" << opt.acute << ",\"grave\":" << opt.grave;
    out << ",\"b\":\"" << b.text() << "\",\"value\":{\"num\":\""
        << boost::multiprecision::numerator(value) << "\",\"den\":\""
        << boost::multiprecision::denominator(value) << "\"}";
    if (opt.refined || has_refined)
      out << ",\"value_acute\":\"" << to_fraction(part_acute, true)
          << "\",\"value_grave\":\"" << to_fraction(part_grave, true) << "\"";
    out << "}\n";
  } else if (format == OutputFormat::Csv) {
    out << "m,acute,grave,b,num,den\n";
    out << opt.m << ',' << (has_refined ? std::to_string(opt.acute) : "")
        << ',' << (has_refined ? std::to_string(opt.grave) : "") << ','
        << b.text() << ',' << boost::multiprecision::numerator(value) << ','
        << boost::multiprecision::denominator(value) << "\n";
  } else {
    out << to_fraction(value);
    if (opt.refined || has_refined)
      out << " (acute " << to_fraction(part_acute) << ", grave "
          << to_fraction(part_grave) << ")";
    out << "\n";
  }
  const int rc = write_output(opt.out_path, out.str());
  if (rc != kExitOk) return rc;
  return save_cache_if_any(engine, opt.cache_path);
}

struct CheckCounters {
  long checks = 0;
  bool failed = false;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && !failed) {
      failed = true;
      first = what;
    }
  }
};

int run_check(const std::string& suite, const Convention& conv) {
  CheckCounters c;
  Engine engine(conv);
  if (suite == "oracle") {
    for (int k = 0; k <= 5; ++k)
      for (const Monomial& b : enumerate_degree(k))
        for (int total = 0; total <= 3; ++total)
          for (int m = 0; m <= total; ++m)
            for (int a = 0; a + m <= total; ++a) {
              const int g = total - m - a;
              for (SimpleKind kind :
                   {SimpleKind::AcuteSimple, SimpleKind::GraveSimple,
                    SimpleKind::InteriorSimple}) {
                const Rational fast = engine.step_by_moves(kind, m, a, g, b);
                const Rational slow = engine.step_by_contraction(kind, m, a, g, b);
                c.expect(fast == slow,
                         "step(" + std::string(simple_kind_name(kind)) + ", m=" +
                             std::to_string(m) + ", acute=" + std::to_string(a) +
                             ", grave=" + std::to_string(g) + ", b=" + b.text() +
                             "): moves " + to_fraction(fast) + " vs contraction " +
                             to_fraction(slow));
              }
            }
  } else if (suite == "pde") {
    const SeriesBounds bounds{2, 2, 2, 6};
    const SeriesTriple series = from_engine(engine, bounds);
    for (auto [dir, kind] :
         {std::pair{Direction::Beta, OperatorKind::BetaDerived},
          std::pair{Direction::Gamma, OperatorKind::GammaDerived},
          std::pair{Direction::Alpha, OperatorKind::AlphaDerived}}) {
      const TruncatedSeries res =
          residual(dir, series, build_operator(kind, bounds.max_degree, conv));
      c.expect(res.is_zero(), std::string("residual(") + operator_kind_name(kind) +
                                  ") has " + std::to_string(res.coefficient_count()) +
                                  " nonzero coefficients");
    }
    const TruncatedSeries res_lit = residual(
        Direction::Gamma, series,
        build_operator(OperatorKind::GammaLiteral, bounds.max_degree, conv));
    c.expect(res_lit.is_zero(), "residual(L_gamma(literal)) nonzero");
  } else if (suite == "classical") {
    const CutAndJoinReport report = cut_and_join_check(4, 4);
    c.expect(report.mismatches == 0,
             "cut-and-join evolution has " + std::to_string(report.mismatches) +
                 " mismatches against brute force");
  } else if (suite == "symmetry") {
    for (int k = 0; k <= 5; ++k)
      for (const Monomial& b : enumerate_degree(k))
        for (int total = 0; total <= 3; ++total)
          for (int m = 0; m <= total; ++m) {
            const int points = total - m;
            c.expect(engine.total(m, points, b) ==
                         engine.total(m, points, b.star()),
                     "h(" + std::to_string(m) + "," + std::to_string(points) +
                         "," + b.text() + ") != h(same, star=" +
                         b.star().text() + ")");
            for (int a = 0; a <= points; ++a) {
              const RefinedValue lhs = engine.refined(m, a, points - a, b);
              const RefinedValue rhs =
                  engine.refined(m, points - a, a, b.star());
              c.expect(lhs.h_acute == rhs.h_grave,
                       "refined mirror at (m=" + std::to_string(m) +
                           ", acute=" + std::to_string(a) + ", grave=" +
                           std::to_string(points - a) + ", b=" + b.text() + ")");
            }
          }
  } else {
    std::cerr << "error: unknown suite '" << suite << "'\n";
    return kExitUsage;
  }
  if (c.failed) {
    std::cout << "check " << suite << ": FAIL after " << c.checks
              << " checks\nfirst counterexample: " << c.first << "\n";
    return kExitFailure;
  }
  std::cout << "check " << suite << ": PASS (" << c.checks << " checks)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for disk single Hurwitz numbers"};
  app.require_subcommand(1);

  EvalOptions eval;
  CLI::App* cmd_eval = app.add_subcommand("eval", "Evaluate one number");
  cmd_eval->add_option("--m", eval.m, "Interior simple critical values")->required();
  cmd_eval->add_option("--points", eval.points, "Total boundary simple points");
  cmd_eval->add_option("--acute", eval.acute, "Acute-point count");
  cmd_eval->add_option("--grave", eval.grave, "Grave-point count");
  cmd_eval->add_option("--b", eval.b_text, "Special value type, e.g. B1^2*D1")
      ->required();
  cmd_eval->add_option("--dot-weight", eval.dot_weight, "index|twice-index");
  cmd_eval->add_option("--format", eval.format, "json|csv|text");
  cmd_eval->add_option("--out", eval.out_path, "Output path (default stdout)");
  cmd_eval->add_option("--cache", eval.cache_path, "Memo cache file");
  cmd_eval->add_flag("--refined", eval.refined, "Also print the acute/grave split");

  struct {
    int max_degree = 0;
    int max_points = 0;
    std::string dot_weight = "index";
    std::string format = "text";
    std::string out_path;
    std::string cache_path;
    int threads = 1;
  } table;
  CLI::App* cmd_table = app.add_subcommand("table", "Dump a value table");
  cmd_table->add_option("--max-degree", table.max_degree, "Degree bound")->required();
  cmd_table->add_option("--max-points", table.max_points, "Bound on m + points")
      ->required();
  cmd_table->add_option("--dot-weight", table.dot_weight, "index|twice-index");
  cmd_table->add_option("--format", table.format, "json|csv|text");
  cmd_table->add_option("--out", table.out_path, "Output path (default stdout)");
  cmd_table->add_option("--cache", table.cache_path, "Memo cache file");
  cmd_table->add_option("--threads", table.threads, "Worker threads");

  struct {
    std::string suite;
    std::string dot_weight = "index";
  } check;
  CLI::App* cmd_check = app.add_subcommand("check", "Run a verification suite");
  cmd_check->add_option("suite", check.suite, "oracle|pde|classical|symmetry")
      ->required();
  cmd_check->add_option("--dot-weight", check.dot_weight, "index|twice-index");

  struct {
    std::string kind;
    std::string dot_weight = "index";
    int max_degree = 4;
    int max_points = 2;
    std::string out_path;
  } report;
  CLI::App* cmd_report = app.add_subcommand("report", "Emit a diagnostic report");
  cmd_report->add_option("kind", report.kind, "consistency|routes")->required();
  cmd_report->add_option("--dot-weight", report.dot_weight, "index|twice-index");
  cmd_report->add_option("--max-degree", report.max_degree, "Degree bound");
  cmd_report->add_option("--max-points", report.max_points, "Point bound");
  cmd_report->add_option("--out", report.out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_eval->parsed()) return run_eval(eval);
    if (cmd_table->parsed()) {
      Engine engine(convention_from(table.dot_weight));
      load_cache_if_any(engine, table.cache_path);
      const std::string payload = render_table(
          engine, TableConfig{table.max_degree, table.max_points,
                              parse_format(table.format), table.threads});
      const int rc = write_output(table.out_path, payload);
      if (rc != kExitOk) return rc;
      return save_cache_if_any(engine, table.cache_path);
    }
    if (cmd_check->parsed())
      return run_check(check.suite, convention_from(check.dot_weight));
    if (cmd_report->parsed()) {
      const Convention conv = convention_from(report.dot_weight);
      std::string payload;
      if (report.kind == "consistency") {
        payload = consistency_report(conv, report.max_degree, report.max_points)
                      .text();
      } else if (report.kind == "routes") {
        Engine engine(conv);
        payload = route_report_text(engine, report.max_degree);
      } else {
        std::cerr << "error: unknown report kind '" << report.kind << "'\n";
        return kExitUsage;
      }
      return write_output(report.out_path, payload);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CacheError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
