#include "hurwitz/table.hpp"

#include <atomic>
#include <functional>
#include <sstream>
#include <thread>
#include <vector>

namespace hurwitz {

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format: " + name);
}

namespace {

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const int workers = static_cast<int>(
      std::min<std::size_t>(n, static_cast<std::size_t>(threads)));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
        fn(i);
    });
  for (auto& t : pool) t.join();
}

struct Row {
  int m;
  int acute;
  int grave;
  Monomial b;
  Rational value;
};

}  // namespace

std::string render_table(Engine& engine, const TableConfig& config) {
  std::vector<Monomial> monomials;
  for (int k = 0; k <= config.max_degree; ++k)
    for (const Monomial& b : enumerate_degree(k)) monomials.push_back(b);

  // Refined index list in output order.
  std::vector<Row> rows;
  for (int m = 0; m <= config.max_points; ++m)
    for (int points = 0; points + m <= config.max_points; ++points)
      for (int a = 0; a <= points; ++a)
        for (const Monomial& b : monomials)
          rows.push_back({m, a, points - a, b, Rational(0)});

  parallel_for(rows.size(), config.threads, [&](std::size_t i) {
    rows[i].value = engine.value(rows[i].m, rows[i].acute, rows[i].grave, rows[i].b);
  });

  std::ostringstream out;
  const char* conv = engine.convention().name();
  switch (config.format) {
    case OutputFormat::Csv: {
      out << "# dot_weight=" << conv << " max_degree=" << config.max_degree
          << " max_points=" << config.max_points << "\n";
      out << "m,acute,grave,b,num,den\n";
      for (const Row& r : rows)
        out << r.m << ',' << r.acute << ',' << r.grave << ',' << r.b.text()
            << ',' << boost::multiprecision::numerator(r.value) << ','
            << boost::multiprecision::denominator(r.value) << "\n";
      break;
    }
    case OutputFormat::Json: {
      // Point totals, aggregated from the refined rows.
      out << "{\"dot_weight\":\"" << conv
          << "\",\"max_degree\":" << config.max_degree
          << ",\"max_points\":" << config.max_points << ",\"rows\":[";
      bool first = true;
      std::size_t i = 0;
      while (i < rows.size()) {
        const int m = rows[i].m;
        const int points = rows[i].acute + rows[i].grave;
        // rows for a fixed (m, points) block are contiguous per monomial run
        std::map<Monomial, Rational> totals;
        std::size_t j = i;
        for (; j < rows.size() && rows[j].m == m &&
               rows[j].acute + rows[j].grave == points;
             ++j)
          totals[rows[j].b] += rows[j].value;
        for (const auto& [b, v] : totals) {
          if (!first) out << ",";
          first = false;
          out << "{\"m\":" << m << ",\"points\":" << points << ",\"b\":\""
              << b.text() << "\",\"value\":{\"num\":\""
              << boost::multiprecision::numerator(v) << "\",\"den\":\""
              << boost::multiprecision::denominator(v) << "\"}}";
        }
        i = j;
      }
      out << "]}";
      break;
    }
    case OutputFormat::Text: {
      out << "disk single Hurwitz numbers, dot_weight=" << conv
          << ", degree<=" << config.max_degree
          << ", m+points<=" << config.max_points << "\n";
      std::size_t i = 0;
      while (i < rows.size()) {
        const int m = rows[i].m;
        const int points = rows[i].acute + rows[i].grave;
        std::map<Monomial, Rational> totals;
        std::size_t j = i;
        for (; j < rows.size() && rows[j].m == m &&
               rows[j].acute + rows[j].grave == points;
             ++j)
          totals[rows[j].b] += rows[j].value;
        for (const auto& [b, v] : totals)
          out << "h(" << m << "," << points << "," << b.text()
              << ") = " << to_fraction(v) << "\n";
        i = j;
      }
      break;
    }
  }
  return out.str();
}

}  // namespace hurwitz
