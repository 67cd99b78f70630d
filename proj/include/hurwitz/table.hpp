#pragma once

#include <string>

#include "hurwitz/engine.hpp"

namespace hurwitz {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(const std::string& name);  // throws invalid_argument

struct TableConfig {
  int max_degree = 0;
  int max_points = 0;
  OutputFormat format = OutputFormat::Text;
  int threads = 1;
};

// Renders every h(m, points, b) with degree(b) <= max_degree and
// m + points <= max_points. Deterministic row order; byte-identical output
// for any thread count. JSON rows carry point totals, CSV rows the refined
// (m, acute, grave) split.
std::string render_table(Engine& engine, const TableConfig& config);

}  // namespace hurwitz
