#pragma once

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "icln/classify.hpp"

namespace icln {

// One row of the published validity table for negation words up to length
// five: nine '+'/'-' cells in canonical column order. The table is kept
// verbatim, typos included; find_errata compares it against evaluation.
struct PrintedRow {
  NWord word;
  std::array<char, kContextCount> cells;
};

const std::vector<PrintedRow>& reference_table();  // 63 rows, shortlex order

enum class TableFormat { Csv, Markdown };

// The *computed* table for all words of length <= max_len (<= 8). Markdown
// uses display column names (○, ●, ...); CSV uses the ASCII context ids.
std::string render_table(int max_len, TableFormat fmt);

struct Mismatch {
  NWord word;
  ContextId context;
  bool printed;   // the published cell
  bool computed;  // what evaluation gives
  std::string justification;
};

// All cells where the published table disagrees with evaluation. Every
// expected mismatch carries a justification grounded in equivalences the
// published table itself asserts elsewhere.
std::vector<Mismatch> find_errata();

nlohmann::json errata_to_json(const std::vector<Mismatch>& errata);

}  // namespace icln
