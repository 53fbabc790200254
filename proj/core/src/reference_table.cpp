#include "icln/reference_table.hpp"

#include <sstream>
#include <stdexcept>

namespace icln {

namespace {

// The published table, transcribed cell for cell. Column order matches the
// canonical suite. Two known defects are preserved on purpose: the i(○,●)
// cell of row p, and the six rooted cells of row !!!!!p (which duplicate
// the !!!!p row).
constexpr struct { const char* word; const char* cells; } kPublished[] = {
    {"p", "-+--+--++"},
    {"~p", "+-+---+--"},
    {"!p", "+-++-++++"},
    {"~~p", "-+-++--+-"},
    {"~!p", "-+-------"},
    {"!~p", "-+-++++++"},
    {"!!p", "-+--+-+++"},
    {"~~~p", "+-+---+--"},
    {"~~!p", "+-+++++++"},
    {"~!~p", "+--------"},
    {"~!!p", "+--------"},
    {"!~~p", "+-+--++++"},
    {"!~!p", "+-+++++++"},
    {"!!~p", "+-+---+++"},
    {"!!!p", "+-++-++++"},
    {"~~~~p", "-+-++--+-"},
    {"~~~!p", "-+-------"},
    {"~~!~p", "-++++++++"},
    {"~~!!p", "-++++++++"},
    {"~!~~p", "-+-------"},
    {"~!~!p", "-+-------"},
    {"~!!~p", "-+-------"},
    {"~!!!p", "-+-------"},
    {"!~~~p", "-+-++++++"},
    {"!~~!p", "-+----+++"},
    {"!~!~p", "-++++++++"},
    {"!~!!p", "-++++++++"},
    {"!!~~p", "-+-++-+++"},
    {"!!~!p", "-+----+++"},
    {"!!!~p", "-+-++++++"},
    {"!!!!p", "-+--+-+++"},
    {"~~~~~p", "+-+---+--"},
    {"~~~~!p", "+-+++++++"},
    {"~~~!~p", "+--------"},
    {"~~~!!p", "+--------"},
    {"~~!~~p", "+-+++++++"},
    {"~~!~!p", "+-+++++++"},
    {"~~!!~p", "+-+++++++"},
    {"~~!!!p", "+-+++++++"},
    {"~!~~~p", "+--------"},
    {"~!~~!p", "+--------"},
    {"~!~!~p", "+--------"},
    {"~!~!!p", "+--------"},
    {"~!!~~p", "+--------"},
    {"~!!~!p", "+--------"},
    {"~!!!~p", "+--------"},
    {"~!!!!p", "+--------"},
    {"!~~~~p", "+-+--++++"},
    {"!~~~!p", "+-+++++++"},
    {"!~~!~p", "+-----+++"},
    {"!~~!!p", "+-----+++"},
    {"!~!~~p", "+-+++++++"},
    {"!~!~!p", "+-+++++++"},
    {"!~!!~p", "+-+++++++"},
    {"!~!!!p", "+-+++++++"},
    {"!!~~~p", "+-+---+++"},
    {"!!~~!p", "+-+++++++"},
    {"!!~!~p", "+-----+++"},
    {"!!~!!p", "+-----+++"},
    {"!!!~~p", "+-+--++++"},
    {"!!!~!p", "+-+++++++"},
    {"!!!!~p", "+-+---+++"},
    {"!!!!!p", "-+--+-+++"},
};

const char* kSelfContradiction =
    "the published table contradicts itself: p -> ~~p holds at every world "
    "of every model, yet this column prints '-' for ~~p; evaluating the "
    "two-world pseudosubmodel directly, its p-false world refutes p";

const char* kOddRunCollapse =
    "three '!' in a row collapse (!!!A and !A force alike everywhere), so "
    "the !!!!!p row must repeat the !p row; the published row repeats "
    "!!!!p instead";

}  // namespace

const std::vector<PrintedRow>& reference_table() {
  static const std::vector<PrintedRow> rows = [] {
    std::vector<PrintedRow> out;
    for (const auto& r : kPublished) {
      PrintedRow row;
      row.word = parse_nword(r.word);
      for (int i = 0; i < kContextCount; ++i) row.cells[i] = r.cells[i];
      out.push_back(std::move(row));
    }
    return out;
  }();
  return rows;
}

std::string render_table(int max_len, TableFormat fmt) {
  if (max_len < 0 || max_len > 8)
    throw std::invalid_argument("table max_len must be in 0..8");
  std::ostringstream out;
  if (fmt == TableFormat::Csv) {
    out << "word";
    for (int i = 0; i < kContextCount; ++i)
      out << ',' << context_name(static_cast<ContextId>(i));
    out << '\n';
    for (const NWord& w : all_nwords(max_len)) {
      out << render(w);
      Signature s = signature(w);
      for (int i = 0; i < kContextCount; ++i) out << ',' << (s.test(i) ? '+' : '-');
      out << '\n';
    }
  } else {
    out << "| word |";
    for (int i = 0; i < kContextCount; ++i)
      out << ' ' << context_display(static_cast<ContextId>(i)) << " |";
    out << "\n|---|";
    for (int i = 0; i < kContextCount; ++i) out << "---|";
    out << '\n';
    for (const NWord& w : all_nwords(max_len)) {
      out << "| " << render(w) << " |";
      Signature s = signature(w);
      for (int i = 0; i < kContextCount; ++i) out << ' ' << (s.test(i) ? '+' : '-') << " |";
      out << '\n';
    }
  }
  return out.str();
}

std::vector<Mismatch> find_errata() {
  std::vector<Mismatch> out;
  for (const PrintedRow& row : reference_table()) {
    Signature s = signature(row.word);
    for (int i = 0; i < kContextCount; ++i) {
      bool printed = row.cells[i] == '+';
      bool computed = s.test(i);
      if (printed == computed) continue;
      std::string why;
      if (row.word.negs.empty() && static_cast<ContextId>(i) == ContextId::i01)
        why = kSelfContradiction;
      else if (row.word.negs == std::vector<NegKind>(5, NegKind::Perp))
        why = kOddRunCollapse;
      else
        why = "unexplained disagreement";
      out.push_back({row.word, static_cast<ContextId>(i), printed, computed, std::move(why)});
    }
  }
  return out;
}

nlohmann::json errata_to_json(const std::vector<Mismatch>& errata) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Mismatch& m : errata)
    arr.push_back({{"word", render(m.word)},
                   {"context", std::string(context_name(m.context))},
                   {"printed", m.printed ? "+" : "-"},
                   {"computed", m.computed ? "+" : "-"},
                   {"justification", m.justification}});
  return arr;
}

}  // namespace icln
