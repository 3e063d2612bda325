#include <nlohmann/json.hpp>

#include "zetasums/cli.hpp"

namespace zetasums::cli {

std::vector<TableRow> table_rows(int r_max, int digits) {
  std::vector<TableRow> rows;
  // Values are small (down to ~10^-(3 r)), so absolute precision must cover
  // the requested significant digits below the leading zeros.
  const Precision prec(digits + 3 * r_max + 6);
  for (Anchor anchor : {Anchor::Quarter, Anchor::Half}) {
    for (int weight : {-1, 1}) {
      for (int b = weight == -1 ? 1 : 2; b <= r_max; ++b) {
        const SumIndex index{weight, b, anchor};
        const ClosedForm form = derive_for_index(index);
        rows.push_back({index, form, eval_closed_form(form, prec)});
      }
    }
  }
  return rows;
}

void emit_table(const std::vector<TableRow>& rows, Format format, int digits, std::ostream& out) {
  switch (format) {
    case Format::Text:
      for (const auto& row : rows) {
        out << series_label(row.index) << " = " << to_pretty(row.form) << "  ~ "
            << row.value.to_scientific(digits) << "\n";
      }
      break;
    case Format::Json:
      for (const auto& row : rows) {
        nlohmann::ordered_json j;
        j["anchor"] = anchor_name(row.index.anchor);
        j["weight"] = row.index.weight;
        j["b"] = row.index.bpow;
        j["closed_form"] = nlohmann::ordered_json::parse(to_json_text(row.form));
        j["value"] = row.value.to_scientific(digits);
        out << j.dump() << "\n";
      }
      break;
    case Format::Latex:
      out << "\\begin{align*}\n";
      for (const auto& row : rows) {
        const std::string sci = row.value.to_scientific(digits);
        const auto e = sci.find('e');
        out << series_latex(row.index) << " &= " << to_latex(row.form) << " \\approx " << sci.substr(0, e)
            << " \\times 10^{" << sci.substr(e + 1) << "} \\\\\n";
      }
      out << "\\end{align*}\n";
      break;
  }
}

}  // namespace zetasums::cli
