#include "render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace powertower::cli {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "latex") return Format::latex;
  throw std::invalid_argument("unknown format: " + name);
}

Cell Cell::of_text(std::string v) {
  Cell c;
  c.kind = Kind::text;
  c.s = std::move(v);
  return c;
}

Cell Cell::of_exact(std::string v) {
  Cell c;
  c.kind = Kind::exact;
  c.s = std::move(v);
  return c;
}

Cell Cell::of_number(double v) {
  Cell c;
  c.kind = Kind::number;
  c.d = v;
  return c;
}

Cell Cell::of_integer(long long v) {
  Cell c;
  c.kind = Kind::integer;
  c.i = v;
  return c;
}

Cell Cell::of_boolean(bool v) {
  Cell c;
  c.kind = Kind::boolean;
  c.b = v;
  return c;
}

std::string format_number_display(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string format_number_exact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string cell_text(const Cell& c, bool machine) {
  switch (c.kind) {
    case Cell::Kind::text:
    case Cell::Kind::exact:
      return c.s;
    case Cell::Kind::number:
      return machine ? format_number_exact(c.d) : format_number_display(c.d);
    case Cell::Kind::integer:
      return std::to_string(c.i);
    case Cell::Kind::boolean:
      return c.b ? "true" : "false";
  }
  return {};
}

bool right_aligned(const Cell& c) { return c.kind != Cell::Kind::text; }

std::string render_text(const Table& table) {
  const std::size_t ncols = table.columns.size();
  std::vector<std::size_t> width(ncols);
  std::vector<std::vector<std::string>> cells;
  cells.reserve(table.rows.size());
  for (std::size_t j = 0; j < ncols; ++j) width[j] = table.columns[j].size();
  for (const auto& row : table.rows) {
    std::vector<std::string> r;
    r.reserve(ncols);
    for (std::size_t j = 0; j < ncols; ++j) {
      r.push_back(j < row.size() ? cell_text(row[j], false) : "");
      width[j] = std::max(width[j], r.back().size());
    }
    cells.push_back(std::move(r));
  }
  std::ostringstream os;
  auto emit_row = [&](const std::vector<std::string>& r,
                      const std::vector<Cell>* typed) {
    for (std::size_t j = 0; j < ncols; ++j) {
      if (j) os << "  ";
      const bool right = typed && j < typed->size() && right_aligned((*typed)[j]);
      const std::size_t pad = width[j] - r[j].size();
      if (right) os << std::string(pad, ' ') << r[j];
      else if (j + 1 < ncols) os << r[j] << std::string(pad, ' ');
      else os << r[j];  // last column: no trailing spaces
    }
    os << "\n";
  };
  emit_row(table.columns, nullptr);
  std::size_t total = ncols ? 2 * (ncols - 1) : 0;
  for (std::size_t w : width) total += w;
  os << std::string(total, '-') << "\n";
  for (std::size_t i = 0; i < cells.size(); ++i) emit_row(cells[i], &table.rows[i]);
  return os.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

std::string render_csv(const Table& table) {
  std::ostringstream os;
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    if (j) os << ",";
    os << csv_escape(table.columns[j]);
  }
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ",";
      os << csv_escape(cell_text(row[j], true));
    }
    os << "\n";
  }
  return os.str();
}

std::string render_json(const Table& table) {
  nlohmann::ordered_json doc;
  doc["command"] = table.command;
  doc["params"] = table.params;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t j = 0; j < row.size() && j < table.columns.size(); ++j) {
      const Cell& c = row[j];
      switch (c.kind) {
        case Cell::Kind::text:
        case Cell::Kind::exact:
          obj[table.columns[j]] = c.s;
          break;
        case Cell::Kind::number:
          obj[table.columns[j]] = c.d;
          break;
        case Cell::Kind::integer:
          obj[table.columns[j]] = c.i;
          break;
        case Cell::Kind::boolean:
          obj[table.columns[j]] = c.b;
          break;
      }
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': case '%': case '#': case '_': case '{': case '}':
        out += '\\';
        out += ch;
        break;
      case '\\':
        out += "\\textbackslash{}";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

std::string render_latex(const Table& table) {
  std::ostringstream os;
  os << "\\begin{tabular}{|" << std::string(table.columns.size(), 'r') << "|}\n\\hline\n";
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    if (j) os << " & ";
    os << latex_escape(table.columns[j]);
  }
  os << " \\\\\n\\hline\n";
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << " & ";
      os << "$" << latex_escape(cell_text(row[j], false)) << "$";
    }
    os << " \\\\\n";
  }
  os << "\\hline\n\\end{tabular}\n";
  return os.str();
}

}  // namespace

std::string render(const Table& table, Format format) {
  switch (format) {
    case Format::text: return render_text(table);
    case Format::csv: return render_csv(table);
    case Format::json: return render_json(table);
    case Format::latex: return render_latex(table);
  }
  return {};
}

}  // namespace powertower::cli
