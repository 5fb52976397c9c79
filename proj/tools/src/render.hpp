#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace powertower::cli {

enum class Format { text, csv, json, latex };

/// Parse a --format value; throws std::invalid_argument on anything
/// other than text|csv|json|latex.
Format parse_format(const std::string& name);

/// One table cell, typed so each output format can render it natively:
/// json keeps numbers as numbers and exact values as decimal strings.
struct Cell {
  enum class Kind { text, exact, number, integer, boolean };

  Kind kind = Kind::text;
  std::string s;      // text and exact payloads
  double d = 0.0;     // number payload
  long long i = 0;    // integer payload
  bool b = false;     // boolean payload

  static Cell of_text(std::string v);
  /// An exact integer or rational, already in decimal form. Rendered
  /// unquoted in csv and as a string in json so consumers never pass
  /// it through a float.
  static Cell of_exact(std::string v);
  static Cell of_number(double v);
  static Cell of_integer(long long v);
  static Cell of_boolean(bool v);
};

/// A rendered command result: one table plus the parameters that
/// produced it. Every format consumes this one structure, which keeps
/// csv/json output deterministic by construction.
struct Table {
  std::string command;
  nlohmann::ordered_json params;  // flat key/value object
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Render in the requested format. text and latex aim at human
/// reading; csv and json are byte-stable machine encodings (numbers
/// round-trip exactly, exact values stay decimal strings).
std::string render(const Table& table, Format format);

/// Fixed float renderings shared by every emitter: display is %.10g,
/// machine is %.17g (round-trip exact).
std::string format_number_display(double v);
std::string format_number_exact(double v);

}  // namespace powertower::cli
