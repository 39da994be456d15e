#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "framescope/classifier.hpp"
#include "framescope/windows.hpp"

namespace framescope::io {

using json = nlohmann::json;

/// Parses "sawtooth", "sign", or a window JSON object.
WindowSpec parse_window(const std::string& text);
WindowSpec window_from_json(const json& j);
json window_to_json(const WindowSpec& w);

json verdict_to_json(const Verdict& v);

/// Comma-separated integer list, e.g. "4,8,16".
std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& field);

/// %.17g.
std::string format_double(double v);

using Cell = std::variant<std::monostate, std::string, std::int64_t, double, bool>;

/// Column-labelled rows written as CSV or as a JSON array of objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void write_csv(std::ostream& os) const;
  json to_json() const;
};

}  // namespace framescope::io
