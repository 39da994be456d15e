#include "io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "framescope/errors.hpp"

namespace framescope::io {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(Errc::InvalidWindow, "window: " + msg); }

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) invalid(std::string("missing field '") + name + "'");
  return j.at(name);
}

double number(const json& j, const char* name) {
  if (!j.is_number()) invalid(std::string("field '") + name + "' must be a number");
  return j.get<double>();
}

Xi xi_from_json(const json& j) {
  if (j.is_string()) return Xi::parse(j.get<std::string>());
  if (j.is_number()) return Xi(j.get<double>());
  invalid("field 'xi' must be a number or a \"p/q\" string");
}

json xi_to_json(const Xi& xi) {
  if (const auto& r = xi.exact()) return std::to_string(r->num) + "/" + std::to_string(r->den);
  return xi.value();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

WindowSpec parse_window(const std::string& text) {
  if (text == "sawtooth") return WindowSpec::sawtooth();
  if (text == "sign") return WindowSpec::sign();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    invalid("expected 'sawtooth', 'sign' or a JSON object, got '" + text + "'");
  }
  return window_from_json(j);
}

WindowSpec window_from_json(const json& j) {
  if (!j.is_object()) invalid("expected a JSON object");
  const auto& kind_field = field(j, "kind");
  if (!kind_field.is_string()) invalid("field 'kind' must be a string");
  const auto kind = kind_field.get<std::string>();

  if (kind == "sawtooth") return WindowSpec::sawtooth();
  if (kind == "sign") return WindowSpec::sign();
  if (kind == "modulated") return WindowSpec::modulated(xi_from_json(field(j, "xi")));
  if (kind == "constant") {
    const double re = j.contains("re") ? number(j.at("re"), "re") : 0.0;
    const double im = j.contains("im") ? number(j.at("im"), "im") : 0.0;
    return WindowSpec::constant(cplx(re, im));
  }
  if (kind == "trigpoly") {
    const auto& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) invalid("field 'coeffs' must be an array of [n, re, im]");
    std::map<int, cplx> map;
    for (const auto& entry : coeffs) {
      if (!entry.is_array() || entry.size() < 2 || entry.size() > 3 || !entry[0].is_number_integer()) {
        invalid("each coeffs entry must be [n, re, im] with integer n");
      }
      const int n = entry[0].get<int>();
      const double re = number(entry[1], "coeffs.re");
      const double im = entry.size() == 3 ? number(entry[2], "coeffs.im") : 0.0;
      map[n] += cplx(re, im);
    }
    return WindowSpec::trig_poly(std::move(map));
  }
  if (kind == "piecewise_poly") {
    const auto& pieces = field(j, "pieces");
    if (!pieces.is_array()) invalid("field 'pieces' must be an array");
    std::vector<Piece> out;
    for (const auto& p : pieces) {
      if (!p.is_object()) invalid("each piece must be an object {a, b, poly}");
      Piece piece;
      piece.a = number(field(p, "a"), "a");
      piece.b = number(field(p, "b"), "b");
      const auto& poly = field(p, "poly");
      if (!poly.is_array()) invalid("field 'poly' must be an array of numbers");
      for (const auto& c : poly) piece.poly.push_back(number(c, "poly"));
      out.push_back(std::move(piece));
    }
    return WindowSpec::piecewise_poly(std::move(out));
  }
  invalid("unknown kind '" + kind + "'");
}

json window_to_json(const WindowSpec& w) {
  if (w.name() == "sawtooth" || w.name() == "sign") return {{"kind", w.name()}};
  if (auto t = w.get_if<TrigPoly>()) {
    json coeffs = json::array();
    for (const auto& [n, b] : t->coeffs) coeffs.push_back({n, b.real(), b.imag()});
    return {{"kind", "trigpoly"}, {"coeffs", coeffs}};
  }
  if (auto pw = w.get_if<PiecewisePoly>()) {
    json pieces = json::array();
    for (const auto& p : pw->pieces) pieces.push_back({{"a", p.a}, {"b", p.b}, {"poly", p.poly}});
    return {{"kind", "piecewise_poly"}, {"pieces", pieces}};
  }
  if (auto m = w.get_if<Modulated>()) return {{"kind", "modulated"}, {"xi", xi_to_json(m->xi)}};
  const auto& c = w.get_if<Constant>()->value;
  return {{"kind", "constant"}, {"re", c.real()}, {"im", c.imag()}};
}

json verdict_to_json(const Verdict& v) {
  const auto flag = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  return {{"status", to_string(v.status)},
          {"toeplitz",
           {{"injective", flag(v.toeplitz.injective)},
            {"bounded_below", flag(v.toeplitz.bounded_below)},
            {"invertible", flag(v.toeplitz.invertible)}}},
          {"citation", v.citation}};
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& field_name) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(Errc::InvalidArgument, field_name + ": cannot parse '" + item + "' as an integer");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void Table::write_csv(std::ostream& os) const {
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::visit(
          [&os](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
              os << csv_escape(v);
            } else if constexpr (std::is_same_v<T, double>) {
              os << format_double(v);
            } else if constexpr (std::is_same_v<T, bool>) {
              os << (v ? "true" : "false");
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
              os << v;
            }
          },
          row[i]);
    }
    os << '\n';
  }
}

json Table::to_json() const {
  json out = json::array();
  for (const auto& row : rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size() && i < columns.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              obj[columns[i]] = nullptr;
            } else if constexpr (std::is_same_v<T, double>) {
              // JSON has no inf/nan literals.
              obj[columns[i]] = std::isfinite(v) ? json(v) : json(format_double(v));
            } else {
              obj[columns[i]] = v;
            }
          },
          row[i]);
    }
    out.push_back(std::move(obj));
  }
  return out;
}

}  // namespace framescope::io
