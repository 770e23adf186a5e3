#include "fibchain/io.hpp"

#include <cstdint>
#include <limits>
#include <regex>
#include <sstream>

namespace fib {

namespace {

json big_to_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

BigInt parse_big(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(t.begin());
  return BigInt(t);
}

}  // namespace

json to_json(const GoldenRational& x) {
  return json{{"p", big_to_json(x.p())}, {"q", big_to_json(x.q())}, {"den", big_to_json(x.den())}};
}

json to_json(const CrossingEvent& ev) {
  json j{{"kind", std::string(1, ev.kind)},
         {"grid", big_to_json(ev.grid_index)},
         {"x", to_json(ev.x)}};
  if (ev.coincident) j["coincident"] = true;
  return j;
}

json to_json(const LatticeLine& line) {
  return json{{"r", big_to_json(line.r)},
              {"s", big_to_json(line.s)},
              {"u", to_json(line.intercept)},
              {"d", to_json(line.distance)}};
}

json to_json(const Interval& iv) {
  return json{{"lo", to_json(iv.lo)},
              {"hi", to_json(iv.hi)},
              {"kind", std::string(1, iv.kind)},
              {"path", iv.path.str()}};
}

json to_json(const Partition& w) {
  json items = json::array();
  for (const Interval& iv : w.intervals) items.push_back(to_json(iv));
  return json{{"level", w.level}, {"intervals", std::move(items)}};
}

json bratteli_json(int levels) {
  json lv = json::array();
  for (int n = 0; n <= levels; ++n) {
    DimensionVector v = dimension_vector(n);
    lv.push_back(json{{"n", n}, {"kL", big_to_json(v.k)}, {"kS", big_to_json(v.kp)}});
  }
  return json{{"levels", std::move(lv)}, {"edges", json::array({json::array({1, 1}), json::array({1, 0})})}};
}

std::string bratteli_dot(int levels) {
  std::ostringstream os;
  os << "digraph bratteli {\n  rankdir=TB;\n  node [shape=circle];\n";
  for (int n = 0; n <= levels; ++n) {
    DimensionVector v = dimension_vector(n);
    os << "  L" << n << " [label=\"L" << n << ":" << v.k << "\"];\n";
    os << "  S" << n << " [label=\"S" << n << ":" << v.kp << "\"];\n";
    os << "  { rank=same; L" << n << "; S" << n << "; }\n";
  }
  for (int n = 0; n < levels; ++n) {
    // inclusion matrix [[1,1],[1,0]]: L_{n+1} <- L_n + S_n, S_{n+1} <- L_n
    os << "  L" << n << " -> L" << n + 1 << ";\n";
    os << "  S" << n << " -> L" << n + 1 << ";\n";
    os << "  L" << n << " -> S" << n + 1 << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::optional<GoldenRational> parse_golden(const std::string& text) {
  static const std::regex with_p_q(R"(^\s*([+-]?\d+)([+-]\d+)\*tau(?:/(\d+))?\s*$)");
  static const std::regex only_q(R"(^\s*([+-]?\d+)\*tau(?:/(\d+))?\s*$)");
  static const std::regex only_p(R"(^\s*([+-]?\d+)(?:/(\d+))?\s*$)");
  std::smatch m;
  try {
    if (std::regex_match(text, m, with_p_q))
      return GoldenRational(parse_big(m[1]), parse_big(m[2]),
                            m[3].matched ? parse_big(m[3]) : BigInt(1));
    if (std::regex_match(text, m, only_q))
      return GoldenRational(0, parse_big(m[1]), m[2].matched ? parse_big(m[2]) : BigInt(1));
    if (std::regex_match(text, m, only_p))
      return GoldenRational(parse_big(m[1]), 0, m[2].matched ? parse_big(m[2]) : BigInt(1));
  } catch (const DivisionByZero&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace fib
