#ifndef TRIOBS_TOOLS_JSON_WRITER_HPP_
#define TRIOBS_TOOLS_JSON_WRITER_HPP_

#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"

// Deterministic serialization: objects keep insertion order (ordered_json)
// and every floating-point value is printed with %.17g so identical runs
// produce byte-identical reports.

namespace triobs_cli {

using Json = nlohmann::ordered_json;

inline void dump17(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        dump17(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ',';
        first = false;
        dump17(item, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += v > 0 ? "\"inf\"" : (v < 0 ? "\"-inf\"" : "\"nan\"");
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      break;
    }
    default:
      out += j.dump();
  }
}

inline std::string dump17(const Json& j) {
  std::string out;
  dump17(j, out);
  out += '\n';
  return out;
}

}  // namespace triobs_cli

#endif  // TRIOBS_TOOLS_JSON_WRITER_HPP_
