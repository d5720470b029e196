#include "treewreath/configs.hpp"

#include "treewreath/error.hpp"

namespace treewreath {

void LampConfig::set(const Vertex& v, int value) {
  if (value == 0) {
    values_.erase(v);
  } else {
    values_[v] = value;
  }
}

std::string LampConfig::str() const {
  std::string s;
  for (const auto& [v, k] : values_) {
    if (!s.empty()) s += ',';
    s += v.str() + ":" + std::to_string(k);
  }
  return s;
}

LampConfig LampConfig::parse(std::string_view text) {
  LampConfig c;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos || colon + 1 == item.size()) {
      throw Error(ErrorKind::kParse, "config entries must look like vertex:value");
    }
    int value = 0;
    for (char ch : item.substr(colon + 1)) {
      if (ch < '0' || ch > '9') throw Error(ErrorKind::kParse, "bad lamp value in \"" + std::string(item) + "\"");
      value = value * 10 + (ch - '0');
    }
    const Vertex v = Vertex::parse(item.substr(0, colon));
    if (c.values_.count(v)) throw Error(ErrorKind::kParse, "duplicate vertex " + v.str() + " in config");
    c.set(v, value);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return c;
}

XVertex XVertex::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw Error(ErrorKind::kParse, "X-vertex must look like config|edge");
  return XVertex{LampConfig::parse(text.substr(0, bar)), EdgeRef::parse(text.substr(bar + 1))};
}

}  // namespace treewreath
