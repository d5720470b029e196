#include <sstream>

#include "json.hpp"

#include "treewreath/graphs.hpp"

namespace treewreath {

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

template <class Fn>
void for_each_edge(const GraphBall& b, Fn fn) {
  for (std::size_t v = 0; v < b.size(); ++v) {
    for (const auto& e : b.adjacency[v]) {
      if (static_cast<std::size_t>(e.to) > v) fn(static_cast<int>(v), e);
    }
  }
}

}  // namespace

std::string export_dot(const GraphBall& b) {
  std::ostringstream os;
  os << "graph \"" << b.kind << "\" {\n";
  for (const auto& id : b.ids) os << "  \"" << id << "\";\n";
  for_each_edge(b, [&](int v, const Adjacency& e) {
    os << "  \"" << b.ids[static_cast<std::size_t>(v)] << "\" -- \"" << b.ids[static_cast<std::size_t>(e.to)] << "\"";
    if (e.type != 0) os << " [type=" << e.type << "]";
    os << ";\n";
  });
  os << "}\n";
  return os.str();
}

std::string export_graphml(const GraphBall& b) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
     << "  <key id=\"type\" for=\"edge\" attr.name=\"type\" attr.type=\"int\"/>\n"
     << "  <graph id=\"" << xml_escape(b.kind) << "\" edgedefault=\"undirected\">\n";
  for (const auto& id : b.ids) os << "    <node id=\"" << xml_escape(id) << "\"/>\n";
  for_each_edge(b, [&](int v, const Adjacency& e) {
    os << "    <edge source=\"" << xml_escape(b.ids[static_cast<std::size_t>(v)]) << "\" target=\""
       << xml_escape(b.ids[static_cast<std::size_t>(e.to)]) << "\">";
    if (e.type != 0) os << "<data key=\"type\">" << e.type << "</data>";
    os << "</edge>\n";
  });
  os << "  </graph>\n</graphml>\n";
  return os.str();
}

std::string export_json(const GraphBall& b) {
  nlohmann::ordered_json j;
  j["vertices"] = b.ids;
  auto edges = nlohmann::json::array();
  for_each_edge(b, [&](int v, const Adjacency& e) { edges.push_back({v, e.to, e.type}); });
  j["edges"] = std::move(edges);
  return j.dump();
}

}  // namespace treewreath
