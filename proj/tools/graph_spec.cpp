#include "graph_spec.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "satnum/constructions.hpp"
#include "satnum/generators.hpp"
#include "satnum/io.hpp"

namespace satnum::cli {
namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// "name(a,b)" -> name and the integer arguments.
bool split_call(const std::string& text, std::string& name, std::vector<unsigned>& args) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') return false;
  name = trim(text.substr(0, open));
  std::stringstream body(text.substr(open + 1, text.size() - open - 2));
  for (std::string item; std::getline(body, item, ',');) {
    item = trim(item);
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw SpecError("bad argument '" + item + "' in " + text);
    }
    if (item.size() > 6) throw SpecError("argument too large in " + text);
    args.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return true;
}

Graph family(const std::string& name, const std::vector<unsigned>& a, const std::string& text) {
  const std::map<std::string, std::pair<std::size_t, std::function<Graph()>>> table = {
      {"double_star", {2, [&] { return double_star(a[0], a[1]); }}},
      {"p5", {1, [&] { return caterpillar_p5(a[0]); }}},
      {"star", {1, [&] { return gen::star(a[0]); }}},
      {"path", {1, [&] { return gen::path(a[0]); }}},
      {"cycle", {1, [&] { return gen::cycle(a[0]); }}},
      {"clique", {1, [&] { return gen::clique(a[0]); }}},
      {"empty", {1, [&] { return gen::empty(a[0]); }}},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw SpecError("unknown graph family '" + name + "'");
  if (a.size() != it->second.first) {
    throw SpecError(name + " takes " + std::to_string(it->second.first) + " argument(s): " + text);
  }
  try {
    return it->second.second();
  } catch (const std::invalid_argument& e) {
    throw SpecError(text + ": " + e.what());
  }
}

Graph from_file_text(const std::string& content) {
  const auto body = trim(content);
  // Edge lists start with "n m"; graph6 never contains a space.
  if (body.find_first_of(" \t\n#") != std::string::npos) return io::parse_edge_list(body);
  return io::parse_graph6(body);
}

}  // namespace

NamedGraph parse_graph_spec(const std::string& raw, std::istream& in) {
  const auto text = trim(raw);
  if (text.empty()) throw SpecError("empty graph spec");

  if (text == "fig1a") return {example_kdelta_star(3, 5, 2).graph, {}};
  if (text == "fig1b") return {example_kdelta_doublestar(3, 5, 2).graph, {}};
  if (text == "fig2b") return {saturated_double_star(4, 5, 18).graph, {}};
  if (text == "fig3b") return {saturated_shorty(2, 19).graph, {}};
  if (text == "fig4") return {fig4_gadget(), fig4_labels()};

  std::string name;
  std::vector<unsigned> args;
  if (split_call(text, name, args)) return {family(name, args, text), {}};

  try {
    if (text == "-") {
      std::stringstream buffer;
      buffer << in.rdbuf();
      return {io::parse_graph6(trim(buffer.str())), {}};
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(text, ec)) {
      std::ifstream file(text);
      std::stringstream buffer;
      buffer << file.rdbuf();
      return {from_file_text(buffer.str()), {}};
    }
    return {io::parse_graph6(text), {}};
  } catch (const GraphError& e) {
    throw SpecError("cannot read graph '" + text + "': " + e.what());
  }
}

}  // namespace satnum::cli
