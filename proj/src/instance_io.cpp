#include "veralgo/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace veralgo::io {

namespace {

// Comment-stripped, trimmed lines.
std::vector<std::string> significant_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(begin, end - begin + 1));
  }
  return lines;
}

std::vector<std::int64_t> integers_of(const std::string& text,
                                      const std::string& where) {
  std::istringstream stream(text);
  std::vector<std::int64_t> out;
  std::string token;
  while (stream >> token) {
    try {
      std::size_t used = 0;
      std::int64_t value = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      throw ParseError(where + ": expected integer, got '" + token + "'");
    }
  }
  return out;
}

// "id: p1 p2 ..." into a preference table row.
void parse_pref_line(const std::string& line, PrefTable& table,
                     const std::string& where) {
  auto colon = line.find(':');
  if (colon == std::string::npos) {
    throw ParseError(where + ": expected 'id: ...', got '" + line + "'");
  }
  auto ids = integers_of(line.substr(0, colon), where);
  if (ids.size() != 1) {
    throw ParseError(where + ": expected a single id before ':'");
  }
  auto list = integers_of(line.substr(colon + 1), where);
  if (table.prefs.contains(ids[0])) {
    throw ParseError(where + ": duplicate id " + std::to_string(ids[0]));
  }
  table.prefs[ids[0]] = std::vector<AgentId>(list.begin(), list.end());
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("graph: empty file");

  ParsedGraph result;
  if (lines[0] == "D") {
    result.kind = GraphKind::Directed;
  } else if (lines[0] == "U") {
    result.kind = GraphKind::Undirected;
  } else {
    throw ParseError("graph: first line must be 'D' or 'U'");
  }

  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream stream(lines[i]);
    std::string tag;
    stream >> tag;
    std::string rest;
    std::getline(stream, rest);
    auto ids = integers_of(rest, "graph line " + std::to_string(i + 1));
    if (tag == "v") {
      if (ids.size() != 1) {
        throw ParseError("graph: 'v' takes one id");
      }
      if (result.kind == GraphKind::Directed) {
        result.digraph.vertices.insert(ids[0]);
      } else {
        result.ugraph.adj.try_emplace(ids[0]);
      }
    } else if (tag == "e") {
      if (ids.size() != 2) {
        throw ParseError("graph: 'e' takes two ids");
      }
      if (result.kind == GraphKind::Directed) {
        result.digraph.vertices.insert(ids[0]);
        result.digraph.vertices.insert(ids[1]);
        result.digraph.edges.insert(Edge{ids[0], ids[1]});
      } else {
        if (ids[0] == ids[1]) {
          throw ParseError("graph: undirected self-loop on " +
                           std::to_string(ids[0]));
        }
        auto& a = result.ugraph.adj[ids[0]];
        result.ugraph.adj.try_emplace(ids[1]);
        if (a.contains(ids[1])) {
          throw ParseError("graph: edge " + std::to_string(ids[0]) + " " +
                           std::to_string(ids[1]) +
                           " listed twice (either orientation)");
        }
        a.insert(ids[1]);
        result.ugraph.adj[ids[1]].insert(ids[0]);
      }
    } else {
      throw ParseError("graph: unknown line tag '" + tag + "'");
    }
  }
  return result;
}

MatchingInstance parse_matching_instance(std::string_view text) {
  auto lines = significant_lines(text);
  MatchingInstance inst;
  PrefTable* current = nullptr;
  for (const std::string& line : lines) {
    if (line == "[proposers]") {
      current = &inst.proposers;
    } else if (line == "[responders]") {
      current = &inst.responders;
    } else if (!line.empty() && line.front() == '[') {
      throw ParseError("matching: unknown section " + line);
    } else {
      if (current == nullptr) {
        throw ParseError("matching: preference line outside a section");
      }
      parse_pref_line(line, *current, "matching");
    }
  }
  return inst;
}

PlacementInstance parse_placement_instance(std::string_view text) {
  auto lines = significant_lines(text);
  PlacementInstance inst;
  enum class Section { None, Vacancies, Teachers, Preferences, Initial };
  Section section = Section::None;
  for (const std::string& line : lines) {
    if (line == "[vacancies]") {
      section = Section::Vacancies;
    } else if (line == "[teachers]") {
      section = Section::Teachers;
    } else if (line == "[preferences]") {
      section = Section::Preferences;
    } else if (line == "[initial]") {
      section = Section::Initial;
    } else if (!line.empty() && line.front() == '[') {
      throw ParseError("placement: unknown section " + line);
    } else {
      switch (section) {
        case Section::None:
          throw ParseError("placement: data before any section");
        case Section::Vacancies:
          for (std::int64_t id : integers_of(line, "placement vacancies")) {
            inst.vacancies.insert(id);
          }
          break;
        case Section::Teachers:
          for (std::int64_t id : integers_of(line, "placement teachers")) {
            inst.teachers.push_back(id);
          }
          break;
        case Section::Preferences:
          parse_pref_line(line, inst.preferences, "placement preferences");
          break;
        case Section::Initial: {
          auto ids = integers_of(line, "placement initial");
          if (ids.size() != 2) {
            throw ParseError("placement: initial lines are 'teacher vacancy'");
          }
          inst.initial[ids[0]] = ids[1];
          break;
        }
      }
    }
  }
  return inst;
}

std::vector<Key> parse_integers(std::string_view text) {
  std::vector<Key> out;
  for (const std::string& line : significant_lines(text)) {
    for (std::int64_t v : integers_of(line, "integers")) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> parse_vertex_sequences(
    std::string_view text) {
  std::vector<std::vector<Vertex>> out;
  for (const std::string& line : significant_lines(text)) {
    auto ids = integers_of(line, "sequence");
    out.push_back(std::vector<Vertex>(ids.begin(), ids.end()));
  }
  return out;
}

MatchingResult parse_matching_solution(std::string_view text) {
  MatchingResult couples;
  for (const std::string& line : significant_lines(text)) {
    auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw ParseError("matching solution: expected 'proposer -> responder'");
    }
    auto left = integers_of(line.substr(0, arrow), "matching solution");
    auto right = integers_of(line.substr(arrow + 2), "matching solution");
    if (left.size() != 1 || right.size() != 1) {
      throw ParseError("matching solution: expected one id on each side");
    }
    if (couples.contains(left[0])) {
      throw ParseError("matching solution: proposer " +
                       std::to_string(left[0]) + " listed twice");
    }
    couples[left[0]] = right[0];
  }
  return couples;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open file: " + path.string());
  }
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

std::string format_sequence(std::span<const Vertex> s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out << " ";
    out << s[i];
  }
  return out.str();
}

std::string format_matching(const MatchingResult& couples) {
  std::ostringstream out;
  for (const auto& [p, r] : couples) {
    out << p << " -> " << r << "\n";
  }
  return out.str();
}

}  // namespace veralgo::io
