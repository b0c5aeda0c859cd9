#include "sparking/io.hpp"

#include <charconv>
#include <cstdint>
#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"

#include "sparking/errors.hpp"

namespace sparking {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back({++number, std::move(line)});
    start = end + 1;
  }
  // A trailing newline does not open another line.
  if (!lines.empty() && lines.back().text.empty() && !text.empty() && text.back() == '\n') lines.pop_back();
  return lines;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  return {std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
}

bool is_comment(const std::string& line) {
  auto first = line.find_first_not_of(" \t");
  return first != std::string::npos && line[first] == '#';
}

bool is_blank(const std::string& line) { return line.find_first_not_of(" \t") == std::string::npos; }

std::uint64_t parse_count(const std::string& token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + token + "'");
  }
  return value;
}

ElementId parse_id(const std::string& token, std::size_t line) {
  const auto value = parse_count(token, line, "a positive element id");
  if (value == 0 || value > UINT32_MAX) throw ParseError(line, "element id '" + token + "' out of range");
  return static_cast<ElementId>(value);
}

std::vector<ElementId> parse_ids(const std::string& text, std::size_t line) {
  auto toks = tokens(text);
  if (toks.size() == 1 && toks[0] == "-") return {};
  std::vector<ElementId> ids;
  for (const auto& t : toks) ids.push_back(parse_id(t, line));
  return ids;
}

// Drops comment lines; keeps blank ones where they carry meaning.
std::vector<Line> content_lines(std::string_view text, bool keep_blank) {
  std::vector<Line> out;
  for (auto& line : split_lines(text)) {
    if (is_comment(line.text)) continue;
    if (!keep_blank && is_blank(line.text)) continue;
    out.push_back(std::move(line));
  }
  return out;
}

SetSystem parse_set_system_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("sets") || !doc["sets"].is_array()) {
    throw ParseError(0, "JSON set system needs a \"sets\" array");
  }
  std::vector<std::vector<ElementId>> sets;
  std::vector<ElementId> seen;
  for (const auto& s : doc["sets"]) {
    if (!s.is_array()) throw ParseError(0, "each entry of \"sets\" must be an array of ids");
    std::vector<ElementId> ids;
    for (const auto& v : s) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) throw ParseError(0, "element ids must be positive integers");
      ids.push_back(v.get<ElementId>());
    }
    seen.insert(seen.end(), ids.begin(), ids.end());
    sets.push_back(std::move(ids));
  }

  std::vector<std::pair<ElementId, Weight>> weights;
  if (doc.contains("weights")) {
    if (!doc["weights"].is_object()) throw ParseError(0, "\"weights\" must map ids to weights");
    for (const auto& [key, value] : doc["weights"].items()) {
      const ElementId id = parse_id(key, 0);
      std::optional<Weight> w;
      if (value.is_number_integer()) w = Weight(value.get<std::int64_t>());
      else if (value.is_string()) w = parse_weight(value.get<std::string>());
      if (!w) throw ParseError(0, "weight for element " + key + " must be an integer or \"p/q\"");
      weights.emplace_back(id, *w);
      seen.push_back(id);
    }
  }

  std::vector<ElementId> ids;
  if (doc.contains("universe_size")) {
    if (!doc["universe_size"].is_number_unsigned()) throw ParseError(0, "\"universe_size\" must be a count");
    const auto m = doc["universe_size"].get<std::size_t>();
    for (std::size_t i = 1; i <= m; ++i) ids.push_back(static_cast<ElementId>(i));
  } else {
    ids = seen;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  }
  std::vector<GroundElement> elements;
  for (ElementId id : ids) {
    Weight w(static_cast<std::int64_t>(id));
    for (const auto& [wid, value] : weights) {
      if (wid == id) w = value;
    }
    elements.push_back({id, w});
  }
  for (const auto& [wid, value] : weights) {
    if (!std::binary_search(ids.begin(), ids.end(), wid)) {
      throw ParseError(0, "weight given for element " + std::to_string(wid) + " outside the universe");
    }
  }
  try {
    auto universe = std::make_shared<const Universe>(std::move(elements));
    return SetSystem(universe, sets);
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace

SetSystem parse_set_system(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_set_system_json(text);

  auto lines = content_lines(text, true);
  std::size_t at = 0;
  while (at < lines.size() && is_blank(lines[at].text)) ++at;
  if (at == lines.size()) throw ParseError(0, "empty set-system file");
  const auto header = tokens(lines[at].text);
  if (header.size() != 2) throw ParseError(lines[at].number, "expected header 'k m'");
  const auto k = parse_count(header[0], lines[at].number, "set count k");
  const auto m = parse_count(header[1], lines[at].number, "universe size m");
  if (k == 0) throw ParseError(lines[at].number, "k must be at least 1");
  if (m > Universe::kMaxSize) throw ParseError(lines[at].number, "universe size exceeds 64");
  ++at;

  std::vector<GroundElement> elements;
  for (std::size_t i = 1; i <= m; ++i) elements.push_back({static_cast<ElementId>(i), Weight(static_cast<std::int64_t>(i))});
  if (at < lines.size()) {
    const auto toks = tokens(lines[at].text);
    if (!toks.empty() && toks[0] == "weights") {
      if (toks.size() != m + 1) {
        throw ParseError(lines[at].number, "expected " + std::to_string(m) + " weights, got " + std::to_string(toks.size() - 1));
      }
      for (std::size_t i = 0; i < m; ++i) {
        auto w = parse_weight(toks[i + 1]);
        if (!w) throw ParseError(lines[at].number, "bad weight '" + toks[i + 1] + "'");
        elements[i].weight = *w;
      }
      ++at;
    }
  }

  UniversePtr universe;
  try {
    universe = std::make_shared<const Universe>(std::move(elements));
  } catch (const InvalidArgument& e) {
    throw ParseError(at > 0 ? lines[at - 1].number : 0, e.what());
  }

  std::vector<ElementSet> sets;
  for (std::uint64_t i = 0; i < k; ++i, ++at) {
    if (at >= lines.size()) {
      throw ParseError(lines.empty() ? 0 : lines.back().number,
                       "expected " + std::to_string(k) + " set lines, found " + std::to_string(i));
    }
    const auto ids = parse_ids(lines[at].text, lines[at].number);
    try {
      sets.push_back(universe->from_ids(ids));
    } catch (const InvalidArgument& e) {
      throw ParseError(lines[at].number, e.what());
    }
  }
  for (; at < lines.size(); ++at) {
    if (!is_blank(lines[at].text)) throw ParseError(lines[at].number, "unexpected content after the last set");
  }
  return SetSystem(universe, std::move(sets));
}

Matroid parse_matroid(std::string_view text) {
  const auto lines = content_lines(text, false);
  if (lines.empty()) throw ParseError(0, "empty matroid file");
  const auto header = tokens(lines[0].text);
  if (header.size() != 3 || header[0] != "ground") throw ParseError(lines[0].number, "expected header 'ground n r'");
  const auto n = parse_count(header[1], lines[0].number, "ground size n");
  const auto r = parse_count(header[2], lines[0].number, "rank r");
  if (n > Universe::kMaxSize) throw ParseError(lines[0].number, "ground size exceeds 64");
  if (r > n) throw ParseError(lines[0].number, "rank exceeds ground size");
  auto ground = std::make_shared<const Universe>(Universe::range(n));
  std::vector<ElementSet> bases;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto ids = parse_ids(lines[i].text, lines[i].number);
    if (ids.size() != r) {
      throw ParseError(lines[i].number, "basis has " + std::to_string(ids.size()) + " elements, rank is " + std::to_string(r));
    }
    try {
      bases.push_back(ground->from_ids(ids));
    } catch (const InvalidArgument& e) {
      throw ParseError(lines[i].number, e.what());
    }
  }
  // r = 0 admits the empty basis without listing it.
  if (bases.empty() && r == 0) bases.emplace_back();
  try {
    return Matroid(ground, std::move(bases));
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
}

Multigraph parse_graph(std::string_view text) {
  const auto lines = content_lines(text, false);
  if (lines.empty()) throw ParseError(0, "empty graph file");
  const auto header = tokens(lines[0].text);
  if (header.size() != 2 || header[0] != "vertices") throw ParseError(lines[0].number, "expected header 'vertices n+1'");
  const auto count = parse_count(header[1], lines[0].number, "vertex count");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto toks = tokens(lines[i].text);
    if (toks.size() != 3) throw ParseError(lines[i].number, "expected 'id u v'");
    const ElementId id = parse_id(toks[0], lines[i].number);
    const auto u = parse_count(toks[1], lines[i].number, "vertex");
    const auto v = parse_count(toks[2], lines[i].number, "vertex");
    if (u >= count || v >= count) throw ParseError(lines[i].number, "endpoint outside 0.." + std::to_string(count - 1));
    edges.push_back({id, static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  try {
    return Multigraph(count, std::move(edges));
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
}

std::vector<std::vector<ElementId>> parse_set_list(std::string_view text) {
  std::vector<std::vector<ElementId>> out;
  for (const auto& line : content_lines(text, false)) out.push_back(parse_ids(line.text, line.number));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace sparking
