#include "frz/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace frz {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Point parse_point(const GroupParams& g, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ValidationError("empty point");
  if (text.front() != '(') {
    const auto v = parse_uint(text);
    if (!v) throw ValidationError("malformed point '" + std::string(text) + "'");
    return g.from_index(*v);
  }
  if (text.back() != ')') throw ValidationError("unterminated point '" + std::string(text) + "'");
  std::string_view body = trim(text.substr(1, text.size() - 2));
  std::vector<Residue> coords;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto v = parse_uint(body.substr(0, comma));
    if (!v) throw ValidationError("malformed coordinate in '" + std::string(text) + "'");
    if (*v >= g.p()) throw ValidationError("residue " + std::to_string(*v) + " out of range for p = " + std::to_string(g.p()));
    coords.push_back(static_cast<Residue>(*v));
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (trim(body).empty()) throw ValidationError("trailing comma in '" + std::string(text) + "'");
  }
  return g.encode(coords);
}

std::string format_point(const GroupParams& g, Point u) {
  std::string out = "(";
  const auto c = g.coords(u);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  out += ')';
  return out;
}

DenseSet parse_set(std::string_view text) {
  std::optional<DenseSet> set;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!set) {
      std::istringstream in{std::string(line)};
      std::uint64_t p = 0, n = 0;
      std::string rest;
      if (!(in >> p >> n) || (in >> rest)) throw ParseError(line_no, "expected header 'p n'");
      try {
        set.emplace(GroupParams(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n)));
      } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }
    try {
      set->insert(parse_point(set->group(), line));
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!set) throw ParseError(line_no, "missing header 'p n'");
  return *std::move(set);
}

DenseSet read_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open set file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_set(buf.str());
}

std::string format_set(const DenseSet& a, std::span<const std::string> comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  const GroupParams& g = a.group();
  out += std::to_string(g.p()) + " " + std::to_string(g.n()) + "\n";
  a.for_each([&](Point u) { out += format_point(g, u) + "\n"; });
  return out;
}

void write_set_file(const std::filesystem::path& path, const DenseSet& a, std::span<const std::string> comments) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write set file " + path.string());
  out << format_set(a, comments);
}

}  // namespace frz
