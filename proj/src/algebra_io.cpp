#include "almg/algebra_io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace almg {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                              : "end of input: " + what),
      line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) l.words.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!l.words.empty()) lines.push_back(std::move(l));
  }
  return lines;
}

std::optional<std::size_t> parse_index(std::string_view w) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc{} || p != w.data() + w.size()) return std::nullopt;
  return v;
}

std::size_t expect_keyword_value(const std::vector<Line>& lines, std::size_t i,
                                 std::string_view key) {
  if (i >= lines.size()) throw ParseError(0, "expected '" + std::string(key) + "'");
  const Line& l = lines[i];
  if (l.words.size() != 2 || l.words[0] != key)
    throw ParseError(l.number, "expected '" + std::string(key) + " <value>'");
  auto v = parse_index(l.words[1]);
  if (!v) throw ParseError(l.number, "invalid " + std::string(key) + " value");
  return *v;
}

}  // namespace

Algebra parse_algebra(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty input");
  if (lines[0].words.size() != 2 || lines[0].words[0] != "almg" ||
      lines[0].words[1] != "v1")
    throw ParseError(lines[0].number, "expected header 'almg v1'");

  const std::size_t n = expect_keyword_value(lines, 1, "size");
  if (n == 0 || n > kMaxCarrier)
    throw ParseError(lines[1].number, "size must be in [1, " +
                                          std::to_string(kMaxCarrier) + "]");
  const std::size_t zero = expect_keyword_value(lines, 2, "zero");
  if (zero >= n) throw ParseError(lines[2].number, "zero must be less than size");

  std::array<std::optional<std::vector<Elem>>, 4> tables;
  std::size_t i = 3;
  while (i < lines.size()) {
    const Line& head = lines[i];
    if (head.words.size() != 2 || head.words[0] != "table")
      throw ParseError(head.number, "expected 'table add|join|meet|star'");
    std::optional<std::size_t> which;
    for (std::size_t k = 0; k < 4; ++k)
      if (head.words[1] == op_name(kAllOps[k])) which = k;
    if (!which)
      throw ParseError(head.number, "unknown table '" + std::string(head.words[1]) + "'");
    if (tables[*which])
      throw ParseError(head.number, "duplicate table '" + std::string(head.words[1]) + "'");

    std::vector<Elem> cells;
    cells.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      ++i;
      if (i >= lines.size())
        throw ParseError(0, "table '" + std::string(head.words[1]) + "' has " +
                                std::to_string(r) + " rows, expected " + std::to_string(n));
      const Line& row = lines[i];
      if (row.words[0] == "table")
        throw ParseError(row.number, "table '" + std::string(head.words[1]) + "' has " +
                                         std::to_string(r) + " rows, expected " +
                                         std::to_string(n));
      if (row.words.size() != n)
        throw ParseError(row.number, "row has " + std::to_string(row.words.size()) +
                                         " entries, expected " + std::to_string(n));
      for (auto w : row.words) {
        if (w == "?") {
          cells.push_back(kUndefined);
          continue;
        }
        auto v = parse_index(w);
        if (!v) throw ParseError(row.number, "invalid entry '" + std::string(w) + "'");
        if (*v >= n)
          throw ParseError(row.number, "entry " + std::string(w) + " out of range [0," +
                                           std::to_string(n) + ")");
        cells.push_back(static_cast<Elem>(*v));
      }
    }
    tables[*which] = std::move(cells);
    ++i;
  }
  for (std::size_t k = 0; k < 4; ++k)
    if (!tables[k])
      throw ParseError(0, "missing table '" + std::string(op_name(kAllOps[k])) + "'");

  return Algebra(n, static_cast<Elem>(zero), std::move(*tables[0]), std::move(*tables[1]),
                 std::move(*tables[2]), std::move(*tables[3]));
}

Algebra read_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

std::string format_algebra(const Algebra& alg, std::string_view comment) {
  std::ostringstream out;
  out << "almg v1\n";
  while (!comment.empty()) {
    auto eol = comment.find('\n');
    out << "# " << comment.substr(0, eol) << '\n';
    comment = eol == std::string_view::npos ? std::string_view{} : comment.substr(eol + 1);
  }
  const std::size_t n = alg.size();
  out << "size " << n << "\nzero " << alg.zero() << '\n';
  for (Op op : kAllOps) {
    out << "table " << op_name(op) << '\n';
    auto t = alg.table(op);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c) out << ' ';
        Elem v = t[r * n + c];
        if (v == kUndefined)
          out << '?';
        else
          out << v;
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace almg
