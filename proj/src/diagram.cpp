#include "sgh/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "sgh/errors.hpp"

namespace sgh {

std::string to_string(Square s) {
  return "(" + std::to_string(s.row) + "," + std::to_string(s.col) + ")";
}

Diagram Diagram::from_markings(int size, std::vector<Square> xs, std::vector<Square> os) {
  if (size < 2) throw ValidationError("grid size must be at least 2, got " + std::to_string(size));

  auto in_range = [size](Square s) { return s.row >= 0 && s.row < size && s.col >= 0 && s.col < size; };
  for (const auto& s : xs)
    if (!in_range(s)) throw ValidationError("X at " + to_string(s) + " lies outside the grid");
  for (const auto& s : os)
    if (!in_range(s)) throw ValidationError("O at " + to_string(s) + " lies outside the grid");

  Diagram d;
  d.size_ = size;
  d.x_col_.assign(size, -1);
  d.x_row_.assign(size, -1);
  for (const auto& s : xs) {
    if (d.x_col_[s.row] != -1)
      throw ValidationError("two X's in row " + std::to_string(s.row));
    if (d.x_row_[s.col] != -1)
      throw ValidationError("two X's in column " + std::to_string(s.col));
    d.x_col_[s.row] = s.col;
    d.x_row_[s.col] = s.row;
  }
  for (int i = 0; i < size; ++i) {
    if (d.x_col_[i] == -1) throw ValidationError("row " + std::to_string(i) + " has no X");
    if (d.x_row_[i] == -1) throw ValidationError("column " + std::to_string(i) + " has no X");
  }

  std::sort(os.begin(), os.end());
  if (auto dup = std::adjacent_find(os.begin(), os.end()); dup != os.end())
    throw ValidationError("duplicate O at " + to_string(*dup));
  std::vector<int> row_count(size, 0), col_count(size, 0);
  for (const auto& s : os) {
    if (d.x_col_[s.row] == s.col) throw ValidationError("X and O share square " + to_string(s));
    ++row_count[s.row];
    ++col_count[s.col];
  }
  for (int i = 0; i < size; ++i) {
    if (row_count[i] == 0) throw ValidationError("row " + std::to_string(i) + " has no O");
    if (col_count[i] == 0) throw ValidationError("column " + std::to_string(i) + " has no O");
  }
  d.os_ = std::move(os);
  return d;
}

std::vector<Square> Diagram::xs() const {
  std::vector<Square> out;
  out.reserve(size_);
  for (int r = 0; r < size_; ++r) out.push_back({r, x_col_[r]});
  return out;
}

bool Diagram::has_x(Square s) const {
  return s.row >= 0 && s.row < size_ && x_col_[s.row] == s.col;
}

std::optional<int> Diagram::o_label(Square s) const {
  auto it = std::lower_bound(os_.begin(), os_.end(), s);
  if (it == os_.end() || *it != s) return std::nullopt;
  return static_cast<int>(it - os_.begin()) + 1;
}

std::vector<int> Diagram::o_labels_in_row(int row) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < os_.size(); ++i)
    if (os_[i].row == row) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> Diagram::o_labels_in_column(int col) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < os_.size(); ++i)
    if (os_[i].col == col) out.push_back(static_cast<int>(i) + 1);
  return out;
}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_int(const Token& t, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
    throw ParseError(line_no, t.column, "expected a decimal integer, got '" + std::string(t.text) + "'");
  return value;
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  std::optional<int> size;
  std::vector<Square> xs, os;
  std::set<std::pair<char, Square>> seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const auto& kw = tokens[0];
    if (!size) {
      if (kw.text != "grid") throw ParseError(line_no, kw.column, "expected 'grid <n>' before any marking");
      if (tokens.size() != 2) throw ParseError(line_no, kw.column, "'grid' takes exactly one integer");
      size = parse_int(tokens[1], line_no);
      if (*size < 2) throw ParseError(line_no, tokens[1].column, "grid size must be at least 2");
      continue;
    }
    if (kw.text == "grid") throw ParseError(line_no, kw.column, "repeated 'grid' line");
    if (kw.text != "x" && kw.text != "o")
      throw ParseError(line_no, kw.column, "unknown keyword '" + std::string(kw.text) + "'");
    if (tokens.size() != 3)
      throw ParseError(line_no, kw.column, "'" + std::string(kw.text) + "' takes exactly two integers");
    Square s{parse_int(tokens[1], line_no), parse_int(tokens[2], line_no)};
    if (s.row < 0 || s.row >= *size) throw ParseError(line_no, tokens[1].column, "row out of range");
    if (s.col < 0 || s.col >= *size) throw ParseError(line_no, tokens[2].column, "column out of range");
    if (!seen.insert({kw.text[0], s}).second)
      throw ParseError(line_no, kw.column, "duplicate marking " + std::string(kw.text) + " " + to_string(s));
    (kw.text == "x" ? xs : os).push_back(s);
  }
  if (!size) throw ParseError(line_no, 1, "missing 'grid <n>' line");
  return Diagram::from_markings(*size, std::move(xs), std::move(os));
}

Diagram load_diagram(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

std::string serialize(const Diagram& d) {
  std::ostringstream out;
  out << "grid " << d.size() << '\n';
  for (const auto& x : d.xs()) out << "x " << x.row << ' ' << x.col << '\n';
  for (const auto& o : d.os()) out << "o " << o.row << ' ' << o.col << '\n';
  return out.str();
}

Diagram cyclic_shift(const Diagram& d, Axis axis, int k) {
  const int n = d.size();
  const int shift = ((k % n) + n) % n;
  auto move = [&](Square s) {
    if (axis == Axis::rows) return Square{(s.row + shift) % n, s.col};
    return Square{s.row, (s.col + shift) % n};
  };
  std::vector<Square> xs, os;
  for (const auto& x : d.xs()) xs.push_back(move(x));
  for (const auto& o : d.os()) os.push_back(move(o));
  return Diagram::from_markings(n, std::move(xs), std::move(os));
}

Diagram reflect_diagonal(const Diagram& d) {
  std::vector<Square> xs, os;
  for (const auto& x : d.xs()) xs.push_back({x.col, x.row});
  for (const auto& o : d.os()) os.push_back({o.col, o.row});
  return Diagram::from_markings(d.size(), std::move(xs), std::move(os));
}

}  // namespace sgh
