#include "ddinv/matrix_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <optional>
#include <sstream>

#include "ddinv/error.hpp"

namespace ddinv {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::vector<Token> split(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

// Reads lines, skipping blanks and comments, tracking the physical line number.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<std::vector<Token>> next() {
    while (std::getline(in_, buffer_)) {
      ++line_no_;
      auto tokens = split(buffer_);
      if (tokens.empty() || tokens.front().text.front() == '#') continue;
      return tokens;
    }
    return std::nullopt;
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_no_ = 0;
};

double parse_number(const Token& tok, std::size_t line_no) {
  double v = 0.0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw Error(ErrorKind::NonNumericToken,
                "(" + std::to_string(line_no) + "," + std::to_string(tok.column) + ")");
  }
  return v;
}

std::size_t parse_header(LineReader& reader) {
  auto header = reader.next();
  if (!header) throw Error(ErrorKind::MalformedHeader, ": empty input");
  if (header->size() != 1) {
    throw Error(ErrorKind::MalformedHeader, ": line " + std::to_string(reader.line_no()));
  }
  const auto text = header->front().text;
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size() || n == 0) {
    throw Error(ErrorKind::MalformedHeader, ": line " + std::to_string(reader.line_no()) +
                                                ", expected a positive integer");
  }
  return n;
}

}  // namespace

DenseMatrix parse_matrix(std::istream& in) {
  LineReader reader(in);
  const std::size_t n = parse_header(reader);
  std::vector<double> entries;
  entries.reserve(n * n);
  for (std::size_t row = 1; row <= n; ++row) {
    auto tokens = reader.next();
    if (!tokens) {
      throw Error(ErrorKind::TooFewRows,
                  ": expected " + std::to_string(n) + ", found " + std::to_string(row - 1));
    }
    if (tokens->size() != n) throw Error(ErrorKind::RowLengthMismatch, "(" + std::to_string(row) + ")");
    for (const auto& tok : *tokens) entries.push_back(parse_number(tok, reader.line_no()));
  }
  if (reader.next()) {
    throw Error(ErrorKind::TrailingData, ": line " + std::to_string(reader.line_no()));
  }
  return DenseMatrix(n, std::move(entries));
}

DenseMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

std::vector<double> parse_vector(std::istream& in) {
  LineReader reader(in);
  const std::size_t n = parse_header(reader);
  std::vector<double> values;
  values.reserve(n);
  while (values.size() < n) {
    auto tokens = reader.next();
    if (!tokens) {
      throw Error(ErrorKind::TooFewRows, ": expected " + std::to_string(n) + " values, found " +
                                             std::to_string(values.size()));
    }
    for (const auto& tok : *tokens) {
      if (values.size() == n) {
        throw Error(ErrorKind::TrailingData, ": line " + std::to_string(reader.line_no()));
      }
      values.push_back(parse_number(tok, reader.line_no()));
    }
  }
  if (reader.next()) {
    throw Error(ErrorKind::TrailingData, ": line " + std::to_string(reader.line_no()));
  }
  return values;
}

std::vector<double> parse_vector(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_vector(in);
}

std::string format_double(double v, int digits) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                       std::chars_format::general, digits);
  return std::string(buf.data(), ptr);
}

std::string format_shortest(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string format_matrix(const DenseMatrix& a) {
  std::string out = std::to_string(a.order()) + "\n";
  for (std::size_t i = 0; i < a.order(); ++i) {
    const auto r = a.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) out += ' ';
      out += format_double(r[j]);
    }
    out += '\n';
  }
  return out;
}

std::string format_vector(std::span<const double> x) {
  std::string out = std::to_string(x.size()) + "\n";
  for (double v : x) out += format_double(v) + "\n";
  return out;
}

}  // namespace ddinv
