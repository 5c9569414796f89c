#include "kcomm_cli/job.hpp"

#include <cctype>
#include <charconv>

namespace kcomm::cli {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

std::size_t column_of(const Line& line, std::string_view part) {
  return static_cast<std::size_t>(part.data() - line.text.data()) + 1;
}

[[noreturn]] void fail(const Line& line, std::string_view at, const std::string& message) {
  throw ParseError({line.number, column_of(line, at)}, message);
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::string_view strip_comment(std::string_view s) {
  const std::size_t hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

std::uint64_t parse_count(const Line& line, std::string_view word, const char* what) {
  std::uint64_t v = 0;
  const auto* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, v);
  if (ec != std::errc() || ptr != end || word.empty()) {
    fail(line, word.empty() ? line.text.substr(line.text.size()) : word,
         std::string("expected a nonnegative integer ") + what);
  }
  return v;
}

// Splits "keyword rest" into the keyword and the trimmed remainder.
std::pair<std::string_view, std::string_view> keyword(std::string_view s) {
  s = trim(s);
  std::size_t i = 0;
  while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i])) != 0) ++i;
  return {s.substr(0, i), trim(s.substr(i))};
}

}  // namespace

JobDescription parse_job(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  JobDescription job;
  bool have_field = false;
  std::optional<std::size_t> nvars;
  std::optional<std::size_t> dim;
  std::vector<Matrix> mats;
  std::vector<SourceLocation> mat_starts;
  SourceLocation block_start{1, 1};

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string_view body = trim(strip_comment(line.text));
    if (body.empty()) continue;

    if (body.front() == '[') {
      if (!have_field || !nvars || !dim) fail(line, body, "matrix literal before the field, vars and dim lines");
      // Gather lines until the brackets balance.
      std::string literal;
      const SourceLocation start{line.number, column_of(line, body)};
      int depth = 0;
      std::size_t lj = li;
      std::string_view piece = body;
      for (;;) {
        for (char c : piece) {
          if (c == '[') ++depth;
          if (c == ']') --depth;
        }
        literal += piece;
        if (depth <= 0 || lj + 1 == lines.size()) break;
        ++lj;
        literal += '\n';
        piece = strip_comment(lines[lj].text);
      }
      li = lj;
      if (mats.size() == *nvars) throw ParseError(start, "more than " + std::to_string(*nvars) + " matrices given");
      Matrix m = parse_matrix(literal, job.field, start);
      const bool empty_ok = *dim == 0 && m.rows() == 0;
      if (!empty_ok && (m.rows() != *dim || m.cols() != *dim)) {
        throw ParseError(start, "matrix " + std::to_string(mats.size() + 1) + " is " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()) + ", expected " + std::to_string(*dim) + "x" +
                                    std::to_string(*dim));
      }
      mats.push_back(std::move(m));
      mat_starts.push_back(start);
      continue;
    }

    const auto [word, rest] = keyword(body);
    if (word == "field") {
      if (have_field) fail(line, word, "field given twice");
      const auto [kind, p] = keyword(rest);
      if (kind == "Q" && p.empty()) {
        job.field = Field::rationals();
      } else if (kind == "F") {
        const std::uint64_t prime = parse_count(line, p, "characteristic");
        try {
          job.field = Field::prime(prime);
        } catch (const FieldError& e) {
          fail(line, p, e.what());
        }
      } else {
        fail(line, rest.empty() ? word : rest, "expected `field Q` or `field F <p>`");
      }
      have_field = true;
    } else if (word == "vars") {
      if (!have_field) fail(line, word, "`vars` before `field`");
      if (nvars) fail(line, word, "vars given twice");
      nvars = parse_count(line, rest, "variable count");
      if (*nvars == 0) fail(line, rest, "at least one variable is required");
      block_start = {line.number, column_of(line, word)};
    } else if (word == "dim") {
      if (!nvars) fail(line, word, "`dim` before `vars`");
      if (dim) fail(line, word, "dim given twice");
      dim = parse_count(line, rest, "dimension");
    } else if (word == "span") {
      if (!dim) fail(line, word, "`span` before `dim`");
      if (job.has_span) fail(line, word, "span given twice");
      const Matrix rows = parse_matrix(rest, job.field, {line.number, column_of(line, rest)});
      if (rows.rows() != 0 && rows.cols() != *dim) {
        fail(line, rest, "span vectors have length " + std::to_string(rows.cols()) + ", expected " + std::to_string(*dim));
      }
      for (std::size_t i = 0; i < rows.rows(); ++i) job.span.push_back(rows.row(i));
      job.has_span = true;
    } else if (word == "tilde") {
      if (!have_field) fail(line, word, "`tilde` before `field`");
      if (rest.empty()) fail(line, line.text.substr(line.text.size()), "expected a rational function after `tilde`");
      job.tildes.push_back(parse_rational_function(rest, job.field, {line.number, column_of(line, rest)}));
    } else {
      fail(line, body, "unknown directive '" + std::string(word.empty() ? body.substr(0, 1) : word) + "'");
    }
  }

  if (!have_field) throw ParseError({lines.empty() ? 1 : lines.size(), 1}, "missing `field` line");
  if (nvars) {
    if (!dim) throw ParseError(block_start, "missing `dim` line");
    if (mats.size() != *nvars) {
      throw ParseError(block_start, "expected " + std::to_string(*nvars) + " matrices, found " + std::to_string(mats.size()));
    }
    try {
      job.tuple = CommutingTuple::make(job.field, *nvars, *dim, std::move(mats));
    } catch (const CommutationError& e) {
      throw ParseError(mat_starts[e.second], "pair (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                                        ") does not commute");
    }
  }
  return job;
}

}  // namespace kcomm::cli
