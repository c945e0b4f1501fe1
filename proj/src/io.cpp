#include "signless/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace signless::io {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kLongFormLimit = 258047;

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

int decode_byte(char c) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126) throw ParseError("graph6: byte " + std::to_string(v) + " outside 63..126");
  return v - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line, int max_order) {
  line = trim(line);
  if (line.substr(0, kGraph6Header.size()) == kGraph6Header) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  long n = decode_byte(line[pos++]);
  if (n == 63) {
    if (line.size() < 4) throw ParseError("graph6: truncated size header");
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | decode_byte(line[pos++]);
    if (n < 63) throw ParseError("graph6: long-form size header used for n < 63");
    if (n > kLongFormLimit) throw ParseError("graph6: eight-byte size headers are not supported");
  }
  if (n > max_order) throw ParseError("graph6: order " + std::to_string(n) + " exceeds limit " + std::to_string(max_order));

  const long bits = n * (n - 1) / 2;
  const long bytes = (bits + 5) / 6;
  if (static_cast<long>(line.size() - pos) < bytes) throw ParseError("graph6: truncated bit stream");
  if (static_cast<long>(line.size() - pos) > bytes) throw ParseError("graph6: trailing bytes after bit stream");

  std::vector<Edge> edges;
  long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const int chunk = decode_byte(line[pos + bit / 6]);
      if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  if (bits % 6 != 0) {
    const int last = decode_byte(line[pos + bytes - 1]);
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6: non-zero padding bits");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g, int max_order) {
  const int n = g.order();
  if (n > max_order || n > kLongFormLimit) throw std::invalid_argument("write_graph6: order exceeds limit");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int chunk = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

namespace {

struct Line {
  int number;
  std::string text;
};

bool parse_ints(std::string_view text, int& a, int& b) {
  std::istringstream ss{std::string(text)};
  std::string extra;
  return static_cast<bool>(ss >> a >> b) && !(ss >> extra);
}

/// Parses one edge-list block; errors name the offending line.
Graph parse_edge_block(const std::vector<Line>& lines, std::string_view where) {
  auto fail = [&](int line, const std::string& what) -> ParseError {
    return ParseError(std::string(where) + (where.empty() ? "" : ":") + "line " + std::to_string(line) + ": " + what);
  };
  if (lines.empty()) throw ParseError("edge list: empty input");
  int n = 0, m = 0;
  if (!parse_ints(lines[0].text, n, m) || n < 0 || m < 0) throw fail(lines[0].number, "expected header \"n m\"");
  if (static_cast<int>(lines.size()) - 1 != m) {
    throw fail(lines[0].number, "header announces " + std::to_string(m) + " edges but " +
                                    std::to_string(lines.size() - 1) + " follow");
  }
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    int u = 0, v = 0;
    if (!parse_ints(lines[i].text, u, v)) throw fail(lines[i].number, "expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) throw fail(lines[i].number, "vertex out of range");
    if (u == v) throw fail(lines[i].number, "self-loop");
    if (!seen.insert(std::minmax(u, v)).second) throw fail(lines[i].number, "duplicate edge");
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::string_view raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++number;
    out.push_back({number, std::string(trim(raw))});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Line> lines;
  for (auto& l : split_lines(text))
    if (!l.text.empty() && l.text[0] != '#') lines.push_back(std::move(l));
  return parse_edge_block(lines, "");
}

std::vector<CorpusRecord> read_corpus(std::istream& in, std::string_view path, InputFormat format) {
  std::vector<CorpusRecord> out;
  std::string raw;
  int number = 0;
  std::vector<Line> block;
  const std::string where(path);

  auto flush_block = [&]() {
    if (block.empty()) return;
    const std::string locator = where + ":" + std::to_string(block.front().number);
    out.push_back({locator, parse_edge_block(block, where), std::nullopt});
    block.clear();
  };

  while (std::getline(in, raw)) {
    ++number;
    const std::string text(trim(raw));
    if (!text.empty() && text[0] == '#') continue;
    if (format == InputFormat::Graph6) {
      if (text.empty()) continue;
      const std::string locator = where + ":" + std::to_string(number);
      try {
        out.push_back({locator, parse_graph6(text), std::nullopt});
      } catch (const ParseError& e) {
        throw ParseError(locator + ": " + e.what());
      } catch (const std::invalid_argument& e) {
        throw ParseError(locator + ": " + e.what());
      }
    } else if (text.empty()) {
      flush_block();
    } else {
      block.push_back({number, text});
    }
  }
  if (format == InputFormat::Edges) flush_block();
  return out;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // folds -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 12);
  if (ec != std::errc()) return "";
  return std::string(buf, ptr);
}

namespace {

/// Flattened view of one record in report field order. Empty optionals are
/// printed as an empty CSV cell / JSON null.
struct Row {
  std::string id;
  std::optional<double> alpha, k, lhs, rhs, slack;
  std::optional<bool> holds, equality;
  std::string reason;
};

std::optional<double> finite_or_inf(double x) {
  if (std::isnan(x)) return std::nullopt;
  return x;
}

Row to_row(const Record& record) {
  Row row;
  if (const auto* b = std::get_if<BoundReport>(&record)) {
    row.id = std::string(bound_name(b->bound));
    row.alpha = b->alpha;
    row.k = b->k;
    if (b->applicable()) {
      row.lhs = finite_or_inf(b->lhs);
      row.rhs = finite_or_inf(b->rhs);
      row.slack = finite_or_inf(b->slack);
      row.holds = b->holds;
      row.equality = b->equality;
      row.reason = b->note.value_or("");
    } else {
      row.reason = "n/a: " + *b->not_applicable_reason;
    }
  } else if (const auto* l = std::get_if<LemmaReport>(&record)) {
    row.id = std::string(lemma_name(l->lemma));
    if (l->status == LemmaStatus::NotApplicable) {
      row.reason = "n/a: " + l->detail;
    } else {
      row.lhs = l->lhs;
      row.rhs = l->rhs;
      row.holds = l->status == LemmaStatus::Pass;
      row.equality = l->equality;
      row.reason = l->detail;
    }
  } else {
    const auto& v = std::get<InvariantValue>(record);
    row.id = v.name;
    row.alpha = v.alpha;
    row.lhs = finite_or_inf(v.value);
  }
  return row;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(const std::optional<double>& x) { return x ? format_number(*x) : ""; }
std::string csv_bool(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

std::string json_number(const std::optional<double>& x) {
  if (!x || !std::isfinite(*x)) return "null";
  return format_number(*x);
}
std::string json_bool(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "null"; }
std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

}  // namespace

void write_report_header(std::ostream& out, ReportFormat format) {
  if (format == ReportFormat::Csv) out << kCsvHeader << '\n';
}

void write_report_record(std::ostream& out, const LocatedRecord& record, ReportFormat format) {
  const Row row = to_row(record.record);
  if (format == ReportFormat::Csv) {
    out << csv_field(record.locator) << ',' << csv_field(row.id) << ',' << csv_number(row.alpha) << ','
        << csv_number(row.k) << ',' << csv_number(row.lhs) << ',' << csv_number(row.rhs) << ','
        << csv_number(row.slack) << ',' << csv_bool(row.holds) << ',' << csv_bool(row.equality) << ','
        << csv_field(row.reason) << '\n';
    return;
  }
  out << "{\"graph\":" << json_string(record.locator) << ",\"id\":" << json_string(row.id)
      << ",\"alpha\":" << json_number(row.alpha) << ",\"k\":" << json_number(row.k)
      << ",\"lhs\":" << json_number(row.lhs) << ",\"rhs\":" << json_number(row.rhs)
      << ",\"slack\":" << json_number(row.slack) << ",\"holds\":" << json_bool(row.holds)
      << ",\"equality\":" << json_bool(row.equality) << ",\"reason\":" << json_string(row.reason) << "}\n";
}

void emit_report(std::ostream& out, const std::vector<LocatedRecord>& records, ReportFormat format) {
  write_report_header(out, format);
  for (const auto& r : records) write_report_record(out, r, format);
}

}  // namespace signless::io
