#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "signless/bounds.hpp"
#include "signless/graph.hpp"
#include "signless/lemmas.hpp"

namespace signless::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest order accepted by the graph6 reader and writer. Orders above 62 use
/// the four-byte long-form size header.
inline constexpr int kDefaultGraph6Limit = 4096;

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// whitespace are ignored.
Graph parse_graph6(std::string_view line, int max_order = kDefaultGraph6Limit);
std::string write_graph6(const Graph& g, int max_order = kDefaultGraph6Limit);

/// "n m" followed by m lines "u v" (0-based). Duplicate edges and count
/// mismatches are errors.
Graph parse_edge_list(std::string_view text);

/// A graph read from a corpus together with where it came from.
struct CorpusRecord {
  std::string source;
  Graph graph;
  std::optional<std::string> label;
};

enum class InputFormat { Graph6, Edges };

/// graph6: one graph per non-blank line, locator "path:line".
/// edges: one or more edge-list blocks separated by blank lines, locator
/// "path:first_line". Lines starting with '#' are skipped in both formats.
std::vector<CorpusRecord> read_corpus(std::istream& in, std::string_view path, InputFormat format);

/// A named scalar (spectral invariant) attached to one graph.
struct InvariantValue {
  std::string name;
  std::optional<double> alpha;
  double value;
};

using Record = std::variant<BoundReport, LemmaReport, InvariantValue>;

struct LocatedRecord {
  std::string locator;
  Record record;
};

enum class ReportFormat { Csv, Jsonl };

/// Field order: graph, id, alpha, k, lhs, rhs, slack, holds, equality, reason.
inline constexpr std::string_view kCsvHeader = "graph,id,alpha,k,lhs,rhs,slack,holds,equality,reason";

/// CSV always starts with the header line; JSONL has no header.
void write_report_header(std::ostream& out, ReportFormat format);
void write_report_record(std::ostream& out, const LocatedRecord& record, ReportFormat format);
void emit_report(std::ostream& out, const std::vector<LocatedRecord>& records, ReportFormat format);

/// 12 significant digits, '.' decimal separator, independent of locale.
std::string format_number(double x);

}  // namespace signless::io
