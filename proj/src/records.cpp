#include "slicekit/records.hpp"

#include <iomanip>
#include <map>
#include <sstream>

#include "slicekit/error.hpp"
#include "slicekit/poly_text.hpp"

namespace slicekit {
namespace {

std::string join_ints(const std::set<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string join_values(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].str();
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

long parse_long_field(const std::string& v, int line, int column) {
  try {
    std::size_t used = 0;
    const long out = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ParseError("expected integer '" + v + "'", line, column);
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::vector<ValueSet> parse_value_set_list(std::string_view text) {
  std::vector<ValueSet> out;
  int line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    std::string_view body = raw.substr(0, raw.find('#'));
    const std::string line = trim(body);
    if (line.empty()) continue;
    const std::size_t offset = body.find_first_not_of(" \t\r");
    try {
      out.push_back(ValueSet::parse(line));
    } catch (const ParseError& e) {
      throw ParseError("invalid value set '" + line + "'", line_no, static_cast<int>(offset) + e.column());
    }
  }
  if (out.empty()) throw ParseError("no value sets given", std::max(line_no, 1), 1);
  return out;
}

std::string write_table_records(const std::vector<ThresholdRow>& rows) {
  std::ostringstream os;
  os << kRecordsVersion << " table\n";
  for (const auto& r : rows)
    os << "row A=" << r.A.str() << " d=" << r.d << " W=" << r.W << " k=" << r.k << " kappa=" << r.kappa
       << " s=" << join_ints(r.attaining_s) << '\n';
  return os.str();
}

std::vector<ThresholdRow> parse_table_records(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || trim(lines[0]) != std::string(kRecordsVersion) + " table")
    throw ParseError("missing '" + std::string(kRecordsVersion) + " table' header", 1, 1);
  std::vector<ThresholdRow> rows;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    const std::string line = trim(lines[li]);
    if (line.empty()) continue;
    std::istringstream is(line);
    std::string tag;
    is >> tag;
    if (tag != "row") throw ParseError("expected 'row'", line_no, 1);
    std::map<std::string, std::string> fields;
    std::string item;
    while (is >> item) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("expected key=value", line_no, 1);
      fields[item.substr(0, eq)] = item.substr(eq + 1);
    }
    for (const char* key : {"A", "d", "W", "k", "kappa", "s"})
      if (!fields.count(key)) throw ParseError(std::string("missing field ") + key, line_no, 1);
    ThresholdRow row{ValueSet::parse(fields["A"])};
    row.d = static_cast<int>(parse_long_field(fields["d"], line_no, 1));
    row.W = parse_long_field(fields["W"], line_no, 1);
    row.k = parse_long_field(fields["k"], line_no, 1);
    row.kappa = parse_long_field(fields["kappa"], line_no, 1);
    std::istringstream ss(fields["s"]);
    std::string part;
    while (std::getline(ss, part, ','))
      row.attaining_s.insert(static_cast<int>(parse_long_field(part, line_no, 1)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_table_human(const std::vector<ThresholdRow>& rows) {
  // Group rows by set, preserving input order.
  std::vector<std::pair<ValueSet, std::vector<const ThresholdRow*>>> groups;
  int d_max = 0;
  for (const auto& r : rows) {
    if (groups.empty() || !(groups.back().first == r.A)) groups.push_back({r.A, {}});
    groups.back().second.push_back(&r);
    d_max = std::max(d_max, r.d);
  }
  std::size_t width = 1;
  for (const auto& g : groups) width = std::max(width, g.first.str().size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "A" << " | W(A,d) for d = 1.." << d_max
     << " | k(A,d) [attaining s]\n";
  for (const auto& [A, group] : groups) {
    os << std::setw(static_cast<int>(width)) << A.str() << " |";
    for (const auto* r : group) os << ' ' << std::setw(3) << r->W;
    os << " |";
    for (const auto* r : group) os << ' ' << r->k << " [" << join_ints(r->attaining_s) << "]";
    os << '\n';
  }
  return os.str();
}

std::string write_sparse_representation(const SparseRepresentation& s) {
  return format_poly(s.as_poly()) + "\nsupport " + format_mask(s.support) + "\n";
}

std::string write_junta_report(const JuntaReport& r) {
  return "min_size " + std::to_string(r.min_size) + " witness " + format_mask(r.witness);
}

std::string write_analysis_records(const AnalysisReport& r) {
  std::ostringstream os;
  os << kRecordsVersion << " analyze\n";
  os << "domain n=" << r.domain.n() << " k=" << r.domain.k() << '\n';
  os << "degree " << r.degree << '\n';
  if (r.A) {
    os << "a_valued A=" << r.A->str() << ' ' << yes_no(r.a_valued.ok);
    if (r.a_valued.counterexample) os << " point=" << format_mask(*r.a_valued.counterexample);
    os << '\n';
  }
  os << "expansion_terms " << r.expansion_terms << '\n';
  os << "sparse " << format_poly(r.sparse.as_poly()) << '\n';
  os << "support " << format_mask(r.sparse.support) << '\n';
  os << "junta " << write_junta_report(r.junta) << '\n';
  return os.str();
}

std::string render_analysis_human(const AnalysisReport& r) {
  std::ostringstream os;
  os << "slice:              (" << r.domain.n() << " choose " << r.domain.k() << "), " << r.domain.size()
     << " points\n";
  os << "degree:             " << r.degree << '\n';
  if (r.A) {
    os << "A-valued on " << r.A->str() << ": " << yes_no(r.a_valued.ok);
    if (r.a_valued.counterexample) os << " (fails at " << format_mask(*r.a_valued.counterexample) << ")";
    os << '\n';
  }
  os << "homogeneous terms:  " << r.expansion_terms << '\n';
  os << "sparse form:        " << format_poly(r.sparse.as_poly()) << '\n';
  os << "sparse support:     " << format_mask(r.sparse.support) << '\n';
  os << "minimum junta:      " << r.junta.min_size << " on " << format_mask(r.junta.witness) << '\n';
  return os.str();
}

std::string write_construction_records(const ConstructionBundle& b) {
  const auto& s = b.example.spec;
  std::ostringstream os;
  os << kRecordsVersion << " construct\n";
  os << "family " << family_name(s.family) << '\n';
  os << "params A=" << s.A.str() << " d=" << s.d << " k=" << s.k << " m=" << s.m << " blocks=" << s.blocks
     << " n=" << s.n << " a=" << s.a;
  if (s.family == Family::BlockSum) os << " b=" << s.b;
  if (s.family == Family::Gate) os << " e=" << s.e;
  if (s.family == Family::BlockGate) os << " t=" << s.t << " r=" << s.r;
  os << " s=" << s.s << '\n';
  if (s.witness_poly) os << "witness_poly " << s.witness_poly->str() << '\n';
  os << "poly " << format_poly(b.example.poly) << '\n';
  os << "certificate I=" << format_mask(s.I) << " J=" << format_mask(s.J) << " lower_bound=" << b.lower_bound
     << '\n';
  os << "junta " << write_junta_report(b.junta) << '\n';
  os << "checks a_valued=" << yes_no(b.a_valued) << " degree=" << b.degree
     << " certified=" << yes_no(b.certified()) << '\n';
  return os.str();
}

std::string render_construction_human(const ConstructionBundle& b) {
  const auto& s = b.example.spec;
  std::ostringstream os;
  os << "family:        " << family_name(s.family) << " on (" << s.n << " choose " << s.k << ")\n";
  if (s.witness_poly) os << "witness P:     " << s.witness_poly->str() << '\n';
  os << "function:      " << format_poly(b.example.poly) << '\n';
  os << "A-valued:      " << yes_no(b.a_valued) << '\n';
  os << "degree:        " << b.degree << " (target <= " << s.d << ")\n";
  os << "lower bound:   " << b.lower_bound << " from I=" << format_mask(s.I) << ", J=" << format_mask(s.J) << '\n';
  os << "minimum junta: " << b.junta.min_size << '\n';
  os << "certified:     " << yes_no(b.certified()) << " (not a " << (s.m - 1) << "-junta)\n";
  return os.str();
}

std::string write_verification_records(const VerificationReport& r) {
  std::ostringstream os;
  os << kRecordsVersion << " verify\n";
  os << "domain n=" << r.domain.n() << " k=" << r.domain.k() << '\n';
  os << "params A=" << (r.A ? r.A->str() : "{}") << " d=" << r.d << " bound=" << r.bound << '\n';
  os << "functions_scanned " << r.functions_scanned << '\n';
  os << "degree_le_d_count " << r.degree_le_d_count << '\n';
  os << "max_min_junta " << r.max_min_junta << '\n';
  os << "violations " << r.violations.size() << '\n';
  for (const auto& v : r.violations) os << "violation min_junta=" << v.min_junta << " table=" << join_values(v.values) << '\n';
  return os.str();
}

std::string render_verification_human(const VerificationReport& r) {
  std::ostringstream os;
  os << "scanned " << r.functions_scanned << " " << (r.A ? r.A->str() : "") << "-valued tables on ("
     << r.domain.n() << " choose " << r.domain.k() << ")\n";
  os << "degree <= " << r.d << ": " << r.degree_le_d_count << '\n';
  os << "largest minimum junta: " << r.max_min_junta << " (bound " << r.bound << ")\n";
  os << "violations: " << r.violations.size() << '\n';
  const std::size_t shown = std::min<std::size_t>(r.violations.size(), 10);
  for (std::size_t i = 0; i < shown; ++i)
    os << "  junta " << r.violations[i].min_junta << ": " << join_values(r.violations[i].values) << '\n';
  if (shown < r.violations.size()) os << "  ... " << (r.violations.size() - shown) << " more\n";
  return os.str();
}

std::string write_decomposition_records(const SliceTable& f, const DecompositionReport& r) {
  std::ostringstream os;
  os << kRecordsVersion << " decompose\n";
  os << "domain n=" << f.domain().n() << " k=" << f.domain().k() << '\n';
  for (const auto& [a, table] : r.indicators) os << "indicator a=" << a << " table=" << join_values(table.values()) << '\n';
  os << "boolean " << yes_no(r.all_boolean) << '\n';
  os << "reconstruction " << (r.reconstructs ? "ok" : "failed") << '\n';
  return os.str();
}

std::string render_decomposition_human(const SliceTable& f, const DecompositionReport& r) {
  std::ostringstream os;
  os << "f on (" << f.domain().n() << " choose " << f.domain().k() << "): " << join_values(f.values()) << '\n';
  for (const auto& [a, table] : r.indicators) os << "f_" << a << ": " << join_values(table.values()) << '\n';
  os << "all indicators Boolean: " << yes_no(r.all_boolean) << '\n';
  os << "sum of a*f_a equals f: " << yes_no(r.reconstructs) << '\n';
  return os.str();
}

}  // namespace slicekit
