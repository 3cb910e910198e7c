#include "hrrc/cnf.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "hrrc/io.hpp"

namespace hrrc {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::string literal_text(const Literal& l) {
  return (l.positive ? "x" : "-x") + std::to_string(l.variable);
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula formula;
  bool have_header = false;
  long long declared_clauses = 0;
  Clause pending;
  int pending_line = 0;
  int line_no = 0;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "c") continue;
    if (first == "%") break;
    if (first == "p") {
      if (have_header) fail(line_no, "second header");
      std::string format, n_text, m_text, extra;
      if (!(tokens >> format >> n_text >> m_text) || format != "cnf" || (tokens >> extra))
        fail(line_no, "expected header 'p cnf <variables> <clauses>'");
      auto n = to_integer(n_text);
      auto m = to_integer(m_text);
      if (!n || !m || *n < 0 || *m < 0 || *n > 1'000'000)
        fail(line_no, "header counts must be non-negative integers");
      formula.num_variables = static_cast<int>(*n);
      declared_clauses = *m;
      have_header = true;
      continue;
    }
    if (!have_header) fail(line_no, "clause before the 'p cnf' header");
    for (std::string token = first;; ) {
      auto value = to_integer(token);
      if (!value) fail(line_no, "'" + token + "' is not an integer literal");
      if (*value == 0) {
        if (pending.empty()) fail(line_no, "empty clause");
        formula.clauses.push_back(std::move(pending));
        pending.clear();
      } else {
        const long long v = *value < 0 ? -*value : *value;
        if (v > formula.num_variables)
          fail(line_no, "literal " + token + " exceeds the declared " +
                            std::to_string(formula.num_variables) + " variables");
        if (pending.empty()) pending_line = line_no;
        pending.push_back({static_cast<int>(v), *value > 0});
      }
      if (!(tokens >> token)) break;
    }
  }
  if (!have_header) throw ParseError("missing 'p cnf' header");
  if (!pending.empty()) fail(pending_line, "clause is not terminated by 0");
  if (static_cast<long long>(formula.clauses.size()) != declared_clauses)
    throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses but " +
                     std::to_string(formula.clauses.size()) + " were read");
  return formula;
}

std::string to_dimacs(const CnfFormula& formula) {
  std::string out = "p cnf " + std::to_string(formula.num_variables) + " " +
                    std::to_string(formula.clauses.size()) + "\n";
  for (const Clause& clause : formula.clauses) {
    for (const Literal& l : clause)
      out += (l.positive ? "" : "-") + std::to_string(l.variable) + " ";
    out += "0\n";
  }
  return out;
}

FormulaReport check_ppn(const CnfFormula& formula) {
  FormulaReport report;
  std::vector<int> positive(formula.num_variables + 1, 0), negative(formula.num_variables + 1, 0);
  for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
    const Clause& clause = formula.clauses[j];
    const std::string where = "clause " + std::to_string(j + 1);
    if (clause.size() < 2 || clause.size() > 3)
      report.push_back(where + " has " + std::to_string(clause.size()) + " literals");
    std::set<std::pair<int, bool>> seen;
    for (const Literal& l : clause) {
      if (l.variable < 1 || l.variable > formula.num_variables) {
        report.push_back(where + " mentions unknown variable " + std::to_string(l.variable));
        continue;
      }
      if (!seen.insert({l.variable, l.positive}).second)
        report.push_back(where + " repeats literal " + literal_text(l));
      ++(l.positive ? positive : negative)[l.variable];
    }
  }
  for (int v = 1; v <= formula.num_variables; ++v)
    if (positive[v] != 2 || negative[v] != 1)
      report.push_back("variable " + std::to_string(v) + " occurs " + std::to_string(positive[v]) +
                       " times positively and " + std::to_string(negative[v]) +
                       " times negatively");
  return report;
}

FormulaReport check_one_in_three_positive(const CnfFormula& formula) {
  FormulaReport report;
  for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
    const Clause& clause = formula.clauses[j];
    const std::string where = "clause " + std::to_string(j + 1);
    if (clause.size() != 3)
      report.push_back(where + " has " + std::to_string(clause.size()) + " literals");
    std::set<int> seen;
    for (const Literal& l : clause) {
      if (l.variable < 1 || l.variable > formula.num_variables)
        report.push_back(where + " mentions unknown variable " + std::to_string(l.variable));
      if (!l.positive) report.push_back(where + " contains negated literal " + literal_text(l));
      if (!seen.insert(l.variable).second)
        report.push_back(where + " repeats variable " + std::to_string(l.variable));
    }
  }
  return report;
}

bool satisfies(const CnfFormula& formula, const SatAssignment& assignment, SatMode mode) {
  if (static_cast<int>(assignment.size()) != formula.num_variables) return false;
  for (const Clause& clause : formula.clauses) {
    int true_literals = 0;
    for (const Literal& l : clause)
      if (assignment[l.variable - 1] == l.positive) ++true_literals;
    if (mode == SatMode::Ordinary ? true_literals == 0 : true_literals != 1) return false;
  }
  return true;
}

std::optional<SatAssignment> sat_brute(const CnfFormula& formula, SatMode mode, int max_variables) {
  const int n = formula.num_variables;
  if (n > max_variables)
    throw PreconditionError("sat_brute: " + std::to_string(n) + " variables exceed the bound of " +
                            std::to_string(max_variables));
  SatAssignment a(n, false);
  for (unsigned long long code = 0; code < (1ULL << n); ++code) {
    for (int i = 0; i < n; ++i) a[i] = (code >> (n - 1 - i)) & 1ULL;
    if (satisfies(formula, a, mode)) return a;
  }
  return std::nullopt;
}

PpnNormalization to_ppn(const CnfFormula& formula) {
  PpnNormalization out;
  // Copies of each input variable, in order of occurrence.
  std::vector<std::vector<int>> copies(formula.num_variables + 1);
  std::vector<bool> copy_was_negative;

  for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
    Clause clause = formula.clauses[j];
    if (clause.empty() || clause.size() > 3)
      throw PreconditionError("to_ppn: clause " + std::to_string(j + 1) + " has " +
                              std::to_string(clause.size()) + " literals");
    if (clause.size() == 1) clause.push_back(clause.front());
    Clause rewritten;
    for (const Literal& l : clause) {
      if (l.variable < 1 || l.variable > formula.num_variables)
        throw PreconditionError("to_ppn: unknown variable " + std::to_string(l.variable));
      const int fresh = static_cast<int>(out.origins.size()) + 1;
      out.origins.push_back({l.variable, !l.positive});
      copy_was_negative.push_back(!l.positive);
      copies[l.variable].push_back(fresh);
      rewritten.push_back({fresh, l.positive});
    }
    out.formula.clauses.push_back(std::move(rewritten));
  }
  out.formula.num_variables = static_cast<int>(out.origins.size());

  // x_{i+1} implies x_i around the cycle, so all copies agree.
  for (const auto& chain : copies) {
    const std::size_t k = chain.size();
    for (std::size_t i = 0; i < k; ++i)
      out.formula.clauses.push_back({{chain[i], true}, {chain[(i + 1) % k], false}});
  }

  // A negatively used copy now occurs once positively and twice negatively;
  // renaming it to its negation restores two positive and one negative.
  for (Clause& clause : out.formula.clauses)
    for (Literal& l : clause)
      if (copy_was_negative[l.variable - 1]) l.positive = !l.positive;
  return out;
}

SatAssignment project_assignment(const PpnNormalization& normalization, int source_variables,
                                 const SatAssignment& assignment) {
  SatAssignment out(source_variables, false);
  std::vector<bool> done(source_variables + 1, false);
  for (std::size_t v = 0; v < normalization.origins.size(); ++v) {
    const VariableOrigin& o = normalization.origins[v];
    if (done[o.source]) continue;
    out[o.source - 1] = assignment[v] != o.flipped;
    done[o.source] = true;
  }
  return out;
}

SatAssignment lift_assignment(const PpnNormalization& normalization, const SatAssignment& assignment) {
  SatAssignment out(normalization.origins.size());
  for (std::size_t v = 0; v < normalization.origins.size(); ++v) {
    const VariableOrigin& o = normalization.origins[v];
    out[v] = assignment[o.source - 1] != o.flipped;
  }
  return out;
}

}  // namespace hrrc
