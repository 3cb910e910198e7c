#include "hrrc/reductions.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>

namespace hrrc {

namespace {

std::string id(const std::string& base, int a) { return base + "_" + std::to_string(a); }
std::string id(const std::string& base, int a, int b) { return id(id(base, a), b); }

void require_report_empty(const FormulaReport& report, const std::string& what) {
  if (report.empty()) return;
  std::string message = what + ":";
  for (const auto& line : report) message += "\n  " + line;
  throw PreconditionError(message);
}

// Gadget wiring shared by the three PPN constructions. Indices are 1-based
// to match agent names.
class PpnNames {
 public:
  PpnNames(const CnfFormula& formula, const OccurrenceTable& table)
      : formula_(formula), table_(table) {}

  // The variable-gadget hospital a clause resident points at.
  std::string target_of(int j, int l) const {
    const ClauseSlot& s = table_.by_clause[j - 1][l - 1];
    return id("x'", s.variable, s.kind);
  }
  // The clause resident a variable-gadget hospital points at.
  std::string source_of(int i, int k) const {
    const OccurrenceSlot& s = table_.by_variable[i - 1][k - 1];
    return id("c'", s.clause + 1, s.position + 1);
  }
  int clause_size(int j) const { return static_cast<int>(formula_.clauses[j - 1].size()); }
  bool literal_true(const SatAssignment& a, int j, int l) const {
    const Literal& lit = formula_.clauses[j - 1][l - 1];
    return a[lit.variable - 1] == lit.positive;
  }

 private:
  const CnfFormula& formula_;
  const OccurrenceTable& table_;
};

// The clause gadget shared by the (2,2,3) and (2,3,2) constructions.
void clause_gadget_two_lists(InstanceBuilder& b, const PpnNames& names, int j) {
  const std::string c1 = id("c'", j, 1), c2 = id("c'", j, 2), a1 = id("a'", j, 1), y = id("y'", j);
  const std::string z = id("z'", j);
  b.resident(c1, {names.target_of(j, 1), a1});
  b.resident(c2, {names.target_of(j, 2), a1});
  if (names.clause_size(j) == 2) {
    b.hospital(a1, 1, {c1, c2});
    b.hospital(y, 1, {z});
    b.region({a1, y}, 1);
    return;
  }
  const std::string c3 = id("c'", j, 3), d = id("d'", j), a2 = id("a'", j, 2), a3 = id("a'", j, 3);
  b.resident(d, {a2, a3});
  b.resident(c3, {names.target_of(j, 3), a3});
  b.hospital(a1, 1, {c1, c2});
  b.hospital(a2, 1, {d});
  b.hospital(a3, 1, {d, c3});
  b.hospital(y, 1, {z});
  b.region({a1, a2}, 1);
  b.region({a3, y}, 1);
}

void clause_gadget_three_lists(InstanceBuilder& b, const PpnNames& names, int j) {
  const std::string c1 = id("c'", j, 1), c2 = id("c'", j, 2), u1 = id("u'", j, 1);
  const std::string a1 = id("a'", j, 1), a2 = id("a'", j, 2), y = id("y'", j), z = id("z'", j);
  b.resident(c1, {names.target_of(j, 1), a1});
  b.resident(c2, {names.target_of(j, 2), a2});
  b.hospital(a1, 1, {c1, u1});
  b.hospital(a2, 1, {c2, u1});
  if (names.clause_size(j) == 2) {
    b.resident(u1, {a1, a2, y});
    b.hospital(y, 1, {u1, z});
    return;
  }
  const std::string d = id("d'", j), c3 = id("c'", j, 3), u2 = id("u'", j, 2);
  const std::string w = id("w'", j), a3 = id("a'", j, 3), a4 = id("a'", j, 4);
  b.resident(u1, {a1, a2, w});
  b.resident(d, {w, a4});
  b.resident(c3, {names.target_of(j, 3), a3});
  b.resident(u2, {a4, a3, y});
  b.hospital(w, 1, {u1, d});
  b.hospital(a4, 1, {d, u2});
  b.hospital(a3, 1, {c3, u2});
  b.hospital(y, 1, {u2, z});
}

void variable_gadget(InstanceBuilder& b, const PpnNames& names, ReductionTarget target, int i) {
  const std::string e1 = id("e'", i, 1), e2 = id("e'", i, 2);
  const std::string b1 = id("b'", i, 1), b2 = id("b'", i, 2);
  const std::string x1 = id("x'", i, 1), x2 = id("x'", i, 2), x3 = id("x'", i, 3);
  switch (target) {
    case ReductionTarget::Ppn223: {
      const std::string b3 = id("b'", i, 3), b4 = id("b'", i, 4);
      b.resident(e1, {b1, b3});
      b.resident(e2, {b2, b4});
      b.hospital(b1, 1, {e1});
      b.hospital(x1, 1, {names.source_of(i, 1)});
      b.hospital(b2, 1, {e2});
      b.hospital(x2, 1, {names.source_of(i, 2)});
      b.hospital(b3, 1, {e1});
      b.hospital(b4, 1, {e2});
      b.hospital(x3, 1, {names.source_of(i, 3)});
      b.region({b1, x1}, 1);
      b.region({b2, x2}, 1);
      b.region({b3, b4, x3}, 2);
      break;
    }
    case ReductionTarget::Ppn232:
      b.resident(e1, {b1, x3});
      b.resident(e2, {b2, x3});
      b.hospital(b1, 1, {e1});
      b.hospital(x1, 1, {names.source_of(i, 1)});
      b.hospital(b2, 1, {e2});
      b.hospital(x2, 1, {names.source_of(i, 2)});
      b.hospital(x3, 2, {e1, e2, names.source_of(i, 3)});
      b.region({b1, x1}, 1);
      b.region({b2, x2}, 1);
      break;
    case ReductionTarget::Ppn322: {
      const std::string e3 = id("e'", i, 3), e4 = id("e'", i, 4);
      b.resident(e1, {b1, x1});
      b.resident(e2, {b1, x2});
      b.resident(e3, {b2, x3});
      b.resident(e4, {b2});
      b.hospital(x1, 1, {e1, names.source_of(i, 1)});
      b.hospital(x2, 1, {e2, names.source_of(i, 2)});
      b.hospital(x3, 1, {e3, names.source_of(i, 3)});
      b.hospital(b1, 2, {e2, e1});
      b.hospital(b2, 2, {e4, e3});
      b.region({b1, b2}, 2);
      break;
    }
    case ReductionTarget::OneInThree222: break;
  }
}

void terminal_gadget(InstanceBuilder& b, ReductionTarget target, int j) {
  const std::string g1 = id("g'", j, 1), g2 = id("g'", j, 2), g3 = id("g'", j, 3), g4 = id("g'", j, 4);
  const std::string y = id("y'", j), z = id("z'", j), t = id("t'", j);
  switch (target) {
    case ReductionTarget::Ppn223:
      b.resident(z, {y, t});
      b.resident(g1, {g2, g4});
      b.resident(g3, {g4, g2});
      b.hospital(g2, 1, {g3, g1});
      b.hospital(g4, 1, {g1, g3});
      b.hospital(t, 1, {z});
      b.region({g2, g4, t}, 1);
      break;
    case ReductionTarget::Ppn232:
      b.resident(z, {y, g2});
      b.resident(g1, {g2, g4});
      b.resident(g3, {g4, g2});
      b.hospital(g2, 1, {z, g3, g1});
      b.hospital(g4, 1, {g1, g3});
      b.region({g2, g4}, 1);
      break;
    case ReductionTarget::Ppn322:
      b.resident(z, {y, g2, g4});
      b.resident(g3, {g4, g2});
      b.hospital(g2, 1, {g3, z});
      b.hospital(g4, 1, {z, g3});
      b.region({g2, g4}, 1);
      break;
    case ReductionTarget::OneInThree222: break;
  }
}

class MatchingBuilder {
 public:
  explicit MatchingBuilder(const Instance& instance) : instance_(instance) {}
  void add(const std::string& r, const std::string& h) {
    pairs_.push_back({instance_.resident_index(r), instance_.hospital_index(h)});
  }
  Assignment build() const { return Assignment(pairs_); }

 private:
  const Instance& instance_;
  std::vector<Pair> pairs_;
};

void encode_two_lists(MatchingBuilder& m, const PpnNames& names, const SatAssignment& a, int j) {
  const std::string a1 = id("a'", j, 1);
  const bool t1 = names.literal_true(a, j, 1), t2 = names.literal_true(a, j, 2);
  if (!t1) m.add(id("c'", j, 1), names.target_of(j, 1));
  if (!t2) m.add(id("c'", j, 2), names.target_of(j, 2));
  if (names.clause_size(j) == 2) {
    m.add(t1 ? id("c'", j, 1) : id("c'", j, 2), a1);
    return;
  }
  const bool t3 = names.literal_true(a, j, 3);
  if (!t3) m.add(id("c'", j, 3), names.target_of(j, 3));
  if (!t1 && !t2) {
    m.add(id("d'", j), id("a'", j, 2));
    m.add(id("c'", j, 3), id("a'", j, 3));
  } else {
    m.add(t1 ? id("c'", j, 1) : id("c'", j, 2), a1);
    m.add(id("d'", j), id("a'", j, 3));
  }
}

void encode_three_lists(MatchingBuilder& m, const PpnNames& names, const SatAssignment& a, int j) {
  const int size = names.clause_size(j);
  bool t[4] = {false, false, false, false};
  for (int l = 1; l <= size; ++l) {
    t[l] = names.literal_true(a, j, l);
    m.add(id("c'", j, l), t[l] ? names.target_of(j, l) : id("a'", j, l));
  }
  const std::string u1 = id("u'", j, 1);
  if (size == 2) {
    m.add(u1, t[1] ? id("a'", j, 1) : id("a'", j, 2));
    return;
  }
  if (t[1] || t[2]) {
    m.add(u1, t[1] ? id("a'", j, 1) : id("a'", j, 2));
    m.add(id("d'", j), id("w'", j));
    m.add(id("u'", j, 2), id("a'", j, 4));
  } else {
    m.add(u1, id("w'", j));
    m.add(id("d'", j), id("a'", j, 4));
    m.add(id("u'", j, 2), id("a'", j, 3));
  }
}

}  // namespace

std::string target_name(ReductionTarget target) {
  switch (target) {
    case ReductionTarget::OneInThree222: return "one-in-three-222";
    case ReductionTarget::Ppn223: return "ppn-223";
    case ReductionTarget::Ppn232: return "ppn-232";
    case ReductionTarget::Ppn322: return "ppn-322";
  }
  return "";
}

std::optional<ReductionTarget> parse_target(std::string_view name) {
  for (auto t : {ReductionTarget::OneInThree222, ReductionTarget::Ppn223, ReductionTarget::Ppn232,
                 ReductionTarget::Ppn322})
    if (target_name(t) == name) return t;
  return std::nullopt;
}

InstanceClass advertised_class(ReductionTarget target) {
  switch (target) {
    case ReductionTarget::OneInThree222: return {2, 2, 2, false};
    case ReductionTarget::Ppn223: return {2, 2, 3, true};
    case ReductionTarget::Ppn232: return {2, 3, 2, true};
    case ReductionTarget::Ppn322: return {3, 2, 2, true};
  }
  return {};
}

OccurrenceTable build_occurrence_table(const CnfFormula& formula) {
  require_report_empty(check_ppn(formula), "formula is not PPN");
  OccurrenceTable table;
  table.by_variable.resize(formula.num_variables);
  table.by_clause.resize(formula.clauses.size());
  std::vector<int> positives_seen(formula.num_variables, 0);
  for (int j = 0; j < static_cast<int>(formula.clauses.size()); ++j)
    for (int l = 0; l < static_cast<int>(formula.clauses[j].size()); ++l) {
      const Literal& lit = formula.clauses[j][l];
      const int kind = lit.positive ? ++positives_seen[lit.variable - 1] : 3;
      table.by_variable[lit.variable - 1][kind - 1] = {j, l};
      table.by_clause[j].push_back({lit.variable, kind});
    }
  return table;
}

std::string save_occurrence_table(const OccurrenceTable& table) {
  nlohmann::json variables = nlohmann::json::array();
  for (std::size_t i = 0; i < table.by_variable.size(); ++i) {
    nlohmann::json occurrences = nlohmann::json::array();
    for (int k = 0; k < 3; ++k)
      occurrences.push_back({{"kind", k + 1},
                             {"clause", table.by_variable[i][k].clause + 1},
                             {"position", table.by_variable[i][k].position + 1}});
    variables.push_back({{"variable", i + 1}, {"occurrences", occurrences}});
  }
  nlohmann::json clauses = nlohmann::json::array();
  for (const auto& clause : table.by_clause) {
    nlohmann::json slots = nlohmann::json::array();
    for (const ClauseSlot& s : clause) slots.push_back({{"variable", s.variable}, {"kind", s.kind}});
    clauses.push_back(slots);
  }
  return nlohmann::json{{"variables", variables}, {"clauses", clauses}}.dump(2) + "\n";
}

Reduction reduce_oneinthree(const CnfFormula& formula) {
  require_report_empty(check_one_in_three_positive(formula), "formula is not positive one-in-three");
  InstanceBuilder b;
  for (int i = 1; i <= formula.num_variables; ++i) {
    b.resident(id("y'", i), {id("x'", i)});
    b.hospital(id("x'", i), 1, {id("y'", i)});
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (int j = 1; j <= static_cast<int>(formula.clauses.size()); ++j) {
    const std::string g1 = id("g'", j, 1), g2 = id("g'", j, 2), g3 = id("g'", j, 3), g4 = id("g'", j, 4);
    b.resident(g1, {g2, g4});
    b.resident(g3, {g4, g2});
    b.hospital(g2, 1, {g3, g1});
    b.hospital(g4, 1, {g1, g3});
    std::vector<std::string> members{g2, g4};
    for (const Literal& l : formula.clauses[j - 1]) members.push_back(id("x'", l.variable));
    for (std::size_t p = 0; p < members.size(); ++p)
      for (std::size_t q = p + 1; q < members.size(); ++q) {
        auto key = std::minmax(members[p], members[q]);
        if (!seen.insert({key.first, key.second}).second) continue;
        b.region({members[p], members[q]}, 1);
      }
  }
  return {ReductionTarget::OneInThree222, formula, b.build(), std::nullopt};
}

Reduction reduce_ppn(const CnfFormula& formula, ReductionTarget target) {
  if (target == ReductionTarget::OneInThree222)
    throw PreconditionError("reduce_ppn: target must be one of the PPN reductions");
  OccurrenceTable table = build_occurrence_table(formula);
  const PpnNames names(formula, table);
  InstanceBuilder b;
  for (int i = 1; i <= formula.num_variables; ++i) variable_gadget(b, names, target, i);
  for (int j = 1; j <= static_cast<int>(formula.clauses.size()); ++j) {
    if (target == ReductionTarget::Ppn322)
      clause_gadget_three_lists(b, names, j);
    else
      clause_gadget_two_lists(b, names, j);
    terminal_gadget(b, target, j);
  }
  return {target, formula, b.build(), std::move(table)};
}

Reduction reduce(const CnfFormula& formula, ReductionTarget target) {
  return target == ReductionTarget::OneInThree222 ? reduce_oneinthree(formula)
                                                   : reduce_ppn(formula, target);
}

ReductionSize ppn_reduction_size(ReductionTarget target, int n, int m2, int m3) {
  const int m = m2 + m3;
  switch (target) {
    case ReductionTarget::Ppn223:
      return {2 * n + 2 * m2 + 4 * m3 + 3 * m, 7 * n + 2 * m2 + 4 * m3 + 3 * m,
              3 * n + m2 + 2 * m3 + m};
    case ReductionTarget::Ppn232:
      return {2 * n + 2 * m2 + 4 * m3 + 3 * m, 5 * n + 2 * m2 + 4 * m3 + 2 * m,
              2 * n + m2 + 2 * m3 + m};
    case ReductionTarget::Ppn322:
      return {4 * n + 3 * m2 + 6 * m3 + 2 * m, 5 * n + 3 * m2 + 6 * m3 + 2 * m, n + m};
    case ReductionTarget::OneInThree222: break;
  }
  throw PreconditionError("ppn_reduction_size: not a PPN target");
}

Assignment encode_assignment(const Reduction& reduction, const SatAssignment& assignment) {
  const bool one_in_three = reduction.target == ReductionTarget::OneInThree222;
  if (!satisfies(reduction.formula, assignment, one_in_three ? SatMode::OneInThree : SatMode::Ordinary))
    throw PreconditionError("assignment does not satisfy the formula");
  const CnfFormula& formula = reduction.formula;
  MatchingBuilder m(reduction.instance);

  if (one_in_three) {
    // A variable in no clause has no regions around its hospital, so its
    // gadget pair must be present whatever the value.
    std::vector<bool> used(formula.num_variables, false);
    for (const Clause& clause : formula.clauses)
      for (const Literal& l : clause) used[l.variable - 1] = true;
    for (int i = 1; i <= formula.num_variables; ++i)
      if (assignment[i - 1] || !used[i - 1]) m.add(id("y'", i), id("x'", i));
    return m.build();
  }

  const PpnNames names(formula, *reduction.occurrences);
  for (int i = 1; i <= formula.num_variables; ++i) {
    const bool x = assignment[i - 1];
    switch (reduction.target) {
      case ReductionTarget::Ppn223:
        m.add(id("e'", i, 1), x ? id("b'", i, 1) : id("b'", i, 3));
        m.add(id("e'", i, 2), x ? id("b'", i, 2) : id("b'", i, 4));
        break;
      case ReductionTarget::Ppn232:
        m.add(id("e'", i, 1), x ? id("b'", i, 1) : id("x'", i, 3));
        m.add(id("e'", i, 2), x ? id("b'", i, 2) : id("x'", i, 3));
        break;
      case ReductionTarget::Ppn322:
        if (x) {
          m.add(id("e'", i, 1), id("b'", i, 1));
          m.add(id("e'", i, 2), id("b'", i, 1));
          m.add(id("e'", i, 3), id("x'", i, 3));
        } else {
          m.add(id("e'", i, 1), id("x'", i, 1));
          m.add(id("e'", i, 2), id("x'", i, 2));
          m.add(id("e'", i, 3), id("b'", i, 2));
          m.add(id("e'", i, 4), id("b'", i, 2));
        }
        break;
      case ReductionTarget::OneInThree222: break;
    }
  }
  for (int j = 1; j <= static_cast<int>(formula.clauses.size()); ++j) {
    switch (reduction.target) {
      case ReductionTarget::Ppn223:
        encode_two_lists(m, names, assignment, j);
        m.add(id("z'", j), id("t'", j));
        break;
      case ReductionTarget::Ppn232:
        encode_two_lists(m, names, assignment, j);
        m.add(id("z'", j), id("g'", j, 2));
        break;
      case ReductionTarget::Ppn322:
        encode_three_lists(m, names, assignment, j);
        m.add(id("z'", j), id("y'", j));
        m.add(id("g'", j, 3), id("g'", j, 4));
        break;
      case ReductionTarget::OneInThree222: break;
    }
  }
  return m.build();
}

SatAssignment decode_matching(const Reduction& reduction, const Assignment& matching) {
  const Instance& inst = reduction.instance;
  const int n = reduction.formula.num_variables;
  SatAssignment out(n, false);
  if (reduction.target == ReductionTarget::OneInThree222) {
    for (int i = 1; i <= n; ++i) {
      const HospitalIndex h = inst.hospital_index(id("x'", i));
      out[i - 1] = std::any_of(matching.pairs().begin(), matching.pairs().end(),
                               [h](const Pair& p) { return p.hospital == h; });
    }
    return out;
  }
  const PpnNames names(reduction.formula, *reduction.occurrences);
  for (int i = 1; i <= n; ++i) {
    const bool negative_slot_taken = matching.contains(
        {inst.resident_index(names.source_of(i, 3)), inst.hospital_index(id("x'", i, 3))});
    out[i - 1] = reduction.target == ReductionTarget::Ppn322 ? !negative_slot_taken
                                                             : negative_slot_taken;
  }
  return out;
}

}  // namespace hrrc
