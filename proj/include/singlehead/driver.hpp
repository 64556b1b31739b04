#pragma once

// Command-line front end logic, kept out of main() so the reports and exit
// codes are directly testable.
//
// Formula mode reproduces the reference report layout: the echoed specs,
// one trace line per clause, the resulting single-head candidate and its
// equivalence verdict. Test mode runs cases from a plain-text file:
//
//   name: inloop
//   expect: false
//   a->b
//   b->c
//   c->b
//
// Several cases may share one file; every `name:` line starts a new case.
// Exit codes: 0 pass/success, 1 failure, 2 usage or parse error,
// 3 inconclusive.

#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "singlehead/analysis.hpp"
#include "singlehead/errors.hpp"
#include "singlehead/forgetting.hpp"
#include "singlehead/graph.hpp"
#include "singlehead/horn.hpp"
#include "singlehead/shmin.hpp"

namespace singlehead {

enum class Expectation { True, False, None };
enum class TestVerdict { Passed, Failed, Inconclusive };

struct TestCase {
  std::string name;
  Expectation expect = Expectation::None;
  std::vector<std::string> clause_specs;
};

struct RunOptions {
  VarMode mode = VarMode::Single;
  unsigned attempts = 0;  // 0: single run in the given clause order
  std::uint64_t seed = 0;
};

struct ModeResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Builds the formula from specs. Clauses from "=" specs come first, then
// the "->" ones, each group in spec order.
inline Formula assemble_formula(const std::vector<std::string>& specs,
                                VarMode mode) {
  std::vector<Clause> clauses;
  for (int pass = 0; pass < 2; ++pass) {
    for (const std::string& spec : specs) {
      if (is_equivalence_spec(spec) != (pass == 0)) continue;
      for (Clause& c : parse_clause_spec(spec, mode))
        clauses.push_back(std::move(c));
    }
  }
  return Formula(std::move(clauses));
}

namespace detail {

inline std::string render_trace_line(const ShminTraceEntry& entry,
                                     VarMode mode) {
  std::string line = format_clause(entry.source, mode);
  if (entry.skipped) return line + " | [head already in shmin]";
  for (const std::vector<VarSet>* phase :
       {&entry.order_phase_bodies, &entry.subset_phase_bodies}) {
    std::string bodies;
    for (const VarSet& b : *phase) {
      if (!bodies.empty()) bodies += ' ';
      bodies += format_vars(b, mode);
    }
    line += " |";
    if (!bodies.empty()) line += ' ' + bodies;
  }
  line += " | " + format_clause(*entry.result, mode);
  return line;
}

inline void render_analysis(std::ostream& os,
                            const std::vector<std::string>& specs,
                            const ShminOutcome& outcome, Expectation expect,
                            VarMode mode) {
  os << "formula:";
  for (const std::string& s : specs) os << ' ' << s;
  os << '\n';
  for (const ShminTraceEntry& entry : outcome.trace)
    os << render_trace_line(entry, mode) << '\n';
  os << "shmin:";
  for (const Clause& c : outcome.formula.clauses())
    os << ' ' << format_clause(c, mode);
  os << '\n';
  os << "shmin equivalent: " << (outcome.equivalent ? "True" : "False")
     << '\n';
  os << "expected result: ";
  switch (expect) {
    case Expectation::True: os << "True"; break;
    case Expectation::False: os << "False"; break;
    case Expectation::None: os << "None"; break;
  }
  os << '\n';
}

inline ShminOutcome run_shmin(const Formula& f, const RunOptions& options) {
  return options.attempts == 0
             ? shmin(f)
             : shmin_restarts(f, options.attempts, options.seed);
}

inline VarSet parse_var_list(const std::vector<std::string>& tokens,
                             VarMode mode) {
  std::vector<Variable> vars;
  for (const std::string& token : tokens) {
    if (token.empty()) continue;
    if (mode == VarMode::Single) {
      for (char ch : token) {
        if (!std::isalnum(static_cast<unsigned char>(ch)))
          throw ParseError("illegal character '" + std::string(1, ch) +
                           "' in variable list");
        vars.emplace_back(std::string(1, ch));
      }
    } else {
      std::size_t start = 0;
      while (start <= token.size()) {
        std::size_t comma = token.find(',', start);
        std::string name = token.substr(
            start, comma == std::string::npos ? std::string::npos
                                              : comma - start);
        if (!valid_identifier(name))
          throw ParseError("illegal variable token '" + name +
                           "' in variable list");
        vars.emplace_back(name);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
  }
  return VarSet(std::move(vars));
}

}  // namespace detail

inline ModeResult run_formula_mode(const std::vector<std::string>& specs,
                                   const RunOptions& options = {}) {
  ModeResult result;
  try {
    Formula f = assemble_formula(specs, options.mode);
    ShminOutcome outcome = detail::run_shmin(f, options);
    std::ostringstream os;
    os << "## cmdline formula ##\n";
    detail::render_analysis(os, specs, outcome, Expectation::None,
                            options.mode);
    result.out = os.str();
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + '\n';
  }
  return result;
}

inline std::vector<TestCase> parse_test_cases(std::istream& in) {
  std::vector<TestCase> cases;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (text.starts_with("name:")) {
      TestCase tc;
      tc.name = std::string(detail::trim(text.substr(5)));
      if (tc.name.empty())
        throw ParseError("line " + std::to_string(line_no) + ": empty name");
      cases.push_back(std::move(tc));
      continue;
    }
    if (cases.empty())
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected a 'name:' line first");
    if (text.starts_with("expect:")) {
      std::string value(detail::trim(text.substr(7)));
      if (value == "true")
        cases.back().expect = Expectation::True;
      else if (value == "false")
        cases.back().expect = Expectation::False;
      else if (value == "none")
        cases.back().expect = Expectation::None;
      else
        throw ParseError("line " + std::to_string(line_no) +
                         ": expect must be true, false or none");
      continue;
    }
    cases.back().clause_specs.emplace_back(text);
  }
  if (cases.empty()) throw ParseError("test file contains no cases");
  for (const TestCase& tc : cases)
    if (tc.clause_specs.empty())
      throw ParseError("test case '" + tc.name + "' has no clauses");
  return cases;
}

inline TestVerdict case_verdict(Expectation expect, bool equivalent) {
  if (equivalent)
    return expect == Expectation::False ? TestVerdict::Failed
                                        : TestVerdict::Passed;
  return expect == Expectation::False ? TestVerdict::Passed
                                      : TestVerdict::Inconclusive;
}

inline ModeResult run_test_mode(const std::string& path,
                                const RunOptions& options = {}) {
  ModeResult result;
  std::ifstream in(path);
  if (!in) {
    result.exit_code = 2;
    result.err = "error: cannot open test file '" + path + "'\n";
    return result;
  }
  try {
    std::vector<TestCase> cases = parse_test_cases(in);
    std::ostringstream os;
    TestVerdict worst = TestVerdict::Passed;
    for (const TestCase& tc : cases) {
      Formula f = assemble_formula(tc.clause_specs, options.mode);
      ShminOutcome outcome = detail::run_shmin(f, options);
      os << "## test: " << tc.name << " ##\n";
      detail::render_analysis(os, tc.clause_specs, outcome, tc.expect,
                              options.mode);
      TestVerdict verdict = case_verdict(tc.expect, outcome.equivalent);
      if (verdict == TestVerdict::Failed ||
          (verdict == TestVerdict::Inconclusive &&
           worst == TestVerdict::Passed))
        worst = verdict;
    }
    switch (worst) {
      case TestVerdict::Passed:
        os << "TEST PASSED\n";
        result.exit_code = 0;
        break;
      case TestVerdict::Failed:
        os << "TEST FAILED\n";
        result.exit_code = 1;
        break;
      case TestVerdict::Inconclusive:
        os << "TEST INCONCLUSIVE\n";
        result.exit_code = 3;
        break;
    }
    result.out = os.str();
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + '\n';
  }
  return result;
}

inline ModeResult run_forget_mode(const std::vector<std::string>& specs,
                                  const std::vector<std::string>& var_tokens,
                                  bool naive, const RunOptions& options = {}) {
  ModeResult result;
  try {
    Formula f = assemble_formula(specs, options.mode);
    VarSet vars = detail::parse_var_list(var_tokens, options.mode);
    ForgetResult forgotten =
        naive ? forget_replace(f, vars)
              : forget_fast(f, vars,
                            options.attempts == 0 ? 1 : options.attempts,
                            options.seed);
    std::ostringstream os;
    os << "## forget ##\n";
    os << "formula:";
    for (const std::string& s : specs) os << ' ' << s;
    os << '\n';
    os << "forget:";
    for (const Variable& v : vars) os << ' ' << v.name();
    os << '\n';
    os << "result:";
    for (const Clause& c : forgotten.formula.clauses())
      os << ' ' << format_clause(c, options.mode);
    os << '\n';
    os << "branches: " << forgotten.branches << '\n';
    os << "preprocessed: " << (forgotten.preprocessed ? "True" : "False")
       << '\n';
    result.out = os.str();
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + '\n';
  } catch (const PreconditionError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + '\n';
  }
  return result;
}

enum class GraphKind { Syntactic, Semantic };

inline ModeResult run_graph_mode(const std::vector<std::string>& specs,
                                 GraphKind kind,
                                 const RunOptions& options = {}) {
  ModeResult result;
  try {
    Formula f = assemble_formula(specs, options.mode);
    DirectedGraph g = kind == GraphKind::Syntactic ? syntactic_graph(f)
                                                   : semantic_graph(f);
    result.out = to_dot(g);
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.err = std::string("error: ") + e.what() + '\n';
  } catch (const CapExceededError& e) {
    result.exit_code = 1;
    result.err = std::string("error: ") + e.what() + '\n';
  }
  return result;
}

}  // namespace singlehead
