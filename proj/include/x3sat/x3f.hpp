#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "x3sat/formula.hpp"

namespace x3sat {

// The X3F interchange format, line oriented:
//
//   c free-form comment
//   p x3f <num_vars> <num_clauses>
//   s <id> <name>            (optional symbol table entries)
//   m <lit> ... 0            (optional minterm line)
//   <lit> <lit> [<lit>] 0    (exactly num_clauses clause lines, width 1..3)
//
// Literals are signed decimal ids, negative meaning negated. Fields are
// separated by single spaces and every line ends with '\n'. The header is
// deliberately not DIMACS `p cnf`: these are exactly-one clauses and reading
// them as disjunctions must fail loudly, not quietly.

class ParseError : public std::runtime_error {
public:
  ParseError(size_t line, const std::string &msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}

  size_t line() const { return line_; }

private:
  size_t line_;
};

struct X3FDocument {
  FormulaState formula;
  std::map<int, std::string> symbols; // id -> name, optional decoration
};

namespace x3f_detail {

// strict tokenization: single spaces, no leading/trailing blanks
inline std::vector<std::string> tokens(const std::string &line, size_t lineno) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ' ') {
      if (cur.empty())
        throw ParseError(lineno, "malformed whitespace (expected single spaces)");
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (cur.empty())
    throw ParseError(lineno, "malformed whitespace (expected single spaces)");
  out.push_back(cur);
  return out;
}

inline long to_long(const std::string &tok, size_t lineno) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception &) {
    throw ParseError(lineno, "expected an integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(lineno, "expected an integer, got '" + tok + "'");
  return v;
}

/// Literal list terminated by the 0 sentinel, starting at token `start`.
inline std::vector<Literal> literal_run(const std::vector<std::string> &toks,
                                        size_t start, int num_vars,
                                        size_t lineno) {
  std::vector<Literal> lits;
  bool terminated = false;
  for (size_t i = start; i < toks.size(); ++i) {
    long v = to_long(toks[i], lineno);
    if (v == 0) {
      if (i + 1 != toks.size())
        throw ParseError(lineno, "content after the 0 terminator");
      terminated = true;
      break;
    }
    if (v > num_vars || v < -num_vars)
      throw ParseError(lineno, "literal " + std::to_string(v) +
                                   " out of range for " +
                                   std::to_string(num_vars) + " variables");
    lits.push_back(Literal::from_int(static_cast<int>(v)));
  }
  if (!terminated) throw ParseError(lineno, "missing 0 terminator");
  return lits;
}

inline bool is_comment(const std::string &line) {
  return line == "c" || line.rfind("c ", 0) == 0;
}

} // namespace x3f_detail

inline X3FDocument parse_document(const std::string &text) {
  using namespace x3f_detail;
  if (!text.empty() && text.back() != '\n')
    throw ParseError(1 + static_cast<size_t>(
                             std::count(text.begin(), text.end(), '\n')),
                     "missing trailing newline");

  std::vector<std::string> lines;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
  }

  X3FDocument doc;
  int num_vars = -1, num_clauses = -1;
  PartialAssignment minterm;
  std::vector<Clause> clauses;
  std::map<std::string, int> names_seen;

  enum class Section { Header, Symbols, Clauses } section = Section::Header;

  for (size_t idx = 0; idx < lines.size(); ++idx) {
    const std::string &line = lines[idx];
    size_t lineno = idx + 1;
    if (line.empty()) throw ParseError(lineno, "empty line");
    if (is_comment(line)) continue;
    auto toks = tokens(line, lineno);

    if (section == Section::Header) {
      if (toks.size() != 4 || toks[0] != "p" || toks[1] != "x3f")
        throw ParseError(lineno, "malformed header (expected 'p x3f V C')");
      long nv = to_long(toks[2], lineno), nc = to_long(toks[3], lineno);
      if (nv < 0 || nc < 0)
        throw ParseError(lineno, "malformed header (negative counts)");
      num_vars = static_cast<int>(nv);
      num_clauses = static_cast<int>(nc);
      section = Section::Symbols;
      continue;
    }

    if (section == Section::Symbols && toks[0] == "s") {
      if (toks.size() != 3)
        throw ParseError(lineno, "malformed symbol line (expected 's ID NAME')");
      long id = to_long(toks[1], lineno);
      if (id < 1 || id > num_vars)
        throw ParseError(lineno, "symbol id out of range");
      if (doc.symbols.count(static_cast<int>(id)))
        throw ParseError(lineno, "duplicate symbol id");
      if (!names_seen.emplace(toks[2], static_cast<int>(id)).second)
        throw ParseError(lineno, "duplicate symbol name");
      doc.symbols[static_cast<int>(id)] = toks[2];
      continue;
    }

    if (section == Section::Symbols && toks[0] == "m") {
      saw_minterm = true;
      for (Literal l : literal_run(toks, 1, num_vars, lineno))
        if (minterm.try_bind(l) == BindOutcome::Conflict)
          throw ParseError(lineno, "conflicting literal in minterm");
      section = Section::Clauses;
      continue;
    }
    section = Section::Clauses;

    if (static_cast<int>(clauses.size()) == num_clauses)
      throw ParseError(lineno, "clause count mismatch (more clauses than header)");
    auto lits = literal_run(toks, 0, num_vars, lineno);
    if (lits.empty() || lits.size() > 3)
      throw ParseError(lineno, "clause width must be 1..3");
    try {
      clauses.emplace_back(std::move(lits));
    } catch (const std::invalid_argument &) {
      throw ParseError(lineno, "duplicate variable in clause");
    }
  }

  if (num_vars < 0) throw ParseError(lines.size() + 1, "missing header");
  if (static_cast<int>(clauses.size()) != num_clauses)
    throw ParseError(lines.size() + 1,
                     "clause count mismatch (header promises " +
                         std::to_string(num_clauses) + ", got " +
                         std::to_string(clauses.size()) + ")");
  (void)saw_minterm;
  doc.formula = FormulaState(std::move(minterm), std::move(clauses), num_vars);
  return doc;
}

inline FormulaState parse(const std::string &text) {
  return parse_document(text).formula;
}

/// Canonical byte-exact form: header, symbol lines (ascending id) when a
/// table is attached, minterm line (ascending id) when non-empty, clauses in
/// stored order with literals in stored order. LF endings.
inline std::string serialize_document(const X3FDocument &doc) {
  std::ostringstream os;
  const FormulaState &f = doc.formula;
  os << "p x3f " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto &[id, name] : doc.symbols) os << "s " << id << ' ' << name << '\n';
  if (!f.minterm.empty()) {
    os << 'm';
    for (Literal l : f.minterm.literals()) os << ' ' << l;
    os << " 0\n";
  }
  for (const Clause &c : f.clauses) {
    for (Literal l : c) os << l << ' ';
    os << "0\n";
  }
  return os.str();
}

inline std::string serialize(const FormulaState &f) {
  return serialize_document({f, {}});
}

inline std::string read_text_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

} // namespace x3sat
