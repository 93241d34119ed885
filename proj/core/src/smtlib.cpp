#include "smtgi/smtlib.hpp"

#include <cctype>

#include "smtgi/error.hpp"

namespace smtgi {

namespace {

void write(std::string& out, const Term& term) {
  auto nary = [&](const char* op) {
    out += '(';
    out += op;
    for (const auto& arg : term.args()) {
      out += ' ';
      write(out, arg);
    }
    out += ')';
  };
  switch (term.op()) {
    case Term::Op::Int:
      if (term.value() < 0) {
        out += "(- " + std::to_string(-term.value()) + ')';
      } else {
        out += std::to_string(term.value());
      }
      return;
    case Term::Op::Bool:
      out += term.value() ? "true" : "false";
      return;
    case Term::Op::Apply:
      if (term.args().empty()) {
        out += term.function();
      } else {
        nary(term.function().c_str());
      }
      return;
    case Term::Op::Eq: return nary("=");
    case Term::Op::Lt: return nary("<");
    case Term::Op::Ge: return nary(">=");
    case Term::Op::Not: return nary("not");
    case Term::Op::And:
    case Term::Op::Or: {
      const bool is_and = term.op() == Term::Op::And;
      if (term.args().empty()) {
        out += is_and ? "true" : "false";
      } else if (term.args().size() == 1) {
        write(out, term.args().front());
      } else {
        nary(is_and ? "and" : "or");
      }
      return;
    }
  }
}

}  // namespace

std::string to_smtlib(const Term& term) {
  std::string out;
  write(out, term);
  return out;
}

std::string to_smtlib(Sort sort) { return sort == Sort::Int ? "Int" : "Bool"; }

std::string emit_smtlib(const Formula& formula, const std::optional<std::string>& logic_override) {
  std::string out = "(set-logic " + logic_override.value_or(formula.logic_hint()) + ")\n";
  for (const auto& decl : formula.declarations()) {
    out += "(declare-fun " + decl.name + " (";
    for (std::size_t i = 0; i < decl.args.size(); ++i) {
      if (i) out += ' ';
      out += to_smtlib(decl.args[i]);
    }
    out += ") " + to_smtlib(decl.result) + ")\n";
  }
  for (const auto& assertion : formula.assertions()) {
    out += "(assert ";
    write(out, assertion);
    out += ")\n";
  }
  out += "(check-sat)\n";
  return out;
}

std::string SExpr::to_string() const {
  if (!is_list) return atom;
  std::string out = "(";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += items[i].to_string();
  }
  return out + ')';
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  SExpr read() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == ')') fail("unexpected ')'");
    if (text_[pos_] == '(') {
      ++pos_;
      SExpr list;
      list.is_list = true;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) fail("unbalanced '('");
        if (text_[pos_] == ')') {
          ++pos_;
          return list;
        }
        list.items.push_back(read());
      }
    }
    SExpr atom;
    const auto start = pos_;
    if (text_[pos_] == '"' || text_[pos_] == '|') {
      const char close = text_[pos_];
      ++pos_;
      while (pos_ < text_.size()) {
        if (text_[pos_] == close) {
          // SMT-LIB escapes a quote inside a string literal by doubling it.
          if (close == '"' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '"') {
            pos_ += 2;
            continue;
          }
          break;
        }
        ++pos_;
      }
      if (pos_ >= text_.size()) fail("unterminated literal");
      ++pos_;
    } else {
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
             text_[pos_] != '(' && text_[pos_] != ')') {
        ++pos_;
      }
    }
    atom.atom = std::string(text_.substr(start, pos_ - start));
    return atom;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SolverError("malformed s-expression (" + what + ") in: " + std::string(text_.substr(0, 200)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SExpr parse_sexpr(std::string_view text) {
  Reader reader(text);
  SExpr result = reader.read();
  if (!reader.at_end()) throw SolverError("trailing input after s-expression: " + std::string(text.substr(0, 200)));
  return result;
}

}  // namespace smtgi
