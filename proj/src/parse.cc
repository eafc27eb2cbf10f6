// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fuzzym/parse.h"

#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fuzzym {
namespace {

enum class TokenKind {
  kIdent,
  kNumber,
  kLBrace,
  kRBrace,
  kLParen,
  kRParen,
  kComma,
  kSemi,
  kColon,
  kArrow,
  kAt,
  kAtAt,
  kBad,
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  SourceSpan span;
};

// Turns source text into tokens. Keywords are not reserved; they are
// ordinary identifiers matched by text where the grammar calls for them,
// so `rule` or `out` remain usable as plain symbols. Lexing stops at the
// first bad character; the parser reports it when reached, which keeps
// any earlier syntax error the first one diagnosed.
std::vector<Token> Lex(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  auto push = [&](TokenKind kind, std::size_t length) {
    tokens.push_back(Token{kind, std::string(text.substr(i, length)),
                           SourceSpan{line, column, static_cast<int>(length)}});
    advance(length);
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t len = 1;
      while (i + len < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i + len])) ||
              text[i + len] == '_')) {
        ++len;
      }
      push(TokenKind::kIdent, len);
      continue;
    }
    bool negative_number =
        c == '-' && i + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[i + 1]));
    if (std::isdigit(static_cast<unsigned char>(c)) || negative_number) {
      std::size_t len = c == '-' ? 2 : 1;
      auto digits = [&] {
        while (i + len < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i + len]))) {
          ++len;
        }
      };
      digits();
      if (i + len < text.size() && text[i + len] == '.') {
        ++len;
        digits();
      }
      if (i + len < text.size() && (text[i + len] == 'e' || text[i + len] == 'E')) {
        std::size_t mark = len;
        ++len;
        if (i + len < text.size() && (text[i + len] == '+' || text[i + len] == '-')) {
          ++len;
        }
        std::size_t before = len;
        digits();
        if (len == before) len = mark;  // bare `e` belongs to the next token
      }
      push(TokenKind::kNumber, len);
      continue;
    }
    switch (c) {
      case '{':
        push(TokenKind::kLBrace, 1);
        continue;
      case '}':
        push(TokenKind::kRBrace, 1);
        continue;
      case '(':
        push(TokenKind::kLParen, 1);
        continue;
      case ')':
        push(TokenKind::kRParen, 1);
        continue;
      case ',':
        push(TokenKind::kComma, 1);
        continue;
      case ';':
        push(TokenKind::kSemi, 1);
        continue;
      case ':':
        push(TokenKind::kColon, 1);
        continue;
      case '@':
        if (i + 1 < text.size() && text[i + 1] == '@') {
          push(TokenKind::kAtAt, 2);
        } else {
          push(TokenKind::kAt, 1);
        }
        continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(TokenKind::kArrow, 2);
          continue;
        }
        break;
      default:
        break;
    }
    push(TokenKind::kBad, 1);
    break;
  }
  tokens.push_back(
      Token{TokenKind::kEnd, "end of input", SourceSpan{line, column, 1}});
  return tokens;
}

std::string Describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::kEnd:
      return "end of input";
    case TokenKind::kNumber:
      return token.text;
    default:
      return "'" + token.text + "'";
  }
}

// Recursive-descent parser over the token stream. The first failure is
// recorded and every later Expect degrades to a no-op, so callers can
// parse a whole production and check Failed() once.
class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lex(text)) {}

  bool Failed() const { return error_.has_value(); }
  const std::optional<ParseError>& error() const { return error_; }

  const Token& Peek() const { return tokens_[pos_]; }

  Token Take() {
    Token token = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return token;
  }

  void Fail(const Token& at, std::string expected) {
    if (!error_) {
      error_ = ParseError{at.span, std::move(expected), Describe(at)};
    }
  }

  bool At(TokenKind kind) const { return Peek().kind == kind; }

  bool AtKeyword(std::string_view word) const {
    return Peek().kind == TokenKind::kIdent && Peek().text == word;
  }

  bool AtSym() const {
    return At(TokenKind::kIdent) || At(TokenKind::kNumber);
  }

  Token Expect(TokenKind kind, std::string expected) {
    if (Failed()) return Token{};
    if (!At(kind)) {
      Fail(Peek(), std::move(expected));
      return Token{};
    }
    return Take();
  }

  Token ExpectKeyword(std::string_view word) {
    if (Failed()) return Token{};
    if (!AtKeyword(word)) {
      Fail(Peek(), "'" + std::string(word) + "'");
      return Token{};
    }
    return Take();
  }

  Token ExpectIdent(std::string expected) {
    return Expect(TokenKind::kIdent, std::move(expected));
  }

  // Symbols may be identifiers or bare numbers, e.g. tape symbols `0`, `1`.
  Token ExpectSym(std::string expected) {
    if (Failed()) return Token{};
    if (!AtSym()) {
      Fail(Peek(), std::move(expected));
      return Token{};
    }
    return Take();
  }

  Degree ExpectDegree() {
    if (Failed()) return Degree::Zero();
    const Token& token = Peek();
    if (token.kind != TokenKind::kNumber) {
      Fail(token, "a degree in [0,1]");
      return Degree::Zero();
    }
    const char* begin = token.text.c_str();
    char* end = nullptr;
    double value = std::strtod(begin, &end);
    if (end != begin + token.text.size() || value < 0.0 || value > 1.0) {
      Fail(token, "a degree in [0,1]");
      return Degree::Zero();
    }
    Take();
    return Degree(value);
  }

  std::size_t ExpectMultiplicity() {
    if (Failed()) return 0;
    const Token& token = Peek();
    bool all_digits = token.kind == TokenKind::kNumber &&
                      token.text.find_first_not_of("0123456789") ==
                          std::string::npos;
    if (!all_digits) {
      Fail(token, "a positive integer count");
      return 0;
    }
    if (token.text.find_first_not_of('0') == std::string::npos) {
      Fail(token, "a positive integer count, not 0");
      return 0;
    }
    std::size_t value = std::strtoull(token.text.c_str(), nullptr, 10);
    Take();
    return value;
  }

  void ExpectEnd() {
    if (Failed()) return;
    if (!At(TokenKind::kEnd)) Fail(Peek(), "end of input");
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::optional<ParseError> error_;
};

NormKind ParseNormClause(Parser& p) {
  p.ExpectKeyword("norm");
  p.Expect(TokenKind::kColon, "':'");
  if (p.Failed()) return NormKind::kMinimum;
  const Token& token = p.Peek();
  if (token.kind == TokenKind::kIdent) {
    if (auto kind = NormFromName(token.text)) {
      p.Take();
      p.Expect(TokenKind::kSemi, "';'");
      return *kind;
    }
  }
  p.Fail(token, "'min', 'product', or 'lukasiewicz'");
  return NormKind::kMinimum;
}

Move ParseMoveLetter(Parser& p) {
  if (p.Failed()) return Move::kNone;
  const Token& token = p.Peek();
  if (token.kind == TokenKind::kIdent) {
    if (token.text == "L") {
      p.Take();
      return Move::kLeft;
    }
    if (token.text == "N") {
      p.Take();
      return Move::kNone;
    }
    if (token.text == "R") {
      p.Take();
      return Move::kRight;
    }
  }
  p.Fail(token, "'L', 'N', or 'R'");
  return Move::kNone;
}

// states/input/tape style clause: keyword ':' item+ ';'. Returns the item
// tokens so callers can keep spans.
std::vector<Token> ParseSymListClause(Parser& p, std::string_view keyword,
                                      bool idents_only,
                                      const std::string& item_name) {
  std::vector<Token> items;
  p.ExpectKeyword(keyword);
  p.Expect(TokenKind::kColon, "':'");
  while (!p.Failed() && (idents_only ? p.At(TokenKind::kIdent) : p.AtSym())) {
    items.push_back(p.Take());
  }
  if (!p.Failed() && items.empty()) {
    p.Fail(p.Peek(), item_name);
    return items;
  }
  p.Expect(TokenKind::kSemi, "';'");
  return items;
}

ParseOutcome<Machine> ParseFtmImpl(std::string_view text) {
  Parser p(text);
  ParseOutcome<Machine> out;
  Machine machine;

  p.ExpectKeyword("machine");
  machine.name = p.ExpectIdent("a machine name").text;
  p.Expect(TokenKind::kLBrace, "'{'");

  for (const Token& t :
       ParseSymListClause(p, "states", /*idents_only=*/true, "a state name")) {
    machine.states.insert(t.text);
  }
  for (const Token& t :
       ParseSymListClause(p, "input", /*idents_only=*/false, "a symbol")) {
    machine.input_alphabet.insert(t.text);
  }
  for (const Token& t :
       ParseSymListClause(p, "tape", /*idents_only=*/false, "a symbol")) {
    machine.tape_alphabet.insert(t.text);
  }

  p.ExpectKeyword("blank");
  p.Expect(TokenKind::kColon, "':'");
  machine.blank = p.ExpectSym("a symbol").text;
  p.Expect(TokenKind::kSemi, "';'");

  p.ExpectKeyword("start");
  p.Expect(TokenKind::kColon, "':'");
  machine.start_state = p.ExpectIdent("a state name").text;
  p.Expect(TokenKind::kSemi, "';'");

  p.ExpectKeyword("final");
  p.Expect(TokenKind::kColon, "':'");
  machine.final_state = p.ExpectIdent("a state name").text;
  p.Expect(TokenKind::kSemi, "';'");

  machine.norm = ParseNormClause(p);

  p.ExpectKeyword("delta");
  p.Expect(TokenKind::kLBrace, "'{'");
  std::map<Transition, SourceSpan> first_seen;
  while (!p.Failed() && p.At(TokenKind::kLParen)) {
    Token open = p.Take();
    Transition t;
    t.from_state = p.ExpectIdent("a state name").text;
    p.Expect(TokenKind::kComma, "','");
    t.read = p.ExpectSym("a symbol").text;
    p.Expect(TokenKind::kRParen, "')'");
    p.Expect(TokenKind::kArrow, "'->'");
    p.Expect(TokenKind::kLParen, "'('");
    t.to_state = p.ExpectIdent("a state name").text;
    p.Expect(TokenKind::kComma, "','");
    t.write = p.ExpectSym("a symbol").text;
    p.Expect(TokenKind::kComma, "','");
    t.move = ParseMoveLetter(p);
    p.Expect(TokenKind::kRParen, "')'");
    Degree degree = Degree::One();
    if (p.At(TokenKind::kAt)) {
      p.Take();
      degree = p.ExpectDegree();
    }
    p.Expect(TokenKind::kSemi, "';'");
    if (p.Failed()) break;
    auto [it, inserted] = machine.transitions.emplace(t, degree);
    if (inserted) {
      first_seen.emplace(t, open.span);
    } else if (it->second != degree) {
      out.violations.push_back(Violation{
          "transition " + FormatTransition(t) +
              " listed twice with conflicting degrees",
          {first_seen.at(t), open.span}});
    }
  }
  p.Expect(TokenKind::kRBrace, "'(' or '}'");
  p.Expect(TokenKind::kRBrace, "'}'");
  p.ExpectEnd();

  if (p.Failed()) {
    out.violations.clear();
    out.error = p.error();
    return out;
  }
  for (Violation& v : ValidateMachine(machine)) {
    out.violations.push_back(std::move(v));
  }
  out.value = std::move(machine);
  return out;
}

FuzzyMultiset ParseMultisetLiteralBody(Parser& p) {
  FuzzyMultiset contents;
  std::set<std::string> listed;
  p.Expect(TokenKind::kLBrace, "'{'");
  if (!p.Failed() && !p.At(TokenKind::kRBrace)) {
    while (!p.Failed()) {
      Token sym = p.ExpectSym("a symbol");
      if (!p.Failed() && !listed.insert(sym.text).second) {
        p.Fail(sym, "a symbol not already listed");
      }
      p.Expect(TokenKind::kColon, "':'");
      std::size_t mult = p.ExpectMultiplicity();
      p.Expect(TokenKind::kAt, "'@'");
      Degree grade = p.ExpectDegree();
      if (p.Failed()) break;
      contents.Set(sym.text, mult, grade);
      if (p.At(TokenKind::kComma)) {
        p.Take();
        continue;
      }
      break;
    }
  }
  p.Expect(TokenKind::kRBrace, "'}'");
  return contents;
}

Rule ParseRuleClause(Parser& p) {
  Rule rule;
  p.ExpectKeyword("rule");
  p.Expect(TokenKind::kColon, "':'");
  while (!p.Failed() && p.AtSym()) {
    ++rule.lhs[p.Take().text];
  }
  if (!p.Failed() && rule.lhs.empty()) {
    p.Fail(p.Peek(), "a symbol");
  }
  p.Expect(TokenKind::kArrow, "'->'");
  while (!p.Failed()) {
    RuleProduction production;
    production.symbol = p.ExpectSym("a symbol").text;
    if (p.At(TokenKind::kLParen)) {
      p.Take();
      if (p.AtKeyword("here")) {
        p.Take();
        production.target.kind = RuleTarget::Kind::kHere;
      } else if (p.AtKeyword("out")) {
        p.Take();
        production.target.kind = RuleTarget::Kind::kOut;
      } else if (p.AtKeyword("in")) {
        p.Take();
        production.target.kind = RuleTarget::Kind::kIn;
        production.target.child_id = p.ExpectIdent("a membrane name").text;
      } else {
        p.Fail(p.Peek(), "'here', 'out', or 'in'");
      }
      p.Expect(TokenKind::kRParen, "')'");
    }
    if (p.At(TokenKind::kAt)) {
      p.Take();
      production.grade = p.ExpectDegree();
    }
    if (p.Failed()) break;
    rule.rhs.push_back(std::move(production));
    if (p.AtSym()) continue;
    break;
  }
  if (p.At(TokenKind::kAtAt)) {
    p.Take();
    rule.rule_degree = p.ExpectDegree();
  }
  p.Expect(TokenKind::kSemi, "';'");
  return rule;
}

// Parses one membrane block and its nested children. Every membrane's id
// token lands in `id_tokens` in parse order so the caller can report
// duplicate ids with both spans.
Compartment ParseMembrane(Parser& p, std::vector<Token>& id_tokens) {
  Compartment compartment;
  p.ExpectKeyword("membrane");
  Token id_token = p.ExpectIdent("a membrane name");
  compartment.id = id_token.text;
  if (!p.Failed()) id_tokens.push_back(id_token);
  p.Expect(TokenKind::kLBrace, "'{'");

  p.ExpectKeyword("contents");
  p.Expect(TokenKind::kColon, "':'");
  compartment.contents = ParseMultisetLiteralBody(p);
  p.Expect(TokenKind::kSemi, "';'");

  // Clause order is fixed: contents, then rules, then child membranes.
  while (!p.Failed() && p.AtKeyword("rule")) {
    Rule rule = ParseRuleClause(p);
    if (p.Failed()) break;
    compartment.rules.push_back(std::move(rule));
  }
  while (!p.Failed() && p.AtKeyword("membrane")) {
    Compartment child = ParseMembrane(p, id_tokens);
    if (p.Failed()) break;
    compartment.children.push_back(std::move(child));
  }
  if (!p.Failed() && !p.At(TokenKind::kRBrace)) {
    p.Fail(p.Peek(), "'rule', 'membrane', or '}'");
  }
  p.Expect(TokenKind::kRBrace, "'}'");
  return compartment;
}

// The `in` targets of a compartment's rules must name direct children.
// Checked after the whole membrane tree is built so spans are available.
void CheckInTargets(const Compartment& compartment,
                    const std::map<std::string, SourceSpan>& membrane_spans,
                    std::vector<Violation>& violations) {
  std::set<std::string> child_ids;
  for (const Compartment& child : compartment.children) {
    child_ids.insert(child.id);
  }
  for (const Rule& rule : compartment.rules) {
    for (const RuleProduction& production : rule.rhs) {
      if (production.target.kind == RuleTarget::Kind::kIn &&
          !child_ids.contains(production.target.child_id)) {
        Violation v;
        v.message = "rule in membrane '" + compartment.id + "' sends '" +
                    production.symbol + "' in '" + production.target.child_id +
                    "', which is not a direct child membrane";
        auto it = membrane_spans.find(compartment.id);
        if (it != membrane_spans.end()) v.spans.push_back(it->second);
        violations.push_back(std::move(v));
      }
    }
  }
  for (const Compartment& child : compartment.children) {
    CheckInTargets(child, membrane_spans, violations);
  }
}

ParseOutcome<PSystem> ParseFpsImpl(std::string_view text) {
  Parser p(text);
  ParseOutcome<PSystem> out;
  PSystem system;

  p.ExpectKeyword("psystem");
  system.name = p.ExpectIdent("a system name").text;
  p.Expect(TokenKind::kLBrace, "'{'");
  system.norm = ParseNormClause(p);

  p.ExpectKeyword("output");
  p.Expect(TokenKind::kColon, "':'");
  Token output_token = p.ExpectIdent("a membrane name");
  system.output_id = output_token.text;
  p.Expect(TokenKind::kSemi, "';'");

  std::vector<Token> id_tokens;
  system.skin = ParseMembrane(p, id_tokens);
  p.Expect(TokenKind::kRBrace, "'}'");
  p.ExpectEnd();

  if (p.Failed()) {
    out.violations.clear();
    out.error = p.error();
    return out;
  }

  std::map<std::string, SourceSpan> membrane_spans;
  for (const Token& id_token : id_tokens) {
    auto [it, inserted] = membrane_spans.emplace(id_token.text, id_token.span);
    if (!inserted) {
      out.violations.push_back(
          Violation{"duplicate membrane id '" + id_token.text + "'",
                    {it->second, id_token.span}});
    }
  }
  if (!membrane_spans.contains(system.output_id)) {
    out.violations.push_back(
        Violation{"output compartment '" + system.output_id +
                      "' does not name any membrane",
                  {output_token.span}});
  }
  CheckInTargets(system.skin, membrane_spans, out.violations);
  if (out.violations.empty()) {
    // Belt check: the span-aware checks above mirror ValidateSystem, and
    // the grammar rules out its remaining cases (empty or zero-copy lhs).
    for (Violation& v : ValidateSystem(system)) {
      out.violations.push_back(std::move(v));
    }
  }
  out.value = std::move(system);
  return out;
}

ParseOutcome<FuzzySet> ParsePairSetLiteral(Parser& p) {
  ParseOutcome<FuzzySet> out;
  FuzzySet set;
  p.Expect(TokenKind::kLBrace, "'{'");
  if (!p.Failed() && !p.At(TokenKind::kRBrace)) {
    while (!p.Failed()) {
      Token sym = p.ExpectSym("a symbol");
      if (!p.Failed() && set.universe().contains(sym.text)) {
        p.Fail(sym, "a symbol not already listed");
      }
      p.Expect(TokenKind::kAt, "'@'");
      Degree degree = p.ExpectDegree();
      if (p.Failed()) break;
      set.Set(sym.text, degree);
      if (p.At(TokenKind::kComma)) {
        p.Take();
        continue;
      }
      break;
    }
  }
  p.Expect(TokenKind::kRBrace, "'}'");
  p.ExpectEnd();
  if (p.Failed()) {
    out.error = p.error();
    return out;
  }
  out.value = std::move(set);
  return out;
}

// Tuple sugar: `fuzzy set (2,0.3), (6,0.5)` with an optional trailing
// semicolon, equivalent to `{2@0.3, 6@0.5}`.
ParseOutcome<FuzzySet> ParseTupleSetLiteral(Parser& p) {
  ParseOutcome<FuzzySet> out;
  FuzzySet set;
  p.ExpectKeyword("fuzzy");
  p.ExpectKeyword("set");
  while (!p.Failed()) {
    p.Expect(TokenKind::kLParen, "'('");
    Token sym = p.ExpectSym("a symbol");
    if (!p.Failed() && set.universe().contains(sym.text)) {
      p.Fail(sym, "a symbol not already listed");
    }
    p.Expect(TokenKind::kComma, "','");
    Degree degree = p.ExpectDegree();
    p.Expect(TokenKind::kRParen, "')'");
    if (p.Failed()) break;
    set.Set(sym.text, degree);
    if (p.At(TokenKind::kComma)) {
      p.Take();
      continue;
    }
    break;
  }
  if (p.At(TokenKind::kSemi)) p.Take();
  p.ExpectEnd();
  if (p.Failed()) {
    out.error = p.error();
    return out;
  }
  out.value = std::move(set);
  return out;
}

}  // namespace

ParseOutcome<Machine> ParseFtm(std::string_view text) {
  return ParseFtmImpl(text);
}

ParseOutcome<PSystem> ParseFps(std::string_view text) {
  return ParseFpsImpl(text);
}

ParseOutcome<FuzzySet> ParseFuzzySetLiteral(std::string_view text) {
  Parser p(text);
  if (p.AtKeyword("fuzzy")) return ParseTupleSetLiteral(p);
  return ParsePairSetLiteral(p);
}

ParseOutcome<FuzzyMultiset> ParseFuzzyMultisetLiteral(std::string_view text) {
  Parser p(text);
  ParseOutcome<FuzzyMultiset> out;
  FuzzyMultiset contents = ParseMultisetLiteralBody(p);
  p.ExpectEnd();
  if (p.Failed()) {
    out.error = p.error();
    return out;
  }
  out.value = std::move(contents);
  return out;
}

std::string_view DescriptionKeyword(std::string_view text) {
  std::vector<Token> tokens = Lex(text);
  if (!tokens.empty() && tokens.front().kind == TokenKind::kIdent) {
    if (tokens.front().text == "machine") return "machine";
    if (tokens.front().text == "psystem") return "psystem";
  }
  return {};
}

bool LexesAsIdentifier(std::string_view text) {
  std::vector<Token> tokens = Lex(text);
  return tokens.size() == 2 && tokens[0].kind == TokenKind::kIdent &&
         tokens[0].text == text;
}

bool LexesAsSymbol(std::string_view text) {
  std::vector<Token> tokens = Lex(text);
  return tokens.size() == 2 &&
         (tokens[0].kind == TokenKind::kIdent ||
          tokens[0].kind == TokenKind::kNumber) &&
         tokens[0].text == text;
}

}  // namespace fuzzym
