#include "posetlab/dsl.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "posetlab/error.hpp"

namespace posetlab {

namespace {

struct Token {
  enum class Kind { kIdent, kNumber, kSymbol, kEnd };
  Kind kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip();
      if (pos_ >= src_.size()) {
        out.push_back({Token::Kind::kEnd, "", line_, col_});
        return out;
      }
      char c = src_[pos_];
      int l = line_, co = col_;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) advance();
        out.push_back({Token::Kind::kIdent, std::string(src_.substr(start, pos_ - start)), l, co});
      } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        std::size_t start = pos_;
        advance();
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
        out.push_back({Token::Kind::kNumber, std::string(src_.substr(start, pos_ - start)), l, co});
      } else if (c == '<' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
        advance();
        advance();
        out.push_back({Token::Kind::kSymbol, "<=", l, co});
      } else if (c == '{' || c == '}' || c == ';' || c == '<') {
        advance();
        out.push_back({Token::Kind::kSymbol, std::string(1, c), l, co});
      } else {
        throw ParseError(l, co, std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  RawPresentation run() {
    RawPresentation raw;
    keyword("poset");
    raw.name = ident();
    symbol("{");
    while (!peek_symbol("}")) {
      const Token& t = peek();
      if (t.kind != Token::Kind::kIdent) fail(t, "expected a section keyword");
      if (t.text == "base" || t.text == "ladder") {
        next();
        auto& ids = t.text == "base" ? raw.base_ids : raw.ladder_ids;
        ids.push_back(ident());
        while (!peek_symbol(";")) ids.push_back(ident());
        symbol(";");
      } else if (t.text == "order") {
        next();
        symbol("{");
        while (!peek_symbol("}")) {
          std::string lo = ident();
          symbol("<");
          std::string hi = ident();
          symbol(";");
          raw.order.emplace_back(std::move(lo), std::move(hi));
        }
        symbol("}");
      } else if (t.text == "rel") {
        next();
        symbol("{");
        while (!peek_symbol("}")) {
          raw.rels.push_back(relstmt());
          symbol(";");
        }
        symbol("}");
      } else {
        fail(t, "unknown section '" + t.text + "'");
      }
    }
    symbol("}");
    if (peek().kind != Token::Kind::kEnd) fail(peek(), "trailing input after poset");
    return raw;
  }

 private:
  RelStmt relstmt() {
    RelStmt r;
    r.lhs = ident();
    symbol("<=");
    r.rhs = ident();
    const Token& k = next();
    if (k.kind != Token::Kind::kIdent) fail(k, "expected from/upto/always/shift/tail");
    if (k.text == "always") {
      r.kind = RelStmt::Kind::kAlways;
    } else if (k.text == "from" || k.text == "upto" || k.text == "tail") {
      r.kind = k.text == "from" ? RelStmt::Kind::kFrom : k.text == "upto" ? RelStmt::Kind::kUpto : RelStmt::Kind::kTail;
      r.value = number(false);
    } else if (k.text == "shift") {
      r.kind = RelStmt::Kind::kShift;
      r.value = number(true);
    } else {
      fail(k, "expected from/upto/always/shift/tail, got '" + k.text + "'");
    }
    return r;
  }

  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.col, msg);
  }
  const Token& peek() const { return toks_[i_]; }
  const Token& next() {
    const Token& t = toks_[i_];
    if (t.kind != Token::Kind::kEnd) ++i_;
    return t;
  }
  bool peek_symbol(const char* s) const {
    return peek().kind == Token::Kind::kSymbol && peek().text == s;
  }
  void symbol(const char* s) {
    const Token& t = next();
    if (t.kind != Token::Kind::kSymbol || t.text != s)
      fail(t, std::string("expected '") + s + "'" + (t.kind == Token::Kind::kEnd ? " before end of input" : ", got '" + t.text + "'"));
  }
  void keyword(const char* s) {
    const Token& t = next();
    if (t.kind != Token::Kind::kIdent || t.text != s) fail(t, std::string("expected '") + s + "'");
  }
  std::string ident() {
    const Token& t = next();
    if (t.kind != Token::Kind::kIdent) fail(t, "expected identifier");
    return t.text;
  }
  Index number(bool allow_negative) {
    const Token& t = next();
    if (t.kind != Token::Kind::kNumber) fail(t, "expected number");
    Index v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc()) fail(t, "number out of range");
    if (v < 0 && !allow_negative) fail(t, "expected a natural number");
    return v;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

void check_ids(const RawPresentation& raw) {
  std::set<std::string> base, ladder;
  for (const auto& b : raw.base_ids)
    if (!base.insert(b).second) throw Error(ErrorKind::kDuplicateId, b);
  for (const auto& l : raw.ladder_ids)
    if (!ladder.insert(l).second || base.count(l)) throw Error(ErrorKind::kDuplicateId, l);
  auto known = [&](const std::string& id) {
    if (!base.count(id) && !ladder.count(id)) throw Error(ErrorKind::kUnknownId, id);
  };
  for (const auto& [lo, hi] : raw.order) {
    known(lo);
    known(hi);
  }
  for (const auto& r : raw.rels) {
    known(r.lhs);
    known(r.rhs);
  }
}

}  // namespace

RawPresentation parse_presentation(std::string_view text) {
  RawPresentation raw = Parser(Lexer(text).run()).run();
  check_ids(raw);
  return raw;
}

LadderPresentation parse_and_validate(std::string_view text) {
  return LadderPresentation::validate(parse_presentation(text));
}

std::string print_presentation(const RawPresentation& raw) {
  std::ostringstream os;
  os << "poset " << raw.name << " {\n";
  auto list = [&](const char* kw, const std::vector<std::string>& ids) {
    if (ids.empty()) return;
    os << "  " << kw;
    for (const auto& id : ids) os << " " << id;
    os << ";\n";
  };
  list("base", raw.base_ids);
  list("ladder", raw.ladder_ids);
  if (!raw.order.empty()) {
    os << "  order {";
    for (const auto& [lo, hi] : raw.order) os << " " << lo << "<" << hi << ";";
    os << " }\n";
  }
  if (!raw.rels.empty()) {
    os << "  rel {\n";
    for (const auto& r : raw.rels) {
      os << "    " << r.lhs << " <= " << r.rhs;
      switch (r.kind) {
        case RelStmt::Kind::kFrom: os << " from " << r.value; break;
        case RelStmt::Kind::kUpto: os << " upto " << r.value; break;
        case RelStmt::Kind::kAlways: os << " always"; break;
        case RelStmt::Kind::kShift: os << " shift " << r.value; break;
        case RelStmt::Kind::kTail: os << " tail " << r.value; break;
      }
      os << ";\n";
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const LadderPresentation& p, Index depth) {
  auto pts = p.scan_points(depth);
  std::ostringstream os;
  os << "digraph \"" << p.name() << "\" {\n  rankdir=BT;\n";
  for (Elem e : pts) os << "  \"" << p.format(e) << "\";\n";
  for (Elem x : pts)
    for (Elem y : pts) {
      if (!p.less(x, y)) continue;
      bool cover = true;
      for (Elem z : pts)
        if (p.less(x, z) && p.less(z, y)) {
          cover = false;
          break;
        }
      if (cover) os << "  \"" << p.format(x) << "\" -> \"" << p.format(y) << "\";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace posetlab
