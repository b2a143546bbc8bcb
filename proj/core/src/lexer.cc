#include "lexer.h"

#include <cctype>

#include "logicwb/error.h"

namespace logicwb::detail {

namespace {
bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
}  // namespace

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(s.substr(i, len)), i});
    i += len;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < s.size() && ident_char(s[j])) ++j;
      push(Tok::kIdent, j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      push(Tok::kNat, j - i);
      continue;
    }
    auto next_is = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
    switch (c) {
      case '~': push(Tok::kTilde, 1); break;
      case '&': push(Tok::kAmp, 1); break;
      case '|': push(Tok::kBar, 1); break;
      case '*': push(Tok::kStar, 1); break;
      case '#': push(Tok::kHash, 1); break;
      case '(': push(Tok::kLParen, 1); break;
      case ')': push(Tok::kRParen, 1); break;
      case ';': push(Tok::kSemi, 1); break;
      case ',': push(Tok::kComma, 1); break;
      case ':': push(Tok::kColon, 1); break;
      case '.': push(Tok::kDot, 1); break;
      case '=': push(Tok::kEquals, 1); break;
      case '>': push(Tok::kRAngle, 1); break;
      case ']': push(Tok::kRBracket, 1); break;
      case '-':
        if (next_is("->")) {
          push(Tok::kArrow, 2);
        } else {
          push(Tok::kMinus, 1);
        }
        break;
      case '<':
        if (next_is("<>")) {
          push(Tok::kDiamond, 2);
        } else if (next_is("<.>")) {
          push(Tok::kDiamondB, 3);
        } else {
          push(Tok::kLAngle, 1);
        }
        break;
      case '[':
        if (next_is("[]")) {
          push(Tok::kBox, 2);
        } else if (next_is("[.]")) {
          push(Tok::kBoxB, 3);
        } else {
          push(Tok::kLBracket, 1);
        }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

const char* describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kNat: return "number";
    case Tok::kTilde: return "'~'";
    case Tok::kAmp: return "'&'";
    case Tok::kBar: return "'|'";
    case Tok::kArrow: return "'->'";
    case Tok::kDiamond: return "'<>'";
    case Tok::kBox: return "'[]'";
    case Tok::kDiamondB: return "'<.>'";
    case Tok::kBoxB: return "'[.]'";
    case Tok::kLAngle: return "'<'";
    case Tok::kRAngle: return "'>'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kStar: return "'*'";
    case Tok::kHash: return "'#'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kSemi: return "';'";
    case Tok::kMinus: return "'-'";
    case Tok::kComma: return "','";
    case Tok::kColon: return "':'";
    case Tok::kDot: return "'.'";
    case Tok::kEquals: return "'='";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

const Token& TokenStream::expect(Tok t, const char* context) {
  if (!at(t)) {
    fail(std::string("expected ") + describe(t) + " " + context + ", found " +
         (peek().kind == Tok::kEnd ? std::string("end of input") : "'" + peek().text + "'"));
  }
  return next();
}

void TokenStream::fail(const std::string& message) const { throw ParseError(message, peek().pos); }

void TokenStream::expect_end() {
  if (!at(Tok::kEnd)) fail("unexpected '" + peek().text + "' after complete formula");
}

}  // namespace logicwb::detail
