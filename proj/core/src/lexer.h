#ifndef LOGICWB_SRC_LEXER_H_
#define LOGICWB_SRC_LEXER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace logicwb::detail {

enum class Tok {
  kIdent,
  kNat,
  kTilde,
  kAmp,
  kBar,
  kArrow,
  kDiamond,   // <>
  kBox,       // []
  kDiamondB,  // <.>
  kBoxB,      // [.]
  kLAngle,
  kRAngle,
  kLBracket,
  kRBracket,
  kStar,
  kHash,
  kLParen,
  kRParen,
  kSemi,
  kMinus,
  kComma,
  kColon,
  kDot,
  kEquals,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

// Throws ParseError on characters outside the shared token set.
std::vector<Token> tokenize(std::string_view text);

const char* describe(Tok t);

// Cursor over a token vector with error reporting.
class TokenStream {
 public:
  explicit TokenStream(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  bool at(Tok t) const { return peek().kind == t; }
  bool accept(Tok t) {
    if (!at(t)) return false;
    ++pos_;
    return true;
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  const Token& expect(Tok t, const char* context);
  [[noreturn]] void fail(const std::string& message) const;
  void expect_end();

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace logicwb::detail

#endif  // LOGICWB_SRC_LEXER_H_
