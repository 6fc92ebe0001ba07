#include <cfknot/parse.hpp>

#include <cctype>

#include <cfknot/errors.hpp>

namespace cfknot {

namespace {

[[noreturn]] void bad_token(const std::string& what, std::string_view token) {
  throw ParseError(what + ": '" + std::string(token) + "'");
}

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  const auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n';
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || is_sep(text[i])) {
      if (i > start) {
        tokens.push_back(text.substr(start, i - start));
      }
      start = i + 1;
    }
  }
  return tokens;
}

}  // namespace

Int parse_integer(std::string_view token) {
  std::size_t i = 0;
  if (i < token.size() && (token[i] == '+' || token[i] == '-')) {
    ++i;
  }
  if (i == token.size()) {
    bad_token("not an integer", token);
  }
  for (; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) {
      bad_token("not an integer", token);
    }
  }
  return Int(std::string(token));
}

ProjectiveRational parse_rational(std::string_view token) {
  const std::size_t slash = token.find('/');
  if (slash == std::string_view::npos) {
    return ProjectiveRational(parse_integer(token), 1);
  }
  if (token.find('/', slash + 1) != std::string_view::npos) {
    bad_token("not a fraction", token);
  }
  return ProjectiveRational(parse_integer(token.substr(0, slash)),
                            parse_integer(token.substr(slash + 1)));
}

std::vector<Int> parse_coefficients(std::string_view text) {
  std::vector<Int> coefficients;
  for (std::string_view token : split_tokens(text)) {
    coefficients.push_back(parse_integer(token));
  }
  return coefficients;
}

CurveClass parse_curve(std::string_view token) {
  if (token == "a") {
    return CurveClass::a();
  }
  if (token == "b") {
    return CurveClass::b();
  }
  return CurveClass::from_slope(parse_rational(token));
}

TwistWord parse_twist_word(std::string_view text) {
  TwistWord word;
  for (std::string_view token : split_tokens(text)) {
    const std::size_t caret = token.rfind('^');
    if (caret == std::string_view::npos || caret == 0 ||
        caret + 1 == token.size()) {
      bad_token("twist letter must look like curve^exponent", token);
    }
    word.letters.push_back({parse_curve(token.substr(0, caret)),
                            parse_integer(token.substr(caret + 1))});
  }
  return word;
}

}  // namespace cfknot
