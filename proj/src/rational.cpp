#include "bdtriad/rational.hpp"

#include "bdtriad/errors.hpp"

#include <algorithm>
#include <cctype>

namespace bdtriad {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  if (slash != std::string_view::npos && den.front() == '0')
    throw ParseError("malformed rational '" + std::string(text) + "': denominator must start with 1-9");
  // Leading zeros would otherwise select octal parsing.
  std::string_view digits = num;
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  Integer p{std::string(digits)};
  const Integer q{std::string(den)};
  if (negative) p = -p;
  return Rational(p, q);
}

std::string to_string(const Rational& value) {
  const Integer den = denominator_of(value);
  if (den == 1) return numerator_of(value).str();
  return numerator_of(value).str() + "/" + den.str();
}

RMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Index>(rows.size());
  const auto c = r == 0 ? Index{0} : static_cast<Index>(rows.begin()->size());
  RMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw DimensionError("from_rows: ragged rows");
    Index j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

}  // namespace bdtriad
