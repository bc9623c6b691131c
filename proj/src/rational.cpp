#include "symbreak/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace symbreak {

namespace {

std::int64_t parse_int(const std::string& s) {
  if (s.empty()) throw DomainError("empty integer token");
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') pos = 1;
  if (pos == s.size()) throw DomainError("sign without digits: '" + s + "'");
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw DomainError("not an integer: '" + s + "'");
  }
  return std::strtoll(s.c_str(), nullptr, 10);
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const std::int64_t n = parse_int(text.substr(0, slash));
  const std::int64_t d = parse_int(text.substr(slash + 1));
  if (d == 0) throw DomainError("zero denominator in '" + text + "'");
  return Rational(n, d);
}

std::string vec_str(const RationalVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].str();
  }
  return out;
}

RationalVec parse_vec(const std::string& text) {
  RationalVec out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    // trim spaces
    std::size_t a = tok.find_first_not_of(" \t");
    std::size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw DomainError("empty vector entry");
    out.push_back(Rational::parse(tok.substr(a, b - a + 1)));
  }
  return out;
}

bool strictly_decreasing(const RationalVec& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (!(v[i] > v[i + 1])) return false;
  return true;
}

bool weakly_decreasing(const RationalVec& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

bool on_lattice(const RationalVec& v, const Rational& offset) {
  for (const auto& e : v)
    if (!(e - offset).is_integer()) return false;
  return true;
}

}  // namespace symbreak
