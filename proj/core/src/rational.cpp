#include "markovcat/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace markovcat {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  }
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_str();
}

}  // namespace markovcat
