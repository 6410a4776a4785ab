#include "fockdual/rational.hpp"

#include <ostream>

namespace fockdual {

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  size_t slash = s.find('/');
  auto to_ll = [](const std::string& t) {
    size_t pos = 0;
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("Rat::parse: trailing characters");
    return v;
  };
  if (slash == std::string::npos) return Rat(to_ll(s));
  return Rat(to_ll(s.substr(0, slash)), to_ll(s.substr(slash + 1)));
}

}  // namespace fockdual
