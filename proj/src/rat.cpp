#include "bcov/rat.hpp"

#include <cctype>

namespace bcov {

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool seen_digit = false, seen_slash = false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (std::isdigit(static_cast<unsigned char>(s[j]))) {
      seen_digit = true;
    } else if (s[j] == '/' && !seen_slash && seen_digit && j + 1 < s.size()) {
      seen_slash = true;
    } else {
      throw InputError("bad rational literal '" + s + "'");
    }
  }
  if (!seen_digit) throw InputError("bad rational literal '" + s + "'");
  Rat q;
  if (q.set_str(s, 10) != 0) throw InputError("bad rational literal '" + s + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

static Rat simplest_pos(const Rat& lo, const Rat& hi) {
  /* 0 < lo <= hi */
  Int fl = lo.get_num() / lo.get_den();  // floor, since lo > 0
  Int fh = hi.get_num() / hi.get_den();
  Rat rfl(fl);
  if (rfl == lo) return lo;  // lo integral
  if (fh > fl) return Rat(fl + 1);
  /* same integer part; recurse on fractional reciprocals */
  Rat a = Rat(1) / (hi - Rat(fl));
  Rat b = Rat(1) / (lo - Rat(fl));
  return Rat(fl) + Rat(1) / simplest_pos(a, b);
}

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
  if (lo > hi) throw std::invalid_argument("inverted interval");
  if (lo <= 0 && 0 <= hi) return Rat(0);
  if (hi < 0) return -simplest_rational_between(-hi, -lo);
  return simplest_pos(lo, hi);
}

}  // namespace bcov
