#include "bcov/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bcov {

MPoly MPoly::constant(int nvars, const Rat& c) {
  MPoly p(nvars);
  p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
  MPoly p(nvars);
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.add_term(e, Rat(1));
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

void MPoly::add_term(const std::vector<int>& exps, const Rat& c) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(nvars_);
  std::vector<int> e(static_cast<std::size_t>(nvars_));
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int k = 0; k < nvars_; ++k)
        e[static_cast<std::size_t>(k)] =
            e1[static_cast<std::size_t>(k)] + e2[static_cast<std::size_t>(k)];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MPoly MPoly::operator*(const Rat& c) const {
  MPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

MPoly MPoly::exact_div(const MPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  MPoly rem(*this), q(nvars_);
  const auto& dl = *d.terms_.rbegin();  // lex-leading term of divisor
  std::vector<int> e(static_cast<std::size_t>(nvars_));
  while (!rem.is_zero()) {
    const auto& rl = *rem.terms_.rbegin();
    for (int k = 0; k < nvars_; ++k) {
      int diff = rl.first[static_cast<std::size_t>(k)] - dl.first[static_cast<std::size_t>(k)];
      if (diff < 0) throw std::domain_error("non-exact polynomial division");
      e[static_cast<std::size_t>(k)] = diff;
    }
    Rat c = rl.second / dl.second;
    MPoly t(nvars_);
    t.add_term(e, c);
    q = q + t;
    rem = rem - t * d;
  }
  return q;
}

Rat MPoly::eval(const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("eval arity mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int k = 0; k < nvars_; ++k)
      for (int j = 0; j < e[static_cast<std::size_t>(k)]; ++j)
        t *= x[static_cast<std::size_t>(k)];
    acc += t;
  }
  return acc;
}

QInterval MPoly::eval(const std::vector<QInterval>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("eval arity mismatch");
  QInterval acc = QInterval::point(Rat(0));
  for (const auto& [e, c] : terms_) {
    QInterval t = QInterval::point(c);
    for (int k = 0; k < nvars_; ++k) {
      int p = e[static_cast<std::size_t>(k)];
      if (p > 0) t = t * x[static_cast<std::size_t>(k)].pow(p);
    }
    acc = acc + t;
  }
  return acc;
}

MPoly MPoly::substitute(const std::vector<MPoly>& subs) const {
  if (static_cast<int>(subs.size()) != nvars_)
    throw std::invalid_argument("substitute arity mismatch");
  int m = subs.empty() ? 0 : subs[0].nvars();
  MPoly acc(m);
  for (const auto& [e, c] : terms_) {
    MPoly t = MPoly::constant(m, c);
    for (int k = 0; k < nvars_; ++k)
      for (int j = 0; j < e[static_cast<std::size_t>(k)]; ++j)
        t = t * subs[static_cast<std::size_t>(k)];
    acc = acc + t;
  }
  return acc;
}

std::string MPoly::str(const std::string& stem) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rat& c = it->second;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat ac = rat_abs(c);
    bool any_var = std::any_of(it->first.begin(), it->first.end(), [](int k) { return k > 0; });
    if (ac != 1 || !any_var) os << rat_str(ac);
    bool need_star = (ac != 1);
    for (int k = 0; k < nvars_; ++k) {
      int p = it->first[static_cast<std::size_t>(k)];
      if (p == 0) continue;
      if (need_star) os << "*";
      os << stem << (k + 1);
      if (p > 1) os << "^" << p;
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

MPoly elementary_symmetric_poly(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("elementary symmetric index out of range");
  std::vector<MPoly> e(static_cast<std::size_t>(k + 1), MPoly(n));
  e[0] = MPoly::constant(n, Rat(1));
  for (int i = 0; i < n; ++i) {
    MPoly xi = MPoly::variable(n, i);
    for (int j = std::min(k, i + 1); j >= 1; --j)
      e[static_cast<std::size_t>(j)] =
          e[static_cast<std::size_t>(j)] + xi * e[static_cast<std::size_t>(j - 1)];
  }
  return e[static_cast<std::size_t>(k)];
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;
  int nvars;
  const std::string& stem;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw InputError("poly parse error at position " + std::to_string(i) + ": " + what);
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly a = term();
    while (true) {
      skip();
      if (eat('+')) a = a + term();
      else if (eat('-')) a = a - term();
      else return a;
    }
  }
  MPoly term() {
    MPoly a = power();
    while (true) {
      skip();
      if (eat('*')) {
        a = a * power();
      } else if (i < s.size() && (s[i] == '(' || std::isalpha(static_cast<unsigned char>(s[i])))) {
        a = a * power();  // implicit multiplication: 3x1, x1(x2+1)
      } else {
        return a;
      }
    }
  }
  MPoly power() {
    skip();
    if (eat('-')) return -power();  // -x1^2 means -(x1^2)
    MPoly base = atom();
    skip();
    if (eat('^')) {
      skip();
      std::size_t j = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (j == i) fail("expected integer exponent");
      int e = std::stoi(s.substr(j, i - j));
      MPoly acc = MPoly::constant(base.nvars(), Rat(1));
      for (int k = 0; k < e; ++k) acc = acc * base;
      return acc;
    }
    return base;
  }
  MPoly atom() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    if (eat('(')) {
      MPoly a = expr();
      if (!eat(')')) fail("expected ')'");
      return a;
    }
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == '/') {
        ++i;
        std::size_t k = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (k == i) fail("expected denominator digits");
        return MPoly::constant(nvars, rat_parse(s.substr(j, i - j)));
      }
      return MPoly::constant(nvars, rat_parse(s.substr(j, i - j)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
      std::string name = s.substr(j, i - j);
      if (name != stem) fail("unknown variable stem '" + name + "'");
      std::size_t k = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (k == i) fail("variable needs an index, e.g. " + stem + "1");
      int idx = std::stoi(s.substr(k, i - k));
      if (idx < 1 || idx > nvars) fail("variable index out of range: " + name + std::to_string(idx));
      return MPoly::variable(nvars, idx - 1);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

MPoly parse_poly(const std::string& text, int nvars, const std::string& stem) {
  Parser p{text, 0, nvars, stem};
  MPoly out = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return out;
}

}  // namespace bcov
