#include "linea/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace linea {

Polynomial Polynomial::constant(int nvars, const Rat& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Monomial::one(nvars), c});
  return p;
}

Polynomial Polynomial::variable(int idx, int nvars) {
  Polynomial p(nvars);
  p.terms_.push_back({Monomial::var(idx, nvars), Rat(1)});
  return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms,
                                  const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.mon, b.mon);
  });
  Polynomial p(nvars);
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int(t.mon.deg));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mon.deg != terms_.front().mon.deg) return false;
  return true;
}

Polynomial Polynomial::plus(const Polynomial& other,
                            const MonomialOrder& order) const {
  Polynomial r(nvars_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = order.compare(terms_[i].mon, other.terms_[j].mon);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(other.terms_[j++]);
    } else {
      Rat s = terms_[i].coeff + other.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].mon, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) r.terms_.push_back(other.terms_[j]);
  return r;
}

Polynomial Polynomial::minus(const Polynomial& other,
                             const MonomialOrder& order) const {
  return plus(other.scaled(Rat(-1)), order);
}

Polynomial Polynomial::times(const Polynomial& other,
                             const MonomialOrder& order) const {
  std::vector<Term> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_)
      acc.push_back({a.mon.times(b.mon), a.coeff * b.coeff});
  return from_terms(nvars_, std::move(acc), order);
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial r(nvars_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.mon = t.mon.times(m);
  return r;
}

Polynomial Polynomial::axpy(const Rat& c, const Monomial& m,
                            const Polynomial& other,
                            const MonomialOrder& order) const {
  Polynomial r(nvars_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    Monomial bm = other.terms_[j].mon.times(m);
    int cmp = order.compare(terms_[i].mon, bm);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({bm, -c * other.terms_[j].coeff});
      ++j;
    } else {
      Rat s = terms_[i].coeff - c * other.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].mon, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j)
    r.terms_.push_back(
        {other.terms_[j].mon.times(m), -c * other.terms_[j].coeff});
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(Rat(1) / terms_.front().coeff);
}

Polynomial Polynomial::without_leading() const {
  Polynomial r(nvars_);
  r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

Polynomial Polynomial::resorted(const MonomialOrder& order) const {
  return from_terms(nvars_, terms_, order);
}

Polynomial Polynomial::substituted(const std::vector<const Polynomial*>& image,
                                   const MonomialOrder& order) const {
  Polynomial out(nvars_);
  for (const auto& t : terms_) {
    Polynomial factor = Polynomial::constant(nvars_, t.coeff);
    Monomial passthrough = Monomial::one(nvars_);
    for (int v = 0; v < t.mon.nvars; ++v) {
      if (!t.mon.e[v]) continue;
      if (v < int(image.size()) && image[v]) {
        for (int k = 0; k < t.mon.e[v]; ++k)
          factor = factor.times(*image[v], order);
      } else {
        for (int k = 0; k < t.mon.e[v]; ++k)
          passthrough = passthrough.times(Monomial::var(v, nvars_));
      }
    }
    out = out.plus(factor.times_monomial(passthrough), order);
  }
  return out;
}

Polynomial Polynomial::with_nvars(int nvars) const {
  Polynomial r(nvars);
  r.terms_ = terms_;
  for (auto& t : r.terms_) {
    for (int i = nvars; i < t.mon.nvars; ++i)
      if (t.mon.e[i]) throw input_error("cannot drop used variable");
    for (int i = t.mon.nvars; i < nvars; ++i) t.mon.e[i] = 0;
    t.mon.nvars = static_cast<std::int16_t>(nvars);
  }
  return r;
}

bool Polynomial::equals(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mon == other.terms_[i].mon &&
          terms_[i].coeff == other.terms_[i].coeff))
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Rat c = abs(t.coeff);
    if (i == 0) {
      if (t.coeff < 0) s += "-";
    } else {
      s += (t.coeff < 0) ? " - " : " + ";
    }
    bool unit_coeff = (c == 1) && !t.mon.is_one();
    if (!unit_coeff) s += rat_to_string(c);
    if (!t.mon.is_one()) {
      if (!unit_coeff) s += "*";
      s += t.mon.to_string();
    }
  }
  return s;
}

Rat coeff_of(const Polynomial& p, const Monomial& m) {
  for (const auto& t : p.terms())
    if (t.mon == m) return t.coeff;
  return Rat(0);
}

std::vector<Rat> linear_form_coeffs(const Polynomial& f, int nvars) {
  std::vector<Rat> c(nvars, Rat(0));
  for (const auto& t : f.terms()) {
    if (t.mon.deg != 1) throw input_error("expected a linear form");
    for (int v = 0; v < nvars; ++v)
      if (t.mon.e[v]) c[v] = t.coeff;
  }
  return c;
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  std::string number() {
    skip_ws();
    std::string d;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      d += s[i++];
    return d;
  }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, int nvars,
                             const MonomialOrder& order) {
  if (nvars > kMaxVars) throw input_error("too many variables");
  Lexer lx{text};
  std::vector<Term> terms;
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = (c == '-') ? -1 : 1;
      ++lx.i;
    } else if (!first) {
      throw input_error("expected '+' or '-' in: " + text);
    }
    first = false;

    Rat coeff(sign);
    Monomial mon = Monomial::one(nvars);
    bool saw_factor = false;
    while (true) {
      char p = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(p))) {
        std::string num = lx.number();
        if (lx.peek() == '/') {
          ++lx.i;
          std::string den = lx.number();
          if (den.empty()) throw input_error("missing denominator: " + text);
          coeff *= make_rat(Int(num), Int(den));
        } else {
          coeff *= Rat(Int(num));
        }
        saw_factor = true;
      } else if (p == 'x') {
        ++lx.i;
        std::string idx = lx.number();
        if (idx.empty()) throw input_error("missing variable index: " + text);
        int v = std::stoi(idx);
        if (v >= nvars)
          throw input_error("variable x" + idx + " out of range");
        int pow = 1;
        if (lx.peek() == '^') {
          ++lx.i;
          std::string e = lx.number();
          if (e.empty()) throw input_error("missing exponent: " + text);
          pow = std::stoi(e);
        }
        mon.e[v] += static_cast<std::uint16_t>(pow);
        mon.deg += pow;
        saw_factor = true;
      } else if (p == '*') {
        ++lx.i;
        continue;
      } else {
        break;
      }
    }
    if (!saw_factor) throw input_error("empty term in: " + text);
    terms.push_back({mon, coeff});
  }
  return from_terms(nvars, std::move(terms), order);
}

}  // namespace linea
