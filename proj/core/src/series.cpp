#include "linea/series.hpp"

#include <algorithm>
#include <cctype>

namespace linea {

IntPoly poly_trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return poly_trim(std::move(r));
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_trim(std::move(r));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return poly_trim(std::move(r));
}

namespace {

// Quotient of p by (1-t) when it divides exactly; empty optional otherwise.
// Coefficients of the quotient are the prefix sums of p.
std::optional<IntPoly> divide_one_minus_t(const IntPoly& p) {
  if (p.empty()) return IntPoly{};
  Int acc(0);
  for (const auto& c : p) acc += c;
  if (acc != 0) return std::nullopt;
  IntPoly q(p.size() - 1, Int(0));
  Int run(0);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    run += p[i];
    q[i] = run;
  }
  return poly_trim(std::move(q));
}

}  // namespace

RationalSeries::RationalSeries(IntPoly numerator, unsigned denom_pow)
    : num_(poly_trim(std::move(numerator))), denom_pow_(denom_pow) {
  while (denom_pow_ > 0) {
    auto q = divide_one_minus_t(num_);
    if (!q) break;
    num_ = std::move(*q);
    --denom_pow_;
  }
  if (num_.empty()) denom_pow_ = 0;
}

CoeffSeq RationalSeries::expand(unsigned n) const {
  CoeffSeq out(n + 1, Int(0));
  if (num_.empty()) return out;
  if (denom_pow_ == 0) {
    for (std::size_t i = 0; i <= n && i < num_.size(); ++i) out[i] = num_[i];
    return out;
  }
  // 1/(1-t)^d has coefficients C(d-1+k, d-1).
  for (unsigned k = 0; k <= n; ++k) {
    Int g = binomial(denom_pow_ - 1 + k, denom_pow_ - 1);
    for (std::size_t i = 0; i < num_.size() && i + k <= n; ++i)
      out[i + k] += num_[i] * g;
  }
  return out;
}

bool RationalSeries::operator==(const RationalSeries& other) const {
  return denom_pow_ == other.denom_pow_ && num_ == other.num_;
}

RationalSeries RationalSeries::operator+(const RationalSeries& other) const {
  unsigned d = std::max(denom_pow_, other.denom_pow_);
  IntPoly a = num_, b = other.num_;
  IntPoly one_minus_t{Int(1), Int(-1)};
  for (unsigned i = denom_pow_; i < d; ++i) a = poly_mul(a, one_minus_t);
  for (unsigned i = other.denom_pow_; i < d; ++i) b = poly_mul(b, one_minus_t);
  return RationalSeries(poly_add(a, b), d);
}

RationalSeries RationalSeries::operator-(const RationalSeries& other) const {
  IntPoly neg = other.num_;
  for (auto& c : neg) c = -c;
  return *this + RationalSeries(std::move(neg), other.denom_pow_);
}

std::string RationalSeries::to_string() const {
  if (num_.empty()) return "0";
  std::string n;
  for (std::size_t k = num_.size(); k-- > 0;) {
    const Int& c = num_[k];
    if (c == 0) continue;
    Int mag_int = abs(c);
    std::string mag = mag_int.get_str();
    if (n.empty()) {
      if (c < 0) n += "-";
    } else {
      n += (c < 0) ? "-" : "+";
    }
    if (k == 0) {
      n += mag;
    } else {
      if (mag != "1") n += mag + "*";
      n += "t";
      if (k > 1) n += "^" + std::to_string(k);
    }
  }
  if (denom_pow_ == 0) return n;
  bool simple = n.find_first_of("+-", 1) == std::string::npos;
  std::string out = (simple ? n : "(" + n + ")") + "/(1-t)";
  if (denom_pow_ > 1) out += "^" + std::to_string(denom_pow_);
  return out;
}

namespace {

IntPoly parse_int_poly(const std::string& s) {
  IntPoly coeffs;
  std::size_t i = 0;
  auto put = [&](std::size_t pow, const Int& c) {
    if (coeffs.size() <= pow) coeffs.resize(pow + 1, Int(0));
    coeffs[pow] += c;
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+') {
      ++i;
    } else if (s[i] == '-') {
      sign = -1;
      ++i;
    }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      digits += s[i++];
    bool have_coeff = !digits.empty();
    Int c = have_coeff ? Int(digits) : Int(1);
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 't') {
      ++i;
      std::size_t pow = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string p;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          p += s[i++];
        if (p.empty()) throw input_error("missing exponent in series: " + s);
        pow = std::stoul(p);
      }
      put(pow, sign * c);
    } else {
      if (!have_coeff) throw input_error("malformed series term in: " + s);
      put(0, sign * c);
    }
  }
  return poly_trim(std::move(coeffs));
}

}  // namespace

RationalSeries RationalSeries::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw input_error("empty series text");

  std::string num = s;
  unsigned dpow = 0;
  auto denom_at = s.find(")/(1-t)");
  if (!s.empty() && s.front() == '(' && denom_at != std::string::npos) {
    num = s.substr(1, denom_at - 1);
    std::string rest = s.substr(denom_at + 7);
    if (rest.empty()) {
      dpow = 1;
    } else if (rest[0] == '^') {
      dpow = std::stoul(rest.substr(1));
    } else {
      throw input_error("malformed series denominator: " + text);
    }
  } else if (!s.empty() && s.front() == '(' && s.back() == ')') {
    num = s.substr(1, s.size() - 2);
  }
  return RationalSeries(parse_int_poly(num), dpow);
}

CoeffSeq reciprocal_series(const RationalSeries& f, unsigned n) {
  CoeffSeq a = f.expand(n);
  for (std::size_t i = 1; i < a.size(); i += 2) a[i] = -a[i];
  if (a.empty() || a[0] != 1)
    throw input_error("reciprocal requires constant term 1");
  CoeffSeq b(n + 1, Int(0));
  b[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    Int acc(0);
    for (unsigned j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    b[k] = -acc;
  }
  return b;
}

std::optional<std::size_t> first_negative(const CoeffSeq& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] < 0) return i;
  return std::nullopt;
}

}  // namespace linea
