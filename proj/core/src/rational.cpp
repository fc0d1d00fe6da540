#include "linea/rational.hpp"

namespace linea {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw input_error("malformed rational: '" + text + "'");
  }
}

std::string rat_to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::next_in(std::int64_t lo, std::int64_t hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

}  // namespace linea
