#include "coha/rational.hpp"

#include "coha/error.hpp"

namespace coha {

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw InvalidArgument("malformed rational: '" + s + "'");
  if (q.get_den() == 0) throw InvalidArgument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<std::pair<std::vector<int>, Integer>> weak_compositions(int total, int parts) {
  std::vector<std::pair<std::vector<int>, Integer>> out;
  if (parts <= 0 || total < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int idx, int left) -> void {
    if (idx == parts - 1) {
      cur[static_cast<std::size_t>(idx)] = left;
      Integer c = factorial(static_cast<unsigned>(total));
      for (int k : cur) c /= factorial(static_cast<unsigned>(k));
      out.emplace_back(cur, c);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[static_cast<std::size_t>(idx)] = k;
      self(self, idx + 1, left - k);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace coha
