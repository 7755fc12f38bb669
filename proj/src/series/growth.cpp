#include "conjlang/series/growth.hpp"

#include <sstream>
#include <stdexcept>

#include "conjlang/fsa/operations.hpp"

namespace conjlang {

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) {
    num_ = {};
    den_ = IntPolynomial(1);
    return;
  }
  IntPolynomial g = gcd(num, den);
  num = divide_exact(num, g);
  den = divide_exact(den, g);
  BigInt c = boost::multiprecision::gcd(num.content(), den.content());
  num = num.divide_exact(c);
  den = den.divide_exact(c);
  if (den.coeff(0) == 0) throw std::domain_error("rational function has a pole at 0");
  if (den.coeff(0) < 0) {
    num = -num;
    den = -den;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
  return RationalFunction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
  return RationalFunction(x.num_ * y.num_, x.den_ * y.den_);
}

std::string RationalFunction::to_string() const {
  return "num: " + num_.to_string() + " ; den: " + den_.to_string();
}

namespace {

IntPolynomial parse_coeffs(std::string text) {
  std::vector<BigInt> c;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty coefficient");
    c.emplace_back(item.substr(b, e - b + 1));
  }
  return IntPolynomial(std::move(c));
}

}  // namespace

RationalFunction RationalFunction::parse(const std::string& text) {
  auto n = text.find("num:");
  auto semi = text.find(';');
  auto d = text.find("den:");
  if (n == std::string::npos || semi == std::string::npos || d == std::string::npos || !(n < semi && semi < d))
    throw std::invalid_argument("series text must look like 'num: ... ; den: ...'");
  try {
    return RationalFunction(parse_coeffs(text.substr(n + 4, semi - n - 4)), parse_coeffs(text.substr(d + 4)));
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("bad coefficient: ") + e.what());
  }
}

std::vector<BigInt> count_by_length(const Dfa& d, int n) {
  std::vector<BigInt> out;
  if (n < 0) return out;
  std::vector<BigInt> ways(d.state_count()), next(d.state_count());
  ways[d.start()] = 1;
  for (int len = 0; len <= n; ++len) {
    BigInt total = 0;
    for (State q = 0; q < d.state_count(); ++q)
      if (d.accepting(q)) total += ways[q];
    out.push_back(total);
    if (len == n) break;
    for (auto& x : next) x = 0;
    for (State q = 0; q < d.state_count(); ++q) {
      if (ways[q] == 0) continue;
      for (Letter x = 0; x < d.alphabet().size(); ++x) next[d.next(q, x)] += ways[q];
    }
    std::swap(ways, next);
  }
  return out;
}

RationalFunction rational_series(const Dfa& input) {
  Dfa d = minimize(input);
  std::vector<bool> live = useful_states(d);
  if (!live[d.start()]) return RationalFunction();

  // Live states with the start state last, so the final Bareiss pivot row
  // carries det(I - zA) and the Cramer numerator for the start coordinate.
  std::vector<State> order;
  for (State q = 0; q < d.state_count(); ++q)
    if (live[q] && q != d.start()) order.push_back(q);
  order.push_back(d.start());
  const std::size_t n = order.size();
  std::vector<int> index(d.state_count(), -1);
  for (std::size_t i = 0; i < n; ++i) index[order[i]] = static_cast<int>(i);

  std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long long> row(n, 0);
    for (Letter x = 0; x < d.alphabet().size(); ++x) {
      int j = index[d.next(order[i], x)];
      if (j >= 0) ++row[j];
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<BigInt> c(2);
      c[0] = i == j ? 1 : 0;
      c[1] = -row[j];
      m[i][j] = IntPolynomial(std::move(c));
    }
    m[i][n] = IntPolynomial(d.accepting(order[i]) ? 1 : 0);
  }

  IntPolynomial prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j)
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  return RationalFunction(m[n - 1][n], m[n - 1][n - 1]);
}

std::vector<BigInt> expand(const RationalFunction& r, int n) {
  const auto& den = r.den();
  if (den.coeff(0) == 0) throw std::domain_error("rational function has a pole at 0");
  std::vector<BigInt> c;
  for (int k = 0; k <= n; ++k) {
    BigInt acc = r.num().coeff(k);
    for (int i = 1; i <= std::min(k, den.degree()); ++i) acc -= den.coeff(i) * c[k - i];
    BigInt q, rem;
    divide_qr(acc, den.coeff(0), q, rem);
    if (rem != 0) throw std::domain_error("series coefficients are not integers");
    c.push_back(q);
  }
  return c;
}

bool eq_rational(const RationalFunction& x, const RationalFunction& y) {
  return x.num() * y.den() == y.num() * x.den();
}

std::string counts_tsv(const std::vector<BigInt>& counts) {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) out += std::to_string(i) + "\t" + counts[i].str() + "\n";
  return out;
}

}  // namespace conjlang
