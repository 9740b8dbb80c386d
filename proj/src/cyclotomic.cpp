#include "tqdh/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "tqdh/errors.hpp"

namespace tqdh {
namespace {

using IntPoly = std::vector<std::int64_t>;  // low degree first

struct Field {
  int n = 1;
  int phi = 1;
  IntPoly cyclo;  // monic, degree phi
  // pow[e] = x^e mod Phi_n as sparse (index, coefficient), for 0 <= e < n.
  std::vector<std::vector<std::pair<int, std::int64_t>>> pow;
};

IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
  // den is monic
  int dn = static_cast<int>(den.size()) - 1;
  int nn = static_cast<int>(num.size()) - 1;
  IntPoly quo(nn - dn + 1, 0);
  for (int k = nn - dn; k >= 0; --k) {
    std::int64_t c = num[k + dn];
    quo[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dn; ++j) num[k + j] -= c * den[j];
  }
  return quo;
}

IntPoly cyclotomic_poly(int n, std::map<int, IntPoly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide_exact(p, cyclotomic_poly(d, memo));
  memo[n] = p;
  return p;
}

std::unique_ptr<Field> make_field(int n) {
  auto f = std::make_unique<Field>();
  f->n = n;
  std::map<int, IntPoly> memo;
  f->cyclo = cyclotomic_poly(n, memo);
  f->phi = static_cast<int>(f->cyclo.size()) - 1;
  int phi = f->phi;
  std::vector<std::int64_t> cur(phi, 0);
  cur[0] = 1;
  f->pow.resize(n);
  for (int e = 0; e < n; ++e) {
    auto& row = f->pow[e];
    for (int k = 0; k < phi; ++k)
      if (cur[k] != 0) row.emplace_back(k, cur[k]);
    // multiply by x and reduce with x^phi = -sum cyclo[k] x^k
    std::int64_t top = cur[phi - 1];
    for (int k = phi - 1; k > 0; --k) cur[k] = cur[k - 1] - top * f->cyclo[k];
    cur[0] = -top * f->cyclo[0];
  }
  return f;
}

const Field& field(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = make_field(n);
  return *slot;
}

// Reduce a dense exponent vector (indices taken mod n) into canonical coefficients.
std::vector<Rational> reduce(const Field& f, const std::vector<Rational>& buf) {
  std::vector<Rational> out(f.phi);
  for (std::size_t e = 0; e < buf.size(); ++e) {
    if (buf[e].is_zero()) continue;
    for (const auto& [k, c] : f.pow[e % f.n]) out[k] += buf[e] * Rational(c);
  }
  return out;
}

// Solve the square or tall system A y = b over Q; returns false when inconsistent.
bool solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational>& y) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = a[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational m = a[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!a[r][k].is_zero()) a[i][k] -= m * a[r][k];
      b[i] -= m * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return false;
  y.assign(cols, Rational());
  for (std::size_t i = 0; i < r; ++i) y[pivot_col[i]] = b[i];
  return true;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void trim(std::string& s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs) {
  if (order < 1) throw ValidationError("cyclotomic order must be positive");
  if (order % 4 == 2) {
    // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
    Cyclotomic acc;
    Cyclotomic base = root_of_unity(order, 1);
    Cyclotomic power(1);
    for (const auto& c : coeffs) {
      if (!c.is_zero()) acc += power * Cyclotomic(c);
      power *= base;
    }
    *this = std::move(acc);
    return;
  }
  const Field& f = field(order);
  order_ = order;
  if (order == 1) {
    for (const auto& c : coeffs) rat_ += c;
    return;
  }
  poly_ = reduce(f, coeffs);
  normalize();
}

Cyclotomic Cyclotomic::root_of_unity(int order, std::int64_t k) {
  if (order < 1) throw ValidationError("root of unity order must be positive");
  std::int64_t e = ((k % order) + order) % order;
  if (order == 1) return Cyclotomic(1);
  if (order == 2) return Cyclotomic(e == 0 ? 1 : -1);
  if (order % 4 == 2) {
    int m = order / 2;
    std::int64_t sub = (e * ((m + 1) / 2)) % m;
    Cyclotomic r = root_of_unity(m, sub);
    return (e % 2 == 1) ? -r : r;
  }
  if (e == 0) return Cyclotomic(1);
  const Field& f = field(order);
  Cyclotomic out;
  out.order_ = order;
  out.poly_.assign(f.phi, Rational());
  for (const auto& [idx, c] : f.pow[e]) out.poly_[idx] = Rational(c);
  out.normalize();
  return out;
}

const Cyclotomic& Cyclotomic::sqrt2() {
  static const Cyclotomic value = root_of_unity(8, 1) - root_of_unity(8, 3);
  return value;
}

void Cyclotomic::normalize() {
  if (order_ == 1) return;
  for (std::size_t k = 1; k < poly_.size(); ++k)
    if (!poly_[k].is_zero()) return;
  rat_ = poly_.empty() ? Rational() : poly_[0];
  poly_.clear();
  order_ = 1;
}

std::vector<Rational> Cyclotomic::coefficients() const {
  if (order_ == 1) return {rat_};
  return poly_;
}

std::vector<Rational> Cyclotomic::embed(int m) const {
  if (m % order_ != 0) throw InternalError("embedding into a field that does not contain the value");
  const Field& f = field(m);
  std::vector<Rational> out(f.phi);
  if (order_ == 1) {
    out[0] = rat_;
    return out;
  }
  int step = m / order_;
  for (std::size_t k = 0; k < poly_.size(); ++k) {
    if (poly_[k].is_zero()) continue;
    for (const auto& [idx, c] : f.pow[(k * step) % m]) out[idx] += poly_[k] * Rational(c);
  }
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  if (out.order_ == 1) {
    out.rat_ = -out.rat_;
  } else {
    for (auto& c : out.poly_) c = -c;
  }
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (order_ == 1 && rhs.order_ == 1) {
    rat_ += rhs.rat_;
    return *this;
  }
  if (rhs.is_zero()) return *this;
  int m = std::lcm(order_, rhs.order_);
  std::vector<Rational> a = order_ == m ? coefficients() : embed(m);
  std::vector<Rational> b = rhs.order_ == m ? rhs.coefficients() : rhs.embed(m);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  order_ = m;
  rat_ = Rational();
  poly_ = std::move(a);
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  if (order_ == 1 && rhs.order_ == 1) {
    rat_ -= rhs.rat_;
    return *this;
  }
  return *this += -rhs;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (order_ == 1 && rhs.order_ == 1) {
    rat_ *= rhs.rat_;
    return *this;
  }
  if (rhs.order_ == 1) {
    if (rhs.rat_.is_zero()) return *this = Cyclotomic();
    for (auto& c : poly_) c *= rhs.rat_;
    return *this;
  }
  if (order_ == 1) {
    if (rat_.is_zero()) return *this;
    Rational s = rat_;
    *this = rhs;
    for (auto& c : poly_) c *= s;
    return *this;
  }
  int m = std::lcm(order_, rhs.order_);
  const Field& f = field(m);
  std::vector<Rational> a = order_ == m ? poly_ : embed(m);
  std::vector<Rational> b = rhs.order_ == m ? rhs.poly_ : rhs.embed(m);
  std::vector<Rational> buf(m);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      buf[(i + j) % m] += a[i] * b[j];
    }
  }
  order_ = m;
  poly_ = reduce(f, buf);
  normalize();
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZeroError();
  if (order_ == 1) return Cyclotomic(rat_.inverse());
  const Field& f = field(order_);
  int phi = f.phi;
  // Column j of the multiplication matrix is this * x^j.
  std::vector<std::vector<Rational>> mat(phi, std::vector<Rational>(phi));
  for (int j = 0; j < phi; ++j) {
    std::vector<Rational> xj(phi);
    xj[j] = Rational(1);
    Cyclotomic col = *this * Cyclotomic(order_, xj);
    std::vector<Rational> cc = col.order_ == order_ ? col.coefficients() : col.embed(order_);
    for (int i = 0; i < phi; ++i) mat[i][j] = cc[i];
  }
  std::vector<Rational> rhs(phi);
  rhs[0] = Rational(1);
  std::vector<Rational> y;
  if (!solve_rational(mat, rhs, y)) throw InternalError("singular multiplication matrix for a nonzero field element");
  return Cyclotomic(order_, y);
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) {
  if (rhs.is_zero()) throw DivisionByZeroError();
  if (order_ == 1 && rhs.order_ == 1) {
    rat_ /= rhs.rat_;
    return *this;
  }
  return *this *= rhs.inverse();
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1);
  Cyclotomic base(*this);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == 1 || b.order_ == 1) return a.order_ == b.order_ && a.rat_ == b.rat_;
  if (a.order_ == b.order_) return a.poly_ == b.poly_;
  int m = std::lcm(a.order_, b.order_);
  return a.embed(m) == b.embed(m);
}

std::string Cyclotomic::to_string() const {
  if (order_ == 1) return rat_.to_string();
  // Descend to the smallest Q(zeta_d) containing the value.
  int n = order_;
  std::vector<Rational> coeffs = poly_;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int p : prime_factors(n)) {
      int d = n / p;
      if (d % 4 == 2) d /= 2;
      if (d <= 2) continue;  // a rational value would already have order 1
      const Field& big = field(n);
      const Field& small = field(d);
      std::vector<std::vector<Rational>> mat(big.phi, std::vector<Rational>(small.phi));
      for (int j = 0; j < small.phi; ++j)
        for (const auto& [idx, c] : big.pow[(static_cast<long>(j) * (n / d)) % n]) mat[idx][j] = Rational(c);
      std::vector<Rational> y;
      if (solve_rational(mat, coeffs, y)) {
        n = d;
        coeffs = std::move(y);
        moved = true;
        break;
      }
    }
  }
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coeffs[k].to_string() + "*z" + std::to_string(n) + "^" + std::to_string(k);
  }
  return out;
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ValidationError("empty scalar");
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    char prev = s[i - 1];
    if ((s[i] == '+' || s[i] == '-') && prev != '*' && prev != '^' && prev != '+' && prev != '-') {
      terms.push_back(s.substr(start, i - start));
      start = s[i] == '+' ? i + 1 : i;
    }
  }
  terms.push_back(s.substr(start));
  Cyclotomic total;
  for (std::string term : terms) {
    trim(term);
    if (!term.empty() && term[0] == '+') term.erase(term.begin());
    if (term.empty()) throw ValidationError("malformed scalar '" + std::string(text) + "'");
    auto zpos = term.find('z');
    if (zpos == std::string::npos) {
      total += Cyclotomic(Rational::parse(term));
      continue;
    }
    std::string coef = term.substr(0, zpos);
    std::string root = term.substr(zpos + 1);
    Rational c(1);
    if (coef == "-") {
      c = Rational(-1);
    } else if (!coef.empty()) {
      if (coef.back() != '*') throw ValidationError("malformed scalar term '" + term + "'");
      coef.pop_back();
      c = Rational::parse(coef);
    }
    auto caret = root.find('^');
    std::string ntext = root.substr(0, caret);
    std::string ktext = caret == std::string::npos ? "1" : root.substr(caret + 1);
    try {
      std::size_t used = 0;
      int n = std::stoi(ntext, &used);
      if (used != ntext.size() || n < 1) throw ValidationError("bad root order");
      std::size_t kused = 0;
      long long k = std::stoll(ktext, &kused);
      if (kused != ktext.size()) throw ValidationError("bad exponent");
      total += Cyclotomic(c) * root_of_unity(n, k);
    } catch (const std::logic_error&) {
      throw ValidationError("malformed scalar term '" + term + "'");
    }
  }
  return total;
}

}  // namespace tqdh
