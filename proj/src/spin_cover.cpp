#include "tqdh/spin_cover.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>
#include <random>

#include "tqdh/errors.hpp"

namespace tqdh {

int blade_sign(std::uint32_t s, std::uint32_t t) {
  int swaps = 0;
  while (t != 0) {
    int b = std::countr_zero(t);
    t &= t - 1;
    swaps += std::popcount(s >> (b + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

CliffordElement CliffordElement::scalar(int n, const Cyclotomic& c) {
  CliffordElement x(n);
  x.add_term(0, c);
  return x;
}

CliffordElement CliffordElement::generator(int n, int i) {
  if (i < 0 || i >= n) throw ValidationError("Clifford generator index out of range");
  CliffordElement x(n);
  x.add_term(1u << i, Cyclotomic(1));
  return x;
}

void CliffordElement::add_term(std::uint32_t blade, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(blade);
  if (it == terms_.end()) {
    terms_.emplace(blade, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool CliffordElement::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

Cyclotomic CliffordElement::scalar_part() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [blade, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (blade == 0) continue;
    out += "*e";
    bool first = true;
    for (int i = 0; i < 32; ++i)
      if (blade & (1u << i)) {
        out += (first ? "" : ",") + std::to_string(i + 1);
        first = false;
      }
  }
  return out;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  n_ = std::max(n_, o.n_);
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  n_ = std::max(n_, o.n_);
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

CliffordElement& CliffordElement::operator*=(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, v] : terms_) v *= c;
  return *this;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  CliffordElement out(std::max(a.n_, b.n_));
  for (const auto& [sa, ca] : a.terms_)
    for (const auto& [sb, cb] : b.terms_) {
      Cyclotomic v = ca * cb;
      if (blade_sign(sa, sb) < 0) v = -v;
      out.add_term(sa ^ sb, v);
    }
  return out;
}

bool operator==(const CliffordElement& a, const CliffordElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

SpinElement SpinElement::normalized() const {
  SpinElement out{body, 0};
  int p = sqrt2_power;
  int fold = (p % 2 == 0) ? p / 2 : (p + 1) / 2;  // power of 2 moved into the body
  out.sqrt2_power = p - 2 * fold;
  if (fold != 0) {
    Rational scale(1);
    for (int k = 0; k < std::abs(fold); ++k) scale *= Rational(2);
    if (fold < 0) scale = scale.inverse();
    out.body *= Cyclotomic(scale);
  }
  if (out.body.terms().empty()) out.sqrt2_power = 0;
  return out;
}

CliffordElement SpinElement::value() const {
  SpinElement s = normalized();
  if (s.sqrt2_power == 0) return s.body;
  return s.body * (Cyclotomic::sqrt2() / Cyclotomic(2));
}

SpinElement operator*(const SpinElement& a, const SpinElement& b) {
  return SpinElement{a.body * b.body, a.sqrt2_power + b.sqrt2_power};
}

bool operator==(const SpinElement& a, const SpinElement& b) {
  SpinElement x = a.normalized();
  SpinElement y = b.normalized();
  return x.sqrt2_power == y.sqrt2_power && x.body == y.body;
}

SpinElement spin_scalar(int n, int c) { return SpinElement{CliffordElement::scalar(n, Cyclotomic(c)), 0}; }
SpinElement spin_z(int n) { return spin_scalar(n, -1); }
SpinElement spin_negate(const SpinElement& x) { return SpinElement{x.body * Cyclotomic(-1), x.sqrt2_power}; }

SpinElement transposition_lift(int r, int s, int n) {
  if (r == s) throw ValidationError("transposition lift needs distinct indices");
  if (r < 0 || s < 0 || r >= n || s >= n) throw ValidationError("transposition lift index out of range");
  CliffordElement body = CliffordElement::generator(n, r) - CliffordElement::generator(n, s);
  return SpinElement{body, -1};
}

SpinElement presentation_generator(int r, int n) { return transposition_lift(r, r + 1, n); }

SpinElement transposition_lift_recursive(int r, int s, int n) {
  if (r == s) throw ValidationError("transposition lift needs distinct indices");
  if (r > s) return transposition_lift_recursive(s, r, n) * spin_z(n);
  if (s == r + 1) return presentation_generator(r, n);
  SpinElement t = presentation_generator(r, n);
  return t * transposition_lift_recursive(r + 1, s, n) * t * spin_z(n);
}

namespace {

std::vector<std::pair<int, int>> section_factors(const Permutation& sigma) {
  std::vector<std::pair<int, int>> out;
  for (const auto& cyc : cycles(sigma))
    for (std::size_t k = cyc.size() - 1; k >= 1; --k) out.emplace_back(cyc[0], cyc[k]);
  return out;
}

}  // namespace

SpinElement section_u(const Permutation& sigma) {
  int n = static_cast<int>(sigma.size());
  SpinElement u = spin_scalar(n, 1);
  for (const auto& [a, b] : section_factors(sigma)) u = u * transposition_lift(a, b, n);
  return u;
}

SpinElement section_u_inverse(const Permutation& sigma) {
  int n = static_cast<int>(sigma.size());
  auto f = section_factors(sigma);
  SpinElement u = spin_scalar(n, 1);
  for (auto it = f.rbegin(); it != f.rend(); ++it) u = u * transposition_lift(it->first, it->second, n);
  return u;
}

SpinElement conjugate(const SpinElement& x, const SpinElement& x_inv, const SpinElement& y) { return x * y * x_inv; }

int inequality_count(int r, int s, int rp, int sp) {
  std::array<int, 4> v{r, s, rp, sp};
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw ValidationError("inequality count needs distinct indices");
  return (std::min(r, s) > std::min(rp, sp)) + (r > s) + (rp > sp);
}

namespace {

int scalar_sign(const SpinElement& c) {
  SpinElement s = c.normalized();
  if (s.sqrt2_power != 0 || !s.body.is_scalar()) throw InternalError("section defect is not a scalar");
  Cyclotomic v = s.body.scalar_part();
  if (v.is_one()) return 1;
  if (v == Cyclotomic(-1)) return -1;
  throw InternalError("section defect is a scalar other than +-1");
}

}  // namespace

int spin_alpha(const Permutation& sigma, const Permutation& tau) {
  return scalar_sign(section_u(sigma) * section_u(tau) * section_u_inverse(compose(sigma, tau)));
}

Cocycle spin_cocycle(const GroupPtr& sn) {
  if (sn->kind() != FiniteGroup::Kind::Permutation) throw ValidationError("spin cocycle needs a symmetric group");
  int size = sn->size();
  std::vector<SpinElement> u(size), ui(size);
  for (int g = 0; g < size; ++g) {
    u[g] = section_u(sn->permutation(g));
    ui[g] = section_u_inverse(sn->permutation(g));
  }
  std::vector<Cyclotomic> values(static_cast<std::size_t>(size) * size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      int ab = sn->mul(a, b);
      values[static_cast<std::size_t>(a) * size + b] = Cyclotomic(scalar_sign(u[a] * u[b] * ui[ab]));
    }
  return Cocycle(sn, std::move(values), "spin(" + std::to_string(sn->degree()) + ")");
}

bool CoverReport::passed() const {
  return std::all_of(families.begin(), families.end(), [](const CoverFamily& f) { return f.passed(); });
}

namespace {

std::string pts(std::initializer_list<int> v) {
  std::string out = "(";
  bool first = true;
  for (int x : v) {
    out += (first ? "" : ",") + std::to_string(x + 1);
    first = false;
  }
  return out + ")";
}

void record(CoverFamily& fam, bool ok, const std::function<std::string()>& witness) {
  ++fam.checked;
  if (ok) return;
  ++fam.failed;
  if (fam.witnesses.size() < 5) fam.witnesses.push_back(witness());
}

Permutation transposition(int n, int a, int b) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[a], p[b]);
  return p;
}

SpinElement z_power(int n, int e) { return (e % 2 == 0) ? spin_scalar(n, 1) : spin_z(n); }

}  // namespace

CoverReport verify_cover(int n, long samples, std::uint64_t seed) {
  if (n < 4) throw ValidationError("cover verification needs n >= 4");
  if (n > 30) throw ValidationError("cover verification supports n <= 30");
  CoverReport rep;
  rep.n = n;
  rep.exhaustive = n <= 4;
  rep.samples = rep.exhaustive ? 0 : samples;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  SpinElement one = spin_scalar(n, 1);
  SpinElement z = spin_z(n);

  CoverFamily fz{"z^2 = 1"};
  record(fz, z * z == one, [] { return std::string("z^2"); });
  CoverFamily fsq{"t_r^2 = 1"};
  CoverFamily ffar{"t_r t_s = t_s t_r z for |r-s| > 1"};
  CoverFamily fbraid{"t_r t_{r+1} t_r = t_{r+1} t_r t_{r+1}"};
  CoverFamily fcentral{"z t_r = t_r z"};
  for (int r = 0; r + 1 < n; ++r) {
    SpinElement t = presentation_generator(r, n);
    record(fsq, t * t == one, [&] { return "r=" + std::to_string(r + 1); });
    record(fcentral, z * t == t * z, [&] { return "r=" + std::to_string(r + 1); });
    for (int s = 0; s + 1 < n; ++s) {
      if (std::abs(r - s) <= 1) continue;
      SpinElement ts = presentation_generator(s, n);
      record(ffar, t * ts == ts * t * z, [&] { return "r=" + std::to_string(r + 1) + " s=" + std::to_string(s + 1); });
    }
    if (r + 2 < n) {
      SpinElement t2 = presentation_generator(r + 1, n);
      record(fbraid, t * t2 * t == t2 * t * t2, [&] { return "r=" + std::to_string(r + 1); });
    }
  }
  CoverFamily frec{"[rs] recursion"};
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      if (r != s)
        record(frec, transposition_lift(r, s, n) == transposition_lift_recursive(r, s, n), [&] { return pts({r, s}); });

  // Sampling helpers: exhaustive enumeration for small n, random tuples otherwise.
  std::vector<Permutation> all_perms;
  if (rep.exhaustive) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    do all_perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  auto random_perm = [&] {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  };
  auto random_distinct = [&](int k) {
    Permutation p = random_perm();
    return std::vector<int>(p.begin(), p.begin() + k);
  };
  auto for_each_perm = [&](const std::function<void(const Permutation&)>& f) {
    if (rep.exhaustive) {
      for (const auto& p : all_perms) f(p);
    } else {
      for (long k = 0; k < samples; ++k) f(random_perm());
    }
  };
  // Iterates over tuples of k distinct indices, combined with a permutation when with_perm.
  auto for_each_tuple = [&](int k, bool with_perm, const std::function<void(const Permutation&, const std::vector<int>&)>& f) {
    if (rep.exhaustive) {
      std::vector<int> idx(k);
      std::function<void(int)> rec = [&](int pos) {
        if (pos == k) {
          if (with_perm) {
            for (const auto& p : all_perms) f(p, idx);
          } else {
            f(Permutation(), idx);
          }
          return;
        }
        for (int v = 0; v < n; ++v) {
          if (std::find(idx.begin(), idx.begin() + pos, v) != idx.begin() + pos) continue;
          idx[pos] = v;
          rec(pos + 1);
        }
      };
      rec(0);
    } else {
      for (long s = 0; s < samples; ++s) {
        Permutation p = with_perm ? random_perm() : Permutation();
        f(p, random_distinct(k));
      }
    }
  };

  CoverFamily fsection{"u_sigma u_sigma^-1 = 1 and p(u_sigma) = sigma"};
  for_each_perm([&](const Permutation& sigma) {
    SpinElement u = section_u(sigma);
    SpinElement ui = section_u_inverse(sigma);
    bool ok = u * ui == one;
    for (int i = 0; i < n && ok; ++i) {
      SpinElement e{CliffordElement::generator(n, i), 0};
      SpinElement img = u * e * ui;
      SpinElement target{CliffordElement::generator(n, sigma[i]), 0};
      ok = img == target || img == spin_negate(target);
    }
    record(fsection, ok, [&] { return cycle_string(sigma); });
  });

  CoverFamily fv{"conjugation: sigma |> [rs] = [sigma(r) sigma(s)] z^eps(sigma)"};
  for_each_tuple(2, true, [&](const Permutation& sigma, const std::vector<int>& t) {
    int r = t[0], s = t[1];
    SpinElement lhs = conjugate(section_u(sigma), section_u_inverse(sigma), transposition_lift(r, s, n));
    SpinElement rhs = transposition_lift(sigma[r], sigma[s], n) * z_power(n, signature(sigma));
    record(fv, lhs == rhs, [&] { return cycle_string(sigma) + " " + pts({r, s}); });
  });

  CoverFamily f3{"3-cycle: [rs][sr']z = [rr'][rs] = [r's][rr']z"};
  for_each_tuple(3, false, [&](const Permutation&, const std::vector<int>& t) {
    int r = t[0], s = t[1], rp = t[2];
    SpinElement a = transposition_lift(r, s, n) * transposition_lift(s, rp, n) * z;
    SpinElement b = transposition_lift(r, rp, n) * transposition_lift(r, s, n);
    SpinElement c = transposition_lift(rp, s, n) * transposition_lift(r, rp, n) * z;
    record(f3, a == b && b == c, [&] { return pts({r, s, rp}); });
  });

  CoverFamily fcomm{"commuting: [rs][r's'] = [r's'][rs]z"};
  for_each_tuple(4, false, [&](const Permutation&, const std::vector<int>& t) {
    int r = t[0], s = t[1], rp = t[2], sp = t[3];
    SpinElement a = transposition_lift(r, s, n) * transposition_lift(rp, sp, n);
    SpinElement b = transposition_lift(rp, sp, n) * transposition_lift(r, s, n) * z;
    record(fcomm, a == b, [&] { return pts({r, s, rp, sp}); });
  });

  CoverFamily fd{"|d(r,s,r',s') - d(r,s,s',r')| = 1 = |d(r,s,r',s') - d(s,r,r',s')|"};
  for_each_tuple(4, false, [&](const Permutation&, const std::vector<int>& t) {
    int r = t[0], s = t[1], rp = t[2], sp = t[3];
    int d0 = inequality_count(r, s, rp, sp);
    bool ok = std::abs(d0 - inequality_count(r, s, sp, rp)) == 1 && std::abs(d0 - inequality_count(s, r, rp, sp)) == 1;
    record(fd, ok, [&] { return pts({r, s, rp, sp}); });
  });

  CoverFamily fa{"section (a): sigma |> u_(rs)"};
  for_each_tuple(2, true, [&](const Permutation& sigma, const std::vector<int>& t) {
    int r = std::min(t[0], t[1]), s = std::max(t[0], t[1]);
    if (!rep.exhaustive || t[0] < t[1]) {
      Permutation tr = transposition(n, r, s);
      SpinElement lhs = conjugate(section_u(sigma), section_u_inverse(sigma), section_u(tr));
      int e = signature(sigma) + (sigma[r] > sigma[s] ? 1 : 0);
      SpinElement rhs = section_u(compose(compose(sigma, tr), invert(sigma))) * z_power(n, e);
      record(fa, lhs == rhs, [&] { return cycle_string(sigma) + " " + pts({r, s}); });
    }
  });

  CoverFamily fb{"section (b): sigma |> u_(rs)(r's') = u z^d_sigma"};
  for_each_tuple(4, true, [&](const Permutation& sigma, const std::vector<int>& t) {
    int r = std::min(t[0], t[1]), s = std::max(t[0], t[1]);
    int rp = std::min(t[2], t[3]), sp = std::max(t[2], t[3]);
    if (r > rp) {
      std::swap(r, rp);
      std::swap(s, sp);
    }
    // in exhaustive mode visit each constrained tuple once
    if (rep.exhaustive && !(t[0] < t[1] && t[2] < t[3] && t[0] < t[2])) return;
    Permutation pi = compose(transposition(n, r, s), transposition(n, rp, sp));
    SpinElement lhs = conjugate(section_u(sigma), section_u_inverse(sigma), section_u(pi));
    int d = inequality_count(sigma[r], sigma[s], sigma[rp], sigma[sp]);
    SpinElement rhs = section_u(compose(compose(sigma, pi), invert(sigma))) * z_power(n, d);
    record(fb, lhs == rhs, [&] { return cycle_string(sigma) + " " + pts({r, s, rp, sp}); });
  });

  CoverFamily fc{"section (c): sigma |> u_(rsr') = u_{sigma (rsr') sigma^-1}"};
  for_each_tuple(3, true, [&](const Permutation& sigma, const std::vector<int>& t) {
    int r = *std::min_element(t.begin(), t.end());
    std::vector<int> rest;
    for (int v : t)
      if (v != r) rest.push_back(v);
    int s = rest[0], rp = rest[1];
    if (rep.exhaustive && t[0] != r) return;
    Permutation cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    cyc[r] = s;
    cyc[s] = rp;
    cyc[rp] = r;
    SpinElement lhs = conjugate(section_u(sigma), section_u_inverse(sigma), section_u(cyc));
    SpinElement rhs = section_u(compose(compose(sigma, cyc), invert(sigma)));
    record(fc, lhs == rhs, [&] { return cycle_string(sigma) + " " + pts({r, s, rp}); });
  });

  rep.families = {fz, fsq, ffar, fbraid, fcentral, frec, fsection, fv, f3, fcomm, fd, fa, fb, fc};
  return rep;
}

}  // namespace tqdh
