#include "tqdh/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tqdh/errors.hpp"

namespace tqdh {

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation invert(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    int cur = static_cast<int>(start);
    while (!seen[cur]) {
      seen[cur] = true;
      cyc.push_back(cur);
      cur = p[cur];
    }
    if (cyc.size() > 1) out.push_back(std::move(cyc));
  }
  return out;
}

int signature(const Permutation& p) {
  int parity = 0;
  for (const auto& c : cycles(p)) parity ^= static_cast<int>((c.size() - 1) & 1);
  return parity;
}

std::string cycle_string(const Permutation& p) {
  std::string out;
  for (const auto& c : cycles(p)) {
    out += "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += " ";
      out += std::to_string(c[k] + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

bool is_permutation(const Permutation& p) {
  std::vector<bool> hit(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<int>>& table, std::vector<int> generators) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("group table is empty");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->kind_ = Kind::Table;
  g->size_ = n;
  g->mul_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) throw ValidationError("group table row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= n) throw ValidationError("group table entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      g->mul_[static_cast<std::size_t>(a) * n + b] = v;
    }
  }
  for (int a = 0; a < n; ++a)
    if (g->mul(0, a) != a || g->mul(a, 0) != a) throw ValidationError("element 0 is not the identity of the group table");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
          throw ValidationError("group table is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + ")");
  g->inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g->mul(a, b) == 0 && g->mul(b, a) == 0) g->inv_[a] = b;
    if (g->inv_[a] < 0) throw ValidationError("element " + std::to_string(a) + " has no inverse");
  }
  for (int s : generators)
    if (s < 0 || s >= n) throw ValidationError("generator index out of range");
  if (generators.empty())
    for (int a = 1; a < n; ++a) generators.push_back(a);
  g->gens_ = std::move(generators);
  // the generators must generate
  std::vector<bool> seen(n, false);
  std::deque<int> todo{0};
  seen[0] = true;
  int count = 1;
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    for (int s : g->gens_) {
      int y = g->mul(x, s);
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        todo.push_back(y);
      }
    }
  }
  if (count != n) throw ValidationError("listed generators do not generate the group");
  g->finish();
  return g;
}

GroupPtr FiniteGroup::from_permutations(int degree, const std::vector<Permutation>& gens, int cap) {
  if (degree < 1) throw ValidationError("permutation degree must be positive");
  for (const auto& p : gens)
    if (static_cast<int>(p.size()) != degree || !is_permutation(p)) throw ValidationError("generator is not a permutation of the given degree");
  Permutation id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::set<Permutation> seen{id};
  std::deque<Permutation> todo{id};
  while (!todo.empty()) {
    Permutation x = todo.front();
    todo.pop_front();
    for (const auto& s : gens) {
      Permutation y = compose(x, s);
      if (seen.insert(y).second) {
        if (static_cast<int>(seen.size()) > cap)
          throw ValidationError("group closure exceeds the size cap of " + std::to_string(cap));
        todo.push_back(std::move(y));
      }
    }
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->kind_ = Kind::Permutation;
  g->degree_ = degree;
  g->perms_.assign(seen.begin(), seen.end());  // sorted; identity is the least image array
  g->size_ = static_cast<int>(g->perms_.size());
  for (int a = 0; a < g->size_; ++a) g->perm_index_[g->perms_[a]] = a;
  int n = g->size_;
  g->mul_.resize(static_cast<std::size_t>(n) * n);
  g->inv_.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g->mul_[static_cast<std::size_t>(a) * n + b] = g->perm_index_.at(compose(g->perms_[a], g->perms_[b]));
    g->inv_[a] = g->perm_index_.at(invert(g->perms_[a]));
  }
  for (const auto& s : gens) {
    int idx = g->perm_index_.at(s);
    if (idx != 0 && std::find(g->gens_.begin(), g->gens_.end(), idx) == g->gens_.end()) g->gens_.push_back(idx);
  }
  g->finish();
  return g;
}

GroupPtr FiniteGroup::symmetric(int n, int cap) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation t(n), c(n);
    for (int i = 0; i < n; ++i) {
      t[i] = i;
      c[i] = (i + 1) % n;
    }
    std::swap(t[0], t[1]);
    gens.push_back(t);
    if (n > 2) gens.push_back(c);
  }
  return from_permutations(std::max(n, 1), gens, cap);
}

GroupPtr FiniteGroup::cyclic_product(const std::vector<int>& orders, int cap) {
  long long total = 1;
  for (int m : orders) {
    if (m < 1) throw ValidationError("cyclic order must be positive");
    total *= m;
    if (total > cap) throw ValidationError("group size exceeds the size cap of " + std::to_string(cap));
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->kind_ = Kind::CyclicProduct;
  g->orders_ = orders;
  int n = static_cast<int>(total);
  g->size_ = n;
  auto encode = [&](const std::vector<int>& d) {
    int idx = 0;
    for (std::size_t k = 0; k < orders.size(); ++k) idx = idx * orders[k] + d[k];
    return idx;
  };
  g->mul_.resize(static_cast<std::size_t>(n) * n);
  g->inv_.resize(n);
  for (int a = 0; a < n; ++a) {
    auto da = g->cyclic_digits(a);
    std::vector<int> neg(orders.size());
    for (std::size_t k = 0; k < orders.size(); ++k) neg[k] = (orders[k] - da[k]) % orders[k];
    g->inv_[a] = encode(neg);
    for (int b = 0; b < n; ++b) {
      auto db = g->cyclic_digits(b);
      for (std::size_t k = 0; k < orders.size(); ++k) db[k] = (da[k] + db[k]) % orders[k];
      g->mul_[static_cast<std::size_t>(a) * n + b] = encode(db);
    }
  }
  for (std::size_t k = 0; k < orders.size(); ++k) {
    if (orders[k] == 1) continue;
    std::vector<int> d(orders.size(), 0);
    d[k] = 1;
    g->gens_.push_back(encode(d));
  }
  g->finish();
  return g;
}

void FiniteGroup::finish() {
  for (int a = 0; a < size_; ++a) label_index_[label(a)] = a;
}

std::vector<int> FiniteGroup::cyclic_digits(int a) const {
  std::vector<int> d(orders_.size());
  for (std::size_t k = orders_.size(); k-- > 0;) {
    d[k] = a % orders_[k];
    a /= orders_[k];
  }
  return d;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  int x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

int FiniteGroup::find_permutation(const Permutation& p) const {
  auto it = perm_index_.find(p);
  return it == perm_index_.end() ? -1 : it->second;
}

std::string FiniteGroup::label(int a) const {
  switch (kind_) {
    case Kind::Permutation:
      return cycle_string(perms_[a]);
    case Kind::CyclicProduct: {
      std::string out = "(";
      auto d = cyclic_digits(a);
      for (std::size_t k = 0; k < d.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(d[k]);
      }
      return out + ")";
    }
    case Kind::Table:
      break;
  }
  return "g" + std::to_string(a);
}

int FiniteGroup::find(const std::string& text) const {
  auto it = label_index_.find(text);
  if (it != label_index_.end()) return it->second;
  if (kind_ == Kind::Permutation) {
    // normalise spacing and cycle rotation by parsing cycle notation
    Permutation p(degree_);
    for (int i = 0; i < degree_; ++i) p[i] = i;
    std::size_t pos = 0;
    bool ok = true;
    Permutation acc = p;
    while (ok && pos < text.size()) {
      if (text[pos] == ' ') {
        ++pos;
        continue;
      }
      if (text[pos] != '(') {
        ok = false;
        break;
      }
      auto close = text.find(')', pos);
      if (close == std::string::npos) {
        ok = false;
        break;
      }
      std::vector<int> pts;
      std::string cur;
      for (std::size_t k = pos + 1; k <= close; ++k) {
        char ch = text[k];
        if (ch >= '0' && ch <= '9') {
          cur += ch;
        } else if (!cur.empty()) {
          pts.push_back(std::stoi(cur) - 1);
          cur.clear();
        }
      }
      Permutation cyc = p;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (pts[k] < 0 || pts[k] >= degree_) ok = false;
      }
      if (!ok) break;
      for (std::size_t k = 0; k < pts.size(); ++k) cyc[pts[k]] = pts[(k + 1) % pts.size()];
      if (!is_permutation(cyc)) {
        ok = false;
        break;
      }
      acc = compose(acc, cyc);
      pos = close + 1;
    }
    if (ok) {
      int idx = find_permutation(acc);
      if (idx >= 0) return idx;
    }
  }
  if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    long v = std::stol(text);
    if (v >= 0 && v < size_) return static_cast<int>(v);
  }
  throw ValidationError("unknown group element '" + text + "'");
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<bool> seen(size_, false);
  std::vector<std::vector<int>> out;
  for (int a = 0; a < size_; ++a) {
    if (seen[a]) continue;
    std::set<int> cls;
    for (int h = 0; h < size_; ++h) cls.insert(conj(h, a));
    for (int c : cls) seen[c] = true;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

std::vector<int> FiniteGroup::centralizer(int a) const {
  std::vector<int> out;
  for (int h = 0; h < size_; ++h)
    if (commute(h, a)) out.push_back(h);
  return out;
}

}  // namespace tqdh
