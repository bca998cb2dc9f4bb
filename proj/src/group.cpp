#include "gpm/group.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace gpm {

namespace {

long lcm_of(long a, long b) { return std::lcm(a, b); }

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<int> mul_table, std::vector<std::string> names,
                         Family family, std::vector<int> params)
    : mul_(std::move(mul_table)), names_(std::move(names)), family_(family),
      params_(std::move(params)) {
  size_t n2 = mul_.size();
  int n = (int)std::lround(std::sqrt((double)n2));
  if ((size_t)n * n != n2 || n < 1)
    throw validation_error("multiplication table is not square");
  order_ = n;
  for (int v : mul_)
    if (v < 0 || v >= n) throw validation_error("table entry out of range");
  if (names_.empty()) {
    for (int i = 0; i < n; ++i) names_.push_back("g" + std::to_string(i));
  }
  if ((int)names_.size() != n) throw validation_error("name count != order");
  {
    std::set<std::string> uniq(names_.begin(), names_.end());
    if ((int)uniq.size() != n) throw validation_error("element names must be distinct");
  }

  // identity
  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g)
      ok = mul(e, g) == g && mul(g, e) == g;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw validation_error("no two-sided identity element");

  // inverses
  inv_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (mul(g, h) == identity_ && mul(h, g) == identity_) {
        inv_[g] = h;
        break;
      }
    }
    if (inv_[g] < 0)
      throw validation_error("element '" + names_[g] + "' has no inverse");
  }

  // associativity: all triples up to order 512, deterministic sample above
  auto check_triple = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw validation_error("associativity fails at (" + names_[a] + "," + names_[b] +
                             "," + names_[c] + ")");
  };
  if (n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    unsigned long long x = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < 2000000; ++i) {
      x ^= x << 13; x ^= x >> 7; x ^= x << 17;
      int a = (int)(x % n);
      int b = (int)((x >> 20) % n);
      int c = (int)((x >> 40) % n);
      check_triple(a, b, c);
    }
  }

  long expo = 1;
  for (int g = 0; g < n; ++g) expo = lcm_of(expo, element_order(g));
  exponent_ = (int)expo;
  for (int g = 0; g < n; ++g) {
    int p = identity_;
    for (int i = 0; i < exponent_; ++i) p = mul(p, g);
    if (p != identity_) throw validation_error("exponent check failed");
  }
}

int FiniteGroup::element_order(int g) const {
  int p = g, k = 1;
  while (p != identity_) {
    p = mul(p, g);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return order_ == other.order_ && mul_ == other.mul_;
}

std::optional<int> FiniteGroup::element_by_name(const std::string& s) const {
  for (int i = 0; i < order_; ++i)
    if (names_[i] == s) return i;
  return std::nullopt;
}

GroupPtr cyclic_group(int n) {
  if (n < 1) throw domain_error("cyclic group order must be >= 1");
  std::vector<int> mul((size_t)n * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) mul[(size_t)a * n + b] = (a + b) % n;
  }
  return std::make_shared<FiniteGroup>(std::move(mul), std::move(names),
                                       FiniteGroup::Family::cyclic, std::vector<int>{n});
}

GroupPtr symmetric_group(int n) {
  if (n < 1 || n > 6) throw domain_error("symmetric group supported for 1 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int m = (int)perms.size();
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[perms[i]] = i;
  std::vector<int> mul((size_t)m * m);
  std::vector<std::string> names(m);
  for (int a = 0; a < m; ++a) {
    std::string nm;
    for (int x : perms[a]) nm += std::to_string(x + 1);
    names[a] = nm;
    for (int b = 0; b < m; ++b) {
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      mul[(size_t)a * m + b] = index[c];
    }
  }
  return std::make_shared<FiniteGroup>(std::move(mul), std::move(names),
                                       FiniteGroup::Family::symmetric, std::vector<int>{n});
}

GroupPtr dihedral_group(int n) {
  if (n < 2) throw domain_error("dihedral group requires n >= 2");
  int m = 2 * n;
  auto idx = [n](bool refl, int a) { return (refl ? n : 0) + ((a % n) + n) % n; };
  std::vector<int> mul((size_t)m * m);
  std::vector<std::string> names(m);
  for (int a = 0; a < n; ++a) {
    names[a] = "r" + std::to_string(a);
    names[n + a] = "s" + std::to_string(a);
  }
  for (int i = 0; i < m; ++i) {
    bool ri = i >= n;
    int ai = i % n;
    for (int j = 0; j < m; ++j) {
      bool rj = j >= n;
      int aj = j % n;
      // r^a s^e * r^b s^f with s r = r^-1 s
      int out;
      if (!ri && !rj) out = idx(false, ai + aj);
      else if (!ri && rj) out = idx(true, ai + aj);
      else if (ri && !rj) out = idx(true, ai - aj);
      else out = idx(false, ai - aj);
      mul[(size_t)i * m + j] = out;
    }
  }
  return std::make_shared<FiniteGroup>(std::move(mul), std::move(names),
                                       FiniteGroup::Family::dihedral, std::vector<int>{n});
}

GroupPtr quaternion_group() {
  // 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k
  auto axis = [](int g) { return g / 2; };  // 0:1 1:i 2:j 3:k
  auto sign = [](int g) { return g % 2 == 0 ? 1 : -1; };
  auto enc = [](int ax, int sg) { return 2 * ax + (sg > 0 ? 0 : 1); };
  auto axis_mul = [](int a, int b, int& sg) {
    if (a == 0) { sg = 1; return b; }
    if (b == 0) { sg = 1; return a; }
    if (a == b) { sg = -1; return 0; }
    // cyclic i->j->k
    if ((a == 1 && b == 2)) { sg = 1; return 3; }
    if ((a == 2 && b == 3)) { sg = 1; return 1; }
    if ((a == 3 && b == 1)) { sg = 1; return 2; }
    if ((a == 2 && b == 1)) { sg = -1; return 3; }
    if ((a == 3 && b == 2)) { sg = -1; return 1; }
    /* a==1 && b==3 */ sg = -1; return 2;
  };
  std::vector<int> mul(64);
  for (int g = 0; g < 8; ++g)
    for (int h = 0; h < 8; ++h) {
      int sg;
      int ax = axis_mul(axis(g), axis(h), sg);
      mul[(size_t)g * 8 + h] = enc(ax, sg * sign(g) * sign(h));
    }
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return std::make_shared<FiniteGroup>(std::move(mul), std::move(names),
                                       FiniteGroup::Family::quaternion, std::vector<int>{8});
}

GroupPtr abelian_product_group(const std::vector<int>& orders) {
  if (orders.empty()) throw domain_error("abelian product needs at least one factor");
  long n = 1;
  for (int o : orders) {
    if (o < 1) throw domain_error("abelian factor order must be >= 1");
    n *= o;
    if (n > 1024) throw scale_error("abelian product too large for an explicit table");
  }
  int k = (int)orders.size();
  auto decode = [&](int g) {
    std::vector<int> t(k);
    for (int i = k - 1; i >= 0; --i) {
      t[i] = g % orders[i];
      g /= orders[i];
    }
    return t;
  };
  auto encode = [&](const std::vector<int>& t) {
    int g = 0;
    for (int i = 0; i < k; ++i) g = g * orders[i] + t[i];
    return g;
  };
  std::vector<int> mul((size_t)n * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    auto ta = decode(a);
    std::string nm;
    for (int i = 0; i < k; ++i) {
      if (i) nm += ",";
      nm += std::to_string(ta[i]);
    }
    names[a] = nm;
    for (int b = 0; b < n; ++b) {
      auto tb = decode(b);
      std::vector<int> tc(k);
      for (int i = 0; i < k; ++i) tc[i] = (ta[i] + tb[i]) % orders[i];
      mul[(size_t)a * n + b] = encode(tc);
    }
  }
  return std::make_shared<FiniteGroup>(std::move(mul), std::move(names),
                                       FiniteGroup::Family::abelian_product, orders);
}

GroupPtr group_from_table_stream(std::istream& in) {
  std::string tok;
  if (!(in >> tok) || tok != "order") throw validation_error("table file must start with 'order N'");
  long n;
  if (!(in >> n) || n < 1 || n > 4096) throw validation_error("bad order in table file");
  std::vector<int> mul((size_t)n * n);
  for (auto& v : mul) {
    long x;
    if (!(in >> x)) throw validation_error("table file truncated");
    if (x < 0 || x >= n) throw validation_error("table entry out of range");
    v = (int)x;
  }
  std::vector<std::string> names;
  if (in >> tok) {
    if (tok != "names") throw validation_error("unexpected token '" + tok + "' in table file");
    names.resize(n);
    for (auto& s : names)
      if (!(in >> s)) throw validation_error("names block truncated");
  }
  return std::make_shared<FiniteGroup>(std::move(mul), std::move(names),
                                       FiniteGroup::Family::table, std::vector<int>{});
}

GroupPtr group_from_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open table file: " + path);
  return group_from_table_stream(in);
}

GroupPtr construct_group(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw domain_error("bad group spec: " + spec);
  std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "cyclic") return cyclic_group(std::stoi(arg));
  if (kind == "symmetric") return symmetric_group(std::stoi(arg));
  if (kind == "dihedral") return dihedral_group(std::stoi(arg));
  if (kind == "quaternion") {
    if (arg != "8") throw domain_error("only quaternion:8 is supported");
    return quaternion_group();
  }
  if (kind == "abelian") {
    std::vector<int> orders;
    std::stringstream ss(arg);
    std::string part;
    while (std::getline(ss, part, 'x')) orders.push_back(std::stoi(part));
    return abelian_product_group(orders);
  }
  if (kind == "table") return group_from_table_file(arg);
  throw domain_error("unknown group kind: " + kind);
}

GroupProduct::GroupProduct(std::vector<GroupPtr> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_)
    if (!f) throw domain_error("null factor in product");
}

Tuple GroupProduct::identity() const {
  Tuple t(arity());
  for (int i = 0; i < arity(); ++i) t[i] = factors_[i]->identity();
  return t;
}

Tuple GroupProduct::mul(const Tuple& a, const Tuple& b) const {
  Tuple t(arity());
  for (int i = 0; i < arity(); ++i) t[i] = factors_[i]->mul(a[i], b[i]);
  return t;
}

Tuple GroupProduct::inv(const Tuple& a) const {
  Tuple t(arity());
  for (int i = 0; i < arity(); ++i) t[i] = factors_[i]->inv(a[i]);
  return t;
}

bool GroupProduct::valid_tuple(const Tuple& t) const {
  if ((int)t.size() != arity()) return false;
  for (int i = 0; i < arity(); ++i)
    if (t[i] < 0 || t[i] >= factors_[i]->order()) return false;
  return true;
}

Int GroupProduct::order() const { return order_of_subset(full_mask(arity())); }

Int GroupProduct::order_of_subset(Mask s) const {
  Int out = 1;
  for (int i : bits_of(s)) out *= factors_[i]->order();
  return out;
}

bool GroupProduct::homogeneous() const {
  for (int i = 1; i < arity(); ++i)
    if (!factors_[i]->same_table(*factors_[0])) return false;
  return true;
}

GroupProduct GroupProduct::restricted(Mask s) const {
  std::vector<GroupPtr> f;
  for (int i : bits_of(s)) f.push_back(factors_[i]);
  return GroupProduct(std::move(f));
}

std::string GroupProduct::tuple_name(const Tuple& t) const {
  std::string out;
  for (int i = 0; i < arity(); ++i) {
    if (i) out += "|";
    out += factors_[i]->name(t[i]);
  }
  return out;
}

Subgroup::Subgroup(GroupProduct parent, std::vector<Tuple> elements,
                   std::vector<Tuple> generators)
    : parent_(std::move(parent)), elements_(std::move(elements)),
      generators_(std::move(generators)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty()) throw validation_error("subgroup has no elements");
  // closure + inverse + identity + Lagrange
  if (!std::binary_search(elements_.begin(), elements_.end(), parent_.identity()))
    throw validation_error("subgroup misses identity tuple");
  for (const auto& a : elements_) {
    if (!parent_.valid_tuple(a)) throw validation_error("invalid tuple in subgroup");
    if (!std::binary_search(elements_.begin(), elements_.end(), parent_.inv(a)))
      throw validation_error("subgroup not closed under inverse");
  }
  // full product check at desk scale, sampled for very large element lists
  if (elements_.size() <= 5000) {
    for (const auto& a : elements_)
      for (const auto& b : elements_)
        if (!std::binary_search(elements_.begin(), elements_.end(), parent_.mul(a, b)))
          throw validation_error("subgroup not closed under product");
  } else {
    unsigned long long x = 0x2545f4914f6cdd1dull;
    size_t m = elements_.size();
    for (int i = 0; i < 200000; ++i) {
      x ^= x << 13; x ^= x >> 7; x ^= x << 17;
      const Tuple& a = elements_[x % m];
      const Tuple& b = elements_[(x >> 24) % m];
      if (!std::binary_search(elements_.begin(), elements_.end(), parent_.mul(a, b)))
        throw validation_error("subgroup not closed under product");
    }
  }
  Int g = parent_.order();
  if (!divides(Int((long)elements_.size()), g))
    throw validation_error("subgroup order does not divide group order");
}

Subgroup::Subgroup(trusted_t, GroupProduct parent, std::vector<Tuple> sorted_elements,
                   std::vector<Tuple> generators)
    : parent_(std::move(parent)), elements_(std::move(sorted_elements)),
      generators_(std::move(generators)) {}

bool Subgroup::contains(const Tuple& t) const {
  return std::binary_search(elements_.begin(), elements_.end(), t);
}

GroupProduct direct_product(std::vector<GroupPtr> factors) {
  if (factors.empty()) throw domain_error("product needs at least one factor");
  return GroupProduct(std::move(factors));
}

Subgroup subgroup_closure(const GroupProduct& parent, const std::vector<Tuple>& generators,
                          size_t cap) {
  for (const auto& g : generators)
    if (!parent.valid_tuple(g)) throw domain_error("generator tuple invalid for product");
  std::set<Tuple> elems;
  elems.insert(parent.identity());
  std::queue<Tuple> work;
  work.push(parent.identity());
  while (!work.empty()) {
    Tuple a = std::move(work.front());
    work.pop();
    for (const auto& g : generators) {
      Tuple b = parent.mul(a, g);
      if (elems.insert(b).second) {
        if (elems.size() > cap)
          throw scale_error("subgroup closure exceeds cap of " + std::to_string(cap));
        work.push(std::move(b));
      }
    }
  }
  return Subgroup(parent, std::vector<Tuple>(elems.begin(), elems.end()), generators);
}

Subgroup trivial_subgroup(const GroupProduct& parent) {
  return Subgroup(parent, {parent.identity()});
}

Subgroup full_subgroup(const GroupProduct& parent) {
  Int n = parent.order();
  if (n > 1000000) throw scale_error("full subgroup too large to materialize");
  std::vector<Tuple> all;
  Tuple t(parent.arity(), 0);
  while (true) {
    all.push_back(t);
    int i = parent.arity() - 1;
    while (i >= 0) {
      if (++t[i] < parent.factor(i).order()) break;
      t[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return Subgroup(parent, std::move(all));
}

Subgroup project(const Subgroup& h, Mask s) {
  GroupProduct sub = h.parent().restricted(s);
  auto bits = bits_of(s);
  std::set<Tuple> elems;
  for (const auto& t : h.elements()) {
    Tuple p(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) p[i] = t[bits[i]];
    elems.insert(std::move(p));
  }
  std::vector<Tuple> gens;
  for (const auto& t : h.generators()) {
    Tuple p(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) p[i] = t[bits[i]];
    gens.push_back(std::move(p));
  }
  return Subgroup(std::move(sub), std::vector<Tuple>(elems.begin(), elems.end()), gens);
}

Subgroup kernel_contract(const Subgroup& h, Mask s) {
  Mask full = full_mask(h.parent().arity());
  if (!subset_of(s, full)) throw domain_error("subset outside ground set");
  if (s == full) throw domain_error("kernel contraction by the full ground set");
  auto sbits = bits_of(s);
  Mask rest = full & ~s;
  auto rbits = bits_of(rest);
  GroupProduct sub = h.parent().restricted(rest);
  std::vector<Tuple> elems;
  for (const auto& t : h.elements()) {
    bool in_kernel = true;
    for (int i : sbits)
      if (t[i] != h.parent().factor(i).identity()) {
        in_kernel = false;
        break;
      }
    if (!in_kernel) continue;
    Tuple p(rbits.size());
    for (size_t i = 0; i < rbits.size(); ++i) p[i] = t[rbits[i]];
    elems.push_back(std::move(p));
  }
  return Subgroup(std::move(sub), std::move(elems));
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  int n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::set<int> orbit;
    for (int h = 0; h < n; ++h) orbit.insert(g.mul(g.mul(h, a), g.inv(h)));
    std::vector<int> cls(orbit.begin(), orbit.end());
    for (int x : cls) seen[x] = true;
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::vector<int>> automorphisms(const FiniteGroup& g, int cap) {
  int n = g.order();
  if (n > cap)
    throw scale_error("automorphism search capped at order " + std::to_string(cap));

  // greedy generating set
  std::vector<int> gens;
  std::vector<bool> generated(n, false);
  auto regen = [&]() {
    std::fill(generated.begin(), generated.end(), false);
    std::set<int> elems = {g.identity()};
    std::queue<int> work;
    work.push(g.identity());
    while (!work.empty()) {
      int a = work.front();
      work.pop();
      for (int x : gens) {
        int b = g.mul(a, x);
        if (elems.insert(b).second) work.push(b);
      }
    }
    for (int e : elems) generated[e] = true;
  };
  regen();
  for (int a = 0; a < n; ++a)
    if (!generated[a]) {
      gens.push_back(a);
      regen();
    }

  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    int ord = g.element_order(gens[i]);
    for (int b = 0; b < n; ++b)
      if (g.element_order(b) == ord) candidates[i].push_back(b);
  }

  std::vector<std::vector<int>> result;
  std::vector<int> choice(gens.size(), 0);
  std::vector<int> img(n);
  auto try_build = [&]() -> bool {
    std::fill(img.begin(), img.end(), -1);
    img[g.identity()] = g.identity();
    std::vector<int> known = {g.identity()};
    for (size_t i = 0; i < gens.size(); ++i) {
      int c = candidates[i][choice[i]];
      if (img[gens[i]] != -1) {
        if (img[gens[i]] != c) return false;
      } else {
        img[gens[i]] = c;
        known.push_back(gens[i]);
      }
    }
    // close the partial map under products until a fixpoint
    bool changed = true;
    while (changed) {
      changed = false;
      size_t sz = known.size();
      for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j) {
          int a = known[i], b = known[j];
          int c = g.mul(a, b);
          int fc = g.mul(img[a], img[b]);
          if (img[c] == -1) {
            img[c] = fc;
            known.push_back(c);
            changed = true;
          } else if (img[c] != fc) {
            return false;
          }
        }
    }
    if ((int)known.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (int a = 0; a < n; ++a) {
      if (hit[img[a]]) return false;
      hit[img[a]] = true;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (img[g.mul(a, b)] != g.mul(img[a], img[b])) return false;
    return true;
  };

  while (true) {
    if (try_build()) result.push_back(img);
    int i = (int)gens.size() - 1;
    while (i >= 0) {
      if (++choice[i] < (int)candidates[i].size()) break;
      choice[i] = 0;
      --i;
    }
    if (i < 0) break;
    if (gens.empty()) break;
  }
  if (gens.empty()) result.push_back(std::vector<int>{g.identity()});
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<Subgroup> enumerate_subgroups(const GroupProduct& g, long order_cap,
                                          size_t count_cap) {
  if (g.order() > order_cap)
    throw scale_error("subgroup enumeration capped at group order " +
                      std::to_string(order_cap));
  Subgroup whole = full_subgroup(g);
  const std::vector<Tuple>& elems = whole.elements();
  int n = (int)elems.size();

  // packed multiplication table over element indices
  std::map<Tuple, int> index;
  for (int i = 0; i < n; ++i) index[elems[i]] = i;
  std::vector<int> mul((size_t)n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[(size_t)a * n + b] = index[g.mul(elems[a], elems[b])];
  int id = index[g.identity()];

  using Bits = std::vector<unsigned long long>;
  size_t words = (n + 63) / 64;
  auto test = [&](const Bits& s, int i) { return (s[i / 64] >> (i % 64)) & 1ull; };
  auto set_bit = [](Bits& s, int i) { s[i / 64] |= 1ull << (i % 64); };

  // closure over packed indices; generators are index lists
  std::vector<int> queue_buf;
  auto closure = [&](const std::vector<int>& gens) {
    Bits bits(words, 0);
    set_bit(bits, id);
    queue_buf.clear();
    queue_buf.push_back(id);
    for (size_t qi = 0; qi < queue_buf.size(); ++qi) {
      int a = queue_buf[qi];
      for (int ge : gens) {
        int b = mul[(size_t)a * n + ge];
        if (!test(bits, b)) {
          set_bit(bits, b);
          queue_buf.push_back(b);
        }
      }
    }
    return bits;
  };

  std::set<Bits> seen;
  std::vector<Bits> subs;
  std::vector<std::vector<int>> sub_gens;
  auto add = [&](const std::vector<int>& gens) {
    Bits bits = closure(gens);
    if (seen.insert(bits).second) {
      subs.push_back(std::move(bits));
      sub_gens.push_back(gens);
      if (subs.size() > count_cap)
        throw scale_error("subgroup count exceeds cap of " + std::to_string(count_cap));
    }
  };

  add({});
  for (int e = 0; e < n; ++e) add({e});
  // every subgroup is a join of cyclic subgroups: adjoin one element at a time
  for (size_t i = 0; i < subs.size(); ++i) {
    for (int e = 0; e < n; ++e) {
      if (test(subs[i], e)) continue;
      std::vector<int> gens = sub_gens[i];
      gens.push_back(e);
      add(gens);
    }
  }

  std::vector<size_t> order_idx(subs.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  auto popcount_of = [&](const Bits& b) {
    long c = 0;
    for (auto w : b) c += __builtin_popcountll(w);
    return c;
  };
  std::sort(order_idx.begin(), order_idx.end(), [&](size_t a, size_t b) {
    long ca = popcount_of(subs[a]), cb = popcount_of(subs[b]);
    if (ca != cb) return ca < cb;
    return subs[a] < subs[b];
  });
  std::vector<Subgroup> out;
  out.reserve(subs.size());
  for (size_t i : order_idx) {
    std::vector<Tuple> members;
    for (int e = 0; e < n; ++e)
      if (test(subs[i], e)) members.push_back(elems[e]);
    std::vector<Tuple> gens;
    for (int ge : sub_gens[i]) gens.push_back(elems[ge]);
    out.emplace_back(Subgroup::trusted_t{}, g, std::move(members), std::move(gens));
  }
  return out;
}

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, long order_cap,
                                          size_t count_cap) {
  return enumerate_subgroups(GroupProduct({g}), order_cap, count_cap);
}

std::vector<Tuple> parse_generators(const GroupProduct& parent, std::istream& in) {
  std::vector<Tuple> gens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> parts;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, '|')) parts.push_back(trim(part));
    if ((int)parts.size() != parent.arity())
      throw validation_error("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(parent.arity()) + " coordinates");
    Tuple tup(parent.arity());
    for (int i = 0; i < parent.arity(); ++i) {
      auto e = parent.factor(i).element_by_name(parts[i]);
      if (!e)
        throw validation_error("line " + std::to_string(lineno) + ": unknown element '" +
                               parts[i] + "' in factor " + std::to_string(i + 1));
      tup[i] = *e;
    }
    gens.push_back(std::move(tup));
  }
  return gens;
}

Subgroup subgroup_from_file(const GroupProduct& parent, const std::string& path, size_t cap) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open generator file: " + path);
  auto gens = parse_generators(parent, in);
  return subgroup_closure(parent, gens, cap);
}

}  // namespace gpm
