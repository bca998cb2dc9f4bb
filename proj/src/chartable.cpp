#include "gpm/chartable.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "gpm/errors.hpp"

namespace gpm {

namespace {

std::vector<int> cycle_type(const FiniteGroup& g, int elem) {
  // one-line permutation names like "231"
  const std::string& nm = g.name(elem);
  int n = (int)nm.size();
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = nm[i] - '1';
  std::vector<bool> seen(n, false);
  std::vector<int> type;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img[j];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

int s4_type_index(const std::vector<int>& t) {
  if (t == std::vector<int>{1, 1, 1, 1}) return 0;
  if (t == std::vector<int>{2, 1, 1}) return 1;
  if (t == std::vector<int>{2, 2}) return 2;
  if (t == std::vector<int>{3, 1}) return 3;
  return 4;  // {4}
}

}  // namespace

void validate_character_table(const CharacterTable& t) {
  int k = (int)t.classes.size();
  if ((int)t.chi.size() != k)
    throw validation_error("character table must have one irrep per class");
  for (const auto& row : t.chi)
    if ((int)row.size() != k) throw validation_error("character row length mismatch");
  int order = t.group->order();

  // identity class must be class 0
  if (t.class_of[t.group->identity()] != 0)
    throw validation_error("identity class must come first");

  Int dim_sq = 0;
  for (int i = 0; i < k; ++i) {
    Cyclotomic d = t.chi[i][0];
    if (!d.is_rational_integer() || d.to_integer() < 1)
      throw validation_error("irrep dimension must be a positive integer");
    dim_sq += d.to_integer() * d.to_integer();
  }
  if (dim_sq != order)
    throw validation_error("sum of squared dimensions != group order");

  int e = t.zeta_order;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      Cyclotomic acc(e, Int(0));
      for (int c = 0; c < k; ++c) {
        Cyclotomic term = t.chi[i][c] * t.chi[j][c].conjugate();
        acc += term * Cyclotomic(e, Int((long)t.classes[c].size()));
      }
      Cyclotomic expect(e, i == j ? Int(order) : Int(0));
      if (!(acc == expect))
        throw validation_error("row orthogonality fails for irreps " + std::to_string(i) +
                               "," + std::to_string(j));
    }

  int all_ones = 0;
  for (int i = 0; i < k; ++i) {
    bool ones = true;
    for (int c = 0; c < k && ones; ++c)
      ones = t.chi[i][c].is_rational_integer() && t.chi[i][c].to_integer() == 1;
    if (ones) ++all_ones;
  }
  if (all_ones != 1) throw validation_error("expected exactly one all-ones row");
  for (int c = 0; c < k; ++c)
    if (!(t.chi[0][c].is_rational_integer() && t.chi[0][c].to_integer() == 1))
      throw validation_error("trivial character must be row 0");
}

namespace {

CharacterTable assemble(const GroupPtr& g, int e, int irrep_count,
                        const std::function<Cyclotomic(int, int)>& value,
                        CharacterTable::Source source) {
  CharacterTable t;
  t.group = g;
  t.classes = conjugacy_classes(*g);
  t.class_of.assign(g->order(), -1);
  for (int c = 0; c < (int)t.classes.size(); ++c)
    for (int x : t.classes[c]) t.class_of[x] = c;
  t.zeta_order = e;
  t.source = source;
  if (irrep_count != (int)t.classes.size())
    throw consistency_error("irrep count != class count");
  for (int i = 0; i < irrep_count; ++i) {
    std::vector<Cyclotomic> row;
    for (const auto& cls : t.classes) row.push_back(value(i, cls.front()));
    t.chi.push_back(std::move(row));
  }
  // put the all-ones row first (builtins already satisfy this)
  for (int i = 0; i < irrep_count; ++i) {
    bool ones = true;
    for (const auto& v : t.chi[i])
      if (!(v.is_rational_integer() && v.to_integer() == 1)) {
        ones = false;
        break;
      }
    if (ones) {
      if (i != 0) std::swap(t.chi[0], t.chi[i]);
      break;
    }
  }
  for (const auto& row : t.chi) t.dims.push_back(row[0].to_integer());
  validate_character_table(t);
  return t;
}

}  // namespace

CharacterTable character_table(const GroupPtr& g, int zeta_order) {
  int e = zeta_order == 0 ? g->exponent() : zeta_order;
  if (e % g->exponent() != 0)
    throw domain_error("zeta order must be a multiple of the group exponent");
  using Fam = FiniteGroup::Family;

  switch (g->family()) {
    case Fam::cyclic: {
      int n = g->params()[0];
      auto value = [e, n](int j, int a) { return Cyclotomic::zeta(e, (long)(e / n) * j * a); };
      return assemble(g, e, n, value, CharacterTable::Source::builtin);
    }
    case Fam::abelian_product: {
      std::vector<int> orders = g->params();
      int k = (int)orders.size();
      auto decode = [orders, k](int idx) {
        std::vector<int> t(k);
        for (int i = k - 1; i >= 0; --i) {
          t[i] = idx % orders[i];
          idx /= orders[i];
        }
        return t;
      };
      auto value = [e, orders, k, decode](int j, int a) {
        auto jt = decode(j), at = decode(a);
        long pw = 0;
        for (int i = 0; i < k; ++i) pw += (long)(e / orders[i]) * jt[i] * at[i];
        return Cyclotomic::zeta(e, pw);
      };
      return assemble(g, e, g->order(), value, CharacterTable::Source::builtin);
    }
    case Fam::dihedral: {
      int n = g->params()[0];
      int linears = n % 2 == 0 ? 4 : 2;
      int twodims = n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2;
      auto value = [e, n, linears](int i, int g_elem) {
        bool refl = g_elem >= n;
        int a = g_elem % n;
        if (i < linears) {
          int v = 1;
          if (i == 1 && refl) v = -1;
          if (i == 2) v = (a % 2 == 0 ? 1 : -1);
          if (i == 3) v = ((a + (refl ? 1 : 0)) % 2 == 0 ? 1 : -1);
          return Cyclotomic(e, Int(v));
        }
        int j = i - linears + 1;
        if (refl) return Cyclotomic(e, Int(0));
        return Cyclotomic::zeta(e, (long)(e / n) * j * a) +
               Cyclotomic::zeta(e, -(long)(e / n) * j * a);
      };
      return assemble(g, e, linears + twodims, value, CharacterTable::Source::builtin);
    }
    case Fam::symmetric: {
      int n = g->params()[0];
      if (n > 4)
        throw capability_error("built-in symmetric character tables stop at S4; "
                               "supply a table file");
      if (n == 1) {
        auto value = [e](int, int) { return Cyclotomic(e, Int(1)); };
        return assemble(g, e, 1, value, CharacterTable::Source::builtin);
      }
      if (n == 2) {
        auto value = [e, g](int i, int elem) {
          auto t = cycle_type(*g, elem);
          int sign = t[0] == 2 ? -1 : 1;
          return Cyclotomic(e, Int(i == 0 ? 1 : sign));
        };
        return assemble(g, e, 2, value, CharacterTable::Source::builtin);
      }
      if (n == 3) {
        auto value = [e, g](int i, int elem) {
          auto t = cycle_type(*g, elem);
          int ti = t[0] == 1 ? 0 : (t[0] == 2 ? 1 : 2);
          static const int table[3][3] = {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
          return Cyclotomic(e, Int(table[i][ti]));
        };
        return assemble(g, e, 3, value, CharacterTable::Source::builtin);
      }
      auto value = [e, g](int i, int elem) {
        int ti = s4_type_index(cycle_type(*g, elem));
        static const int table[5][5] = {{1, 1, 1, 1, 1},
                                        {1, -1, 1, 1, -1},
                                        {2, 0, 2, -1, 0},
                                        {3, 1, -1, 0, -1},
                                        {3, -1, -1, 0, 1}};
        return Cyclotomic(e, Int(table[i][ti]));
      };
      return assemble(g, e, 5, value, CharacterTable::Source::builtin);
    }
    case Fam::quaternion: {
      auto value = [e](int i, int elem) {
        int axis = elem / 2;          // 0:1 1:i 2:j 3:k
        int sign = elem % 2 ? -1 : 1;
        if (i == 4) {  // two-dimensional
          if (axis == 0) return Cyclotomic(e, Int(2 * sign));
          return Cyclotomic(e, Int(0));
        }
        if (i == 0 || axis == 0) return Cyclotomic(e, Int(1));
        // i=1 kernel {1,i}, i=2 kernel {1,j}, i=3 kernel {1,k}
        return Cyclotomic(e, Int(axis == i ? 1 : -1));
      };
      return assemble(g, e, 5, value, CharacterTable::Source::builtin);
    }
    case Fam::table:
      throw capability_error("no built-in character table for a generic Cayley table; "
                             "supply a table file");
  }
  throw consistency_error("unhandled group family");
}

CharacterTable character_table_from_stream(const GroupPtr& g, std::istream& in,
                                           int zeta_order) {
  std::string tok;
  if (!(in >> tok) || tok != "classes")
    throw validation_error("character file must start with 'classes k zeta e'");
  int k, e_file;
  if (!(in >> k)) throw validation_error("bad class count");
  if (!(in >> tok) || tok != "zeta") throw validation_error("expected 'zeta e'");
  if (!(in >> e_file) || e_file < 1) throw validation_error("bad zeta order");

  auto classes = conjugacy_classes(*g);
  if ((int)classes.size() != k)
    throw validation_error("class count " + std::to_string(k) + " != computed " +
                           std::to_string(classes.size()));
  for (int c = 0; c < k; ++c) {
    long sz;
    if (!(in >> sz)) throw validation_error("class sizes line truncated");
    if (sz != (long)classes[c].size())
      throw validation_error("class size mismatch at class " + std::to_string(c));
  }

  int e = zeta_order == 0 ? e_file : zeta_order;
  if (e % e_file != 0)
    throw domain_error("requested zeta order incompatible with file");

  std::vector<std::vector<Cyclotomic>> rows(k);
  for (int i = 0; i < k; ++i)
    for (int c = 0; c < k; ++c) {
      if (!(in >> tok)) throw validation_error("character rows truncated");
      // parse in the file's ring, then re-embed in Z[zeta_e]
      Cyclotomic v = parse_cyclotomic(e_file, tok);
      Cyclotomic out(e, Int(0));
      const auto& coeffs = v.coeffs();
      for (size_t p = 0; p < coeffs.size(); ++p) {
        if (coeffs[p] == 0) continue;
        out += Cyclotomic::zeta(e, (long)(e / e_file) * (long)p) *
               Cyclotomic(e, coeffs[p]);
      }
      rows[i].push_back(out);
    }

  CharacterTable t;
  t.group = g;
  t.classes = classes;
  t.class_of.assign(g->order(), -1);
  for (int c = 0; c < k; ++c)
    for (int x : classes[c]) t.class_of[x] = c;
  t.zeta_order = e;
  t.chi = std::move(rows);
  t.source = CharacterTable::Source::file;
  for (int i = 0; i < k; ++i) {
    bool ones = true;
    for (const auto& v : t.chi[i])
      if (!(v.is_rational_integer() && v.to_integer() == 1)) {
        ones = false;
        break;
      }
    if (ones) {
      if (i != 0) std::swap(t.chi[0], t.chi[i]);
      break;
    }
  }
  for (const auto& row : t.chi) {
    if (!row[0].is_rational_integer())
      throw validation_error("irrep dimension is not an integer");
    t.dims.push_back(row[0].to_integer());
  }
  validate_character_table(t);
  return t;
}

CharacterTable character_table_from_file(const GroupPtr& g, const std::string& path,
                                         int zeta_order) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open character table file: " + path);
  return character_table_from_stream(g, in, zeta_order);
}

}  // namespace gpm
