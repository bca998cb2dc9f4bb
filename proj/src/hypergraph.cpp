#include "gpm/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "gpm/errors.hpp"

namespace gpm {

Hypergraph parse_hypergraph(std::istream& in) {
  Hypergraph h;
  std::map<std::string, int> index;
  auto vertex = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    int id = (int)h.vertices.size();
    h.vertices.push_back(name);
    index[name] = id;
    return id;
  };
  std::string line;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "vertex") {
      for (size_t i = 1; i < toks.size(); ++i) vertex(toks[i]);
      continue;
    }
    std::vector<int> edge;
    for (const auto& name : toks) edge.push_back(vertex(name));
    std::sort(edge.begin(), edge.end());
    h.edges.push_back(std::move(edge));
  }
  for (const auto& e : h.edges)
    if (e.empty()) throw validation_error("empty hyperedge");
  return h;
}

Hypergraph hypergraph_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open hypergraph file: " + path);
  return parse_hypergraph(in);
}

StarGraphMatrix star_graph(const Hypergraph& h, bool min_anchor) {
  StarGraphMatrix m;
  m.rows = (long)h.vertices.size();
  long cols = 0;
  for (const auto& e : h.edges) cols += (long)e.size() - 1;
  m.cols = cols;
  m.a.assign((size_t)m.rows, std::vector<int>((size_t)cols, 0));

  std::vector<int> parent((size_t)m.rows);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  long col = 0;
  for (const auto& e : h.edges) {
    int vx = min_anchor ? e.front() : e.back();  // edges sorted by vertex index
    m.anchor.push_back(vx);
    long begin = col;
    // non-anchor incidences first (ascending vertex), loops at the anchor last
    for (int w : e) {
      if (w == vx) continue;
      m.a[w][col] = 1;
      m.a[vx][col] = -1;
      parent[find(w)] = find(vx);
      ++col;
    }
    int anchor_mult = (int)std::count(e.begin(), e.end(), vx);
    for (int i = 0; i < anchor_mult - 1; ++i) ++col;  // zero loop columns
    m.block.emplace_back((int)begin, (int)col);
  }

  std::vector<bool> seen((size_t)m.rows, false);
  int kappa = 0;
  for (int v = 0; v < m.rows; ++v) {
    int r = find(v);
    if (!seen[r]) {
      seen[r] = true;
      ++kappa;
    }
  }
  m.kappa = kappa;
  return m;
}

namespace {

long column_rank(const StarGraphMatrix& m, const std::vector<long>& cols) {
  std::vector<std::vector<Rat>> t((size_t)m.rows, std::vector<Rat>(cols.size(), Rat(0)));
  for (size_t j = 0; j < cols.size(); ++j)
    for (long r = 0; r < m.rows; ++r) t[r][j] = m.a[r][cols[j]];
  return rank_rational(std::move(t));
}

}  // namespace

IntPolymatroid hyper_polymatroid(const Hypergraph& h, bool min_anchor) {
  StarGraphMatrix m = star_graph(h, min_anchor);
  int n = (int)h.edges.size();
  if (n > 20) throw scale_error("hypergraph polymatroid capped at 20 edges");
  IntPolymatroid p;
  p.n = n;
  p.rank.resize(size_t(1) << n);
  for (Mask s = 0; s < (Mask)p.rank.size(); ++s) {
    std::vector<long> cols;
    for (int x : bits_of(s))
      for (int c = m.block[x].first; c < m.block[x].second; ++c) cols.push_back(c);
    p.rank[s] = (int)column_rank(m, cols);
  }
  return p;
}

RankTable to_rank_table(const IntPolymatroid& p, const Rat& base) {
  return rank_table_from_ranks(p.n, p.rank, base);
}

AlphaVector flow_alpha(const Hypergraph& h, const Rat& base) {
  AlphaVector a;
  for (const auto& e : h.edges) {
    Rat v = rat_pow(base, (long)e.size() - 1);
    if (!is_integer(v)) throw domain_error("flow alpha needs an integer base");
    a.A.push_back(v.get_num());
  }
  return a;
}

Int count_colorings(const Hypergraph& h, long lambda, double budget) {
  if (lambda < 1) throw domain_error("lambda must be >= 1");
  long nv = (long)h.vertices.size();
  if (std::pow((double)lambda, (double)nv) > budget)
    throw scale_error("coloring enumeration exceeds the budget");
  std::vector<int> color((size_t)nv, 0);
  Int count = 0;
  while (true) {
    bool proper = true;
    for (const auto& e : h.edges) {
      bool mixed = false;
      for (int w : e)
        if (color[w] != color[e[0]]) {
          mixed = true;
          break;
        }
      if (!mixed) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
    long i = nv - 1;
    while (i >= 0) {
      if (++color[i] < lambda) break;
      color[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return count;
}

Int chromatic_value(const Hypergraph& h, long lambda) {
  if (lambda < 2) throw domain_error("chromatic evaluation needs lambda >= 2");
  StarGraphMatrix m = star_graph(h);
  RankTable p = to_rank_table(hyper_polymatroid(h), Rat(lambda));
  Rat chi = eval_at_power(char_poly(p), 1);
  Rat out = rat_pow(Rat(lambda), m.kappa) * chi;
  if (!is_integer(out)) throw consistency_error("chromatic value is not an integer");
  return out.get_num();
}

Int count_nzflows(const Hypergraph& h, const GroupPtr& gamma, double budget) {
  if (!gamma->is_abelian())
    throw capability_error("flows need a finite abelian group");
  StarGraphMatrix m = star_graph(h);
  long k = m.cols;
  if (std::pow((double)gamma->order(), (double)k) > budget)
    throw scale_error("flow enumeration exceeds the budget");
  // an edge of size 1 has an empty block, which can never be non-identity-free
  for (const auto& e : h.edges)
    if (e.size() == 1) return 0;

  // last column touching each row, for early conservation checks
  std::vector<long> last_col((size_t)m.rows, -1);
  for (long c = 0; c < k; ++c)
    for (long r = 0; r < m.rows; ++r)
      if (m.a[r][c] != 0) last_col[r] = std::max(last_col[r], c);

  int id = gamma->identity();
  std::vector<int> value((size_t)k, id);
  std::vector<std::vector<int>> partial((size_t)k + 1,
                                        std::vector<int>((size_t)m.rows, id));
  Int count = 0;

  std::function<void(long)> go = [&](long c) {
    if (c == k) {
      for (long r = 0; r < m.rows; ++r)
        if (last_col[r] == -1 && partial[c][r] != id) return;
      for (size_t x = 0; x < h.edges.size(); ++x) {
        bool nonzero = false;
        for (int j = m.block[x].first; j < m.block[x].second && !nonzero; ++j)
          nonzero = value[j] != id;
        if (!nonzero) return;
      }
      ++count;
      return;
    }
    for (int v = 0; v < gamma->order(); ++v) {
      value[c] = v;
      partial[c + 1] = partial[c];
      bool ok = true;
      for (long r = 0; r < m.rows && ok; ++r) {
        if (m.a[r][c] == 1)
          partial[c + 1][r] = gamma->mul(partial[c + 1][r], v);
        else if (m.a[r][c] == -1)
          partial[c + 1][r] = gamma->mul(partial[c + 1][r], gamma->inv(v));
        if (last_col[r] == c && partial[c + 1][r] != id) ok = false;
      }
      if (ok) go(c + 1);
    }
  };
  go(0);
  return count;
}

Int flow_value(const Hypergraph& h, const GroupPtr& gamma) {
  if (!gamma->is_abelian())
    throw capability_error("flows need a finite abelian group");
  long q = gamma->order();
  RankTable p = to_rank_table(hyper_polymatroid(h), Rat(q));
  RankTable dual = a_dual(p, flow_alpha(h, Rat(q)));
  Rat out = eval_at_power(char_poly(dual), 1);
  if (!is_integer(out)) throw consistency_error("flow value is not an integer");
  return out.get_num();
}

Int coloring_count_via_group(const Hypergraph& h, const GroupPtr& gamma, size_t cap) {
  if (!gamma->is_abelian())
    throw capability_error("the group coloring route needs an abelian group");
  using Fam = FiniteGroup::Family;
  if (gamma->family() != Fam::cyclic && gamma->family() != Fam::abelian_product)
    throw capability_error("needs a cyclic or abelian-product group");
  StarGraphMatrix m = star_graph(h);

  // block groups Gamma^{|x|-1}; empty blocks become trivial factors
  std::vector<GroupPtr> factors;
  for (const auto& e : h.edges) {
    int w = (int)e.size() - 1;
    if (w == 0) {
      factors.push_back(cyclic_group(1));
      continue;
    }
    std::vector<int> orders;
    for (int i = 0; i < w; ++i)
      for (int o : gamma->params()) orders.push_back(o);
    factors.push_back(abelian_product_group(orders));
  }
  GroupProduct gprime(factors);

  // image of the unit colorings: vertex v colored by a generator c of Gamma
  auto image_tuple = [&](int v, int c) {
    Tuple out(gprime.arity());
    for (size_t x = 0; x < h.edges.size(); ++x) {
      int w = (int)h.edges[x].size() - 1;
      if (w == 0) {
        out[x] = 0;
        continue;
      }
      // element of Gamma^w per block, coordinates in column order
      std::vector<int> coords(w, gamma->identity());
      for (int j = 0; j < w; ++j) {
        int entry = m.a[v][m.block[x].first + j];
        if (entry == 1) coords[j] = c;
        else if (entry == -1) coords[j] = gamma->inv(c);
      }
      // encode into the abelian product's mixed radix over gamma's params
      int idx = 0;
      int kparams = (int)gamma->params().size();
      for (int j = 0; j < w; ++j) {
        // decompose gamma element coords[j] into its params digits
        int g = coords[j];
        std::vector<int> digits(kparams);
        for (int i = kparams - 1; i >= 0; --i) {
          digits[i] = g % gamma->params()[i];
          g /= gamma->params()[i];
        }
        for (int i = 0; i < kparams; ++i)
          idx = idx * gamma->params()[i] + digits[i];
      }
      out[x] = idx;
    }
    return out;
  };

  std::vector<Tuple> gens;
  for (long v = 0; v < m.rows; ++v)
    for (int c = 1; c < gamma->order(); ++c) gens.push_back(image_tuple((int)v, c));
  Subgroup hprime = subgroup_closure(gprime, gens, cap);
  RankTable p = rank_table(hprime, Base::group_order());
  Rat chi = eval_at_power(char_poly(p), 1);
  Rat out = rat_pow(Rat((long)gamma->order()), m.kappa) * chi;
  if (!is_integer(out)) throw consistency_error("coloring value is not an integer");
  return out.get_num();
}

bool totally_unimodular_upto(const StarGraphMatrix& m, int max_size) {
  // all square submatrices up to max_size x max_size
  std::vector<long> rows(m.rows), cols(m.cols);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  for (int sz = 1; sz <= max_size && sz <= (int)std::min(m.rows, m.cols); ++sz) {
    std::vector<long> rsel(sz), csel(sz);
    std::function<bool(int, long)> pick_rows = [&](int d, long start) -> bool {
      if (d == sz) {
        std::function<bool(int, long)> pick_cols = [&](int dc, long cstart) -> bool {
          if (dc == sz) {
            std::vector<std::vector<Rat>> sub(sz, std::vector<Rat>(sz));
            for (int i = 0; i < sz; ++i)
              for (int j = 0; j < sz; ++j) sub[i][j] = m.a[rsel[i]][csel[j]];
            // determinant by fraction-free elimination over Q
            Rat det = 1;
            for (int p = 0; p < sz; ++p) {
              int piv = p;
              while (piv < sz && sub[piv][p] == 0) ++piv;
              if (piv == sz) {
                det = 0;
                break;
              }
              if (piv != p) {
                std::swap(sub[piv], sub[p]);
                det = -det;
              }
              det *= sub[p][p];
              Rat inv = Rat(1) / sub[p][p];
              for (int r = p + 1; r < sz; ++r) {
                Rat f = sub[r][p] * inv;
                if (f == 0) continue;
                for (int c2 = p; c2 < sz; ++c2) sub[r][c2] -= f * sub[p][c2];
              }
            }
            if (det != 0 && det != 1 && det != -1) return false;
            return true;
          }
          for (long c = cstart; c < m.cols; ++c) {
            csel[dc] = c;
            if (!pick_cols(dc + 1, c + 1)) return false;
          }
          return true;
        };
        return pick_cols(0, 0);
      }
      for (long r = start; r < m.rows; ++r) {
        rsel[d] = r;
        if (!pick_rows(d + 1, r + 1)) return false;
      }
      return true;
    };
    if (!pick_rows(0, 0)) return false;
  }
  return true;
}

}  // namespace gpm
