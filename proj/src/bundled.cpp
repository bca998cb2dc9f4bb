#include "gpm/bundled.hpp"

#include <algorithm>
#include <sstream>

#include "gpm/errors.hpp"

namespace gpm {
namespace bundled {

namespace {

int s3_elem(const std::string& one_line) {
  static GroupPtr s3 = symmetric_group(3);
  auto e = s3->element_by_name(one_line);
  if (!e) throw consistency_error("bad S3 element name");
  return *e;
}

}  // namespace

GroupProduct s3_pair() {
  GroupPtr s3 = symmetric_group(3);
  return GroupProduct({s3, s3});
}

Subgroup s3_mixed() {
  GroupProduct g = s3_pair();
  // (12) is "213", (123) is "231"
  std::vector<Tuple> gens = {{s3_elem("213"), s3_elem("213")},
                             {s3_elem("123"), s3_elem("231")}};
  return subgroup_closure(g, gens);
}

Subgroup s3_diagonal() {
  GroupProduct g = s3_pair();
  std::vector<Tuple> gens = {{s3_elem("213"), s3_elem("213")},
                             {s3_elem("231"), s3_elem("231")}};
  return subgroup_closure(g, gens);
}

Subgroup s3_sign_pair() {
  GroupProduct g = s3_pair();
  std::vector<Tuple> gens = {{s3_elem("213"), s3_elem("213")},
                             {s3_elem("231"), s3_elem("123")},
                             {s3_elem("123"), s3_elem("231")}};
  return subgroup_closure(g, gens);
}

Subgroup z6_cube() {
  GroupPtr z6 = cyclic_group(6);
  GroupProduct g({z6, z6, z6});
  std::vector<Tuple> gens = {{1, 2, 3}, {2, 1, 4}};
  return subgroup_closure(g, gens);
}

namespace {

Subgroup binary_code(const std::vector<std::vector<int>>& rows) {
  GroupPtr z2 = cyclic_group(2);
  GroupProduct g(std::vector<GroupPtr>(6, z2));
  std::vector<Tuple> gens;
  for (const auto& r : rows) gens.push_back(r);
  return subgroup_closure(g, gens);
}

}  // namespace

Subgroup binary_code_a() {
  return binary_code({{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}});
}

Subgroup binary_code_b() {
  return binary_code({{1, 0, 0, 1, 1, 1}, {0, 1, 0, 1, 0, 0}, {0, 0, 1, 1, 0, 0}});
}

Hypergraph four_edge_hypergraph() {
  std::stringstream in("a b c\na b b d\na b b b\nc d\n");
  return parse_hypergraph(in);
}

RawSubset nonsubmodular_subset() {
  GroupPtr z2 = cyclic_group(2);
  GroupProduct g({z2, z2, z2});
  // (2,2,2),(2,1,2),(1,1,2),(1,1,1),(2,1,1) with 1 -> 0, 2 -> 1
  RawSubset l{g, {{1, 1, 1}, {1, 0, 1}, {0, 0, 1}, {0, 0, 0}, {1, 0, 0}}};
  return l;
}

RankTable uniform_table(int d, int n, const Rat& base) {
  std::vector<int> rank(size_t(1) << n);
  for (Mask s = 0; s < (Mask)rank.size(); ++s) rank[s] = std::min(d, popcount(s));
  return rank_table_from_ranks(n, rank, base);
}

RankTable half_rank_table() {
  int n = 4;
  RankTable p;
  p.n = n;
  p.base = Base::rational(4);
  p.card.resize(size_t(1) << n);
  for (Mask s = 0; s < (Mask)p.card.size(); ++s) {
    int k = popcount(s);
    // card = 4^{min(1, k/2)}: 1, 2, 4, 4, 4
    p.card[s] = k == 0 ? 1 : (k == 1 ? 2 : 4);
  }
  return p;
}

}  // namespace bundled
}  // namespace gpm
