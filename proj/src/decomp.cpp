#include "bqo/decomp.hpp"

#include <algorithm>

#include "bqo/ordinal.hpp"

namespace bqo {

std::optional<std::array<int, 3>> incomparability_is_equivalence(const Poset& p) {
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (y == x || !p.incomparable(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (p.incomparable(y, z) && !p.incomparable(x, z))
          return std::array<int, 3>{x, y, z};
      }
    }
  return std::nullopt;
}

std::variant<Decomposition, ForbiddenWitness> decompose(const Poset& p) {
  if (auto triple = incomparability_is_equivalence(p)) {
    auto [x, y, z] = *triple;
    // The middle element plays the part of 1; the comparable pair gives 2.
    OrderMap m;
    m.map = {p.less(x, z) ? x : z, p.less(x, z) ? z : x, y};
    m.order_reflecting = true;
    m.embedding = true;
    return ForbiddenWitness{ForbiddenWitness::Kind::OnePlusTwoEmbedding, std::move(m)};
  }

  const int n = p.size();
  Decomposition d;
  d.class_of.assign(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    bool is_rep = true;
    for (int b = 0; b < a; ++b)
      if (p.incomparable(a, b)) {
        is_rep = false;
        break;
      }
    if (is_rep) reps.push_back(a);
  }
  // Representatives are pairwise comparable; order them by the poset order.
  std::sort(reps.begin(), reps.end(), [&](int a, int b) { return p.less(a, b); });
  d.reps = reps;
  d.classes.resize(reps.size());
  for (size_t r = 0; r < reps.size(); ++r) {
    for (int a = 0; a < n; ++a)
      if (a == reps[r] || p.incomparable(a, reps[r])) {
        d.classes[r].push_back(a);
        d.class_of[a] = static_cast<int>(r);
      }
  }
  return d;
}

Width2Result classify_width2(const Poset& p) {
  auto dec = decompose(p);
  if (std::holds_alternative<ForbiddenWitness>(dec)) return Width2Result{std::move(dec)};
  auto& d = std::get<Decomposition>(dec);

  // Any 3-antichain lies inside a single class, so the least witness comes
  // from the wide class with the smallest representative.
  int wide = -1;
  for (size_t r = 0; r < d.classes.size(); ++r)
    if (d.classes[r].size() >= 3 && (wide < 0 || d.reps[r] < d.reps[wide]))
      wide = static_cast<int>(r);
  if (wide < 0) return Width2Result{std::move(d)};

  OrderMap m;
  m.map = {d.classes[wide][0], d.classes[wide][1], d.classes[wide][2]};
  m.order_reflecting = true;
  m.embedding = true;
  return Width2Result{ForbiddenWitness{ForbiddenWitness::Kind::Antichain3Embedding, std::move(m)}};
}

TwoGammaEmbedding embed_into_two_times_gamma(const Poset& p) {
  auto cls = classify_width2(p);
  if (!cls.linear_sum_of_pairs())
    throw domain_error("NotWidth2Decomposable: poset is not a linear sum of antichains of size <= 2");
  auto& d = std::get<Decomposition>(cls.result);

  TwoGammaEmbedding out;
  out.target = two_bar_times_gamma(static_cast<int>(d.classes.size()));
  out.map.map.assign(p.size(), -1);
  for (size_t r = 0; r < d.classes.size(); ++r)
    for (size_t j = 0; j < d.classes[r].size(); ++j)
      out.map.map[d.classes[r][j]] = out.target.id_of_pair[r][j];
  out.map.order_reflecting = true;
  out.map.embedding = true;
  return out;
}

}  // namespace bqo
