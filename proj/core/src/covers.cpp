#include "dblplane/covers.hpp"

#include <algorithm>
#include <functional>

#include "dblplane/rational.hpp"

namespace dblplane {

BranchDatum make_branch_datum(Group group, std::vector<std::size_t> monodromy) {
  std::size_t prod = group.identity_index();
  for (std::size_t g : monodromy) {
    if (g == group.identity_index())
      throw std::invalid_argument("BranchDatum: trivial monodromy entry");
    prod = group.multiply(prod, g);
  }
  if (prod != group.identity_index())
    throw std::invalid_argument("BranchDatum: monodromy product is not the identity");
  if (!group.is_generating(monodromy))
    throw std::invalid_argument("BranchDatum: monodromies do not generate");
  return BranchDatum{std::move(group), std::move(monodromy)};
}

long long hurwitz_genus(const Group& group, const std::vector<std::size_t>& orders) {
  Rat sum(0);
  for (std::size_t m : orders) {
    if (m < 2) throw std::invalid_argument("hurwitz_genus: branch order must be >= 2");
    sum = sum + (Rat(1) - Rat(1, static_cast<long long>(m)));
  }
  // 2g - 2 = |G| (-2 + sum)
  Rat two_g = Rat(static_cast<long long>(group.size())) * (Rat(-2) + sum) + Rat(2);
  Rat g = two_g * Rat(1, 2);
  if (!g.is_integer() || g.num < 0)
    throw std::invalid_argument("hurwitz_genus: genus is not a nonnegative integer");
  return g.num;
}

long long datum_genus(const BranchDatum& datum) {
  std::vector<std::size_t> orders;
  for (std::size_t g : datum.monodromy) orders.push_back(datum.group.element_order(g));
  return hurwitz_genus(datum.group, orders);
}

namespace {

struct VectorSearch {
  const Group& group;
  std::vector<std::size_t> allowed;
  std::size_t r;
  std::vector<std::vector<char>> reach;  // reach[t][g]: g is a product of t allowed
  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::size_t>> solutions;
  std::size_t limit = 1;
  std::vector<std::size_t> first_entries;  // candidates for position 0

  explicit VectorSearch(const Group& g) : group(g) {}

  void prepare() {
    reach.assign(r + 1, std::vector<char>(group.size(), 0));
    reach[0][group.identity_index()] = 1;
    for (std::size_t t = 1; t <= r; ++t)
      for (std::size_t g = 0; g < group.size(); ++g)
        if (reach[t - 1][g])
          for (std::size_t a : allowed) reach[t][group.multiply(g, a)] = 1;
  }

  bool dfs(std::size_t depth, std::size_t partial) {
    if (depth == r) {
      if (partial != group.identity_index()) return false;
      if (!group.is_generating(chosen)) return false;
      solutions.push_back(chosen);
      return solutions.size() >= limit;
    }
    const auto& pool = (depth == 0 && !first_entries.empty()) ? first_entries : allowed;
    for (std::size_t a : pool) {
      std::size_t next = group.multiply(partial, a);
      if (!reach[r - depth - 1][group.inverse_of(next)]) continue;
      chosen.push_back(a);
      if (dfs(depth + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> find_generating_vector(
    const Group& group, std::vector<std::size_t> allowed, std::size_t r) {
  if (r > kGeneratingVectorCap)
    throw std::invalid_argument("find_generating_vector: r exceeds cap");
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  for (std::size_t a : allowed) {
    if (a == group.identity_index())
      throw std::invalid_argument("find_generating_vector: identity not allowed");
    for (std::size_t x = 0; x < group.size(); ++x)
      if (!std::binary_search(allowed.begin(), allowed.end(), group.conjugate(a, x)))
        throw std::invalid_argument("find_generating_vector: allowed set not conjugation-closed");
  }
  VectorSearch search(group);
  search.allowed = allowed;
  search.r = r;
  search.limit = 1;
  // A solution can be conjugated entrywise, so the least solution starts at a
  // class minimum; restricting the first slot prunes nothing essential.
  {
    std::vector<char> seen(group.size(), 0);
    for (std::size_t a : allowed) {
      if (seen[a]) continue;
      std::size_t best = a;
      for (std::size_t x = 0; x < group.size(); ++x) {
        std::size_t c = group.conjugate(a, x);
        seen[c] = 1;
        best = std::min(best, c);
      }
      search.first_entries.push_back(best);
    }
    std::sort(search.first_entries.begin(), search.first_entries.end());
  }
  search.prepare();
  search.dfs(0, group.identity_index());
  if (search.solutions.empty()) return std::nullopt;
  return search.solutions.front();
}

std::optional<std::vector<std::size_t>> find_generating_vector_in_classes(
    const Group& group, const std::vector<std::size_t>& class_of_entry) {
  std::size_t r = class_of_entry.size();
  if (r > kGeneratingVectorCap)
    throw std::invalid_argument("find_generating_vector: r exceeds cap");
  auto classes = group.conjugacy_classes();
  for (std::size_t c : class_of_entry)
    if (c >= classes.size() || classes[c][0] == group.identity_index())
      throw std::invalid_argument("find_generating_vector: bad class index");

  // Plain lexicographic search with per-slot pools fixed by the class list.
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> pool_union;
  for (std::size_t c : class_of_entry)
    pool_union.insert(pool_union.end(), classes[c].begin(), classes[c].end());
  std::sort(pool_union.begin(), pool_union.end());
  pool_union.erase(std::unique(pool_union.begin(), pool_union.end()), pool_union.end());

  std::vector<std::vector<char>> reach(r + 1, std::vector<char>(group.size(), 0));
  reach[0][group.identity_index()] = 1;
  for (std::size_t t = 1; t <= r; ++t)
    for (std::size_t g = 0; g < group.size(); ++g)
      if (reach[t - 1][g])
        for (std::size_t a : pool_union) reach[t][group.multiply(g, a)] = 1;

  std::optional<std::vector<std::size_t>> found;
  std::function<bool(std::size_t, std::size_t)> dfs = [&](std::size_t depth,
                                                          std::size_t partial) {
    if (depth == r) {
      if (partial != group.identity_index()) return false;
      if (!group.is_generating(chosen)) return false;
      found = chosen;
      return true;
    }
    for (std::size_t a : classes[class_of_entry[depth]]) {
      std::size_t next = group.multiply(partial, a);
      if (!reach[r - depth - 1][group.inverse_of(next)]) continue;
      chosen.push_back(a);
      if (dfs(depth + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  dfs(0, group.identity_index());
  return found;
}

std::vector<std::vector<std::size_t>> find_generating_vectors(
    const Group& group, std::vector<std::size_t> allowed, std::size_t r,
    std::size_t limit) {
  std::sort(allowed.begin(), allowed.end());
  VectorSearch search(group);
  search.allowed = std::move(allowed);
  search.r = r;
  search.limit = limit;
  search.prepare();
  search.dfs(0, group.identity_index());
  return search.solutions;
}

std::size_t fixed_points_on_C(const BranchDatum& datum, std::size_t element) {
  const Group& g = datum.group;
  if (element == g.identity_index())
    throw std::invalid_argument("fixed_points_on_C: identity fixes everything");
  std::size_t total = 0;
  for (std::size_t gi : datum.monodromy) {
    auto cyc = g.cyclic_subgroup(gi);
    std::size_t hits = 0;
    for (std::size_t x = 0; x < g.size(); ++x) {
      std::size_t conj = g.multiply(g.multiply(g.inverse_of(x), element), x);
      if (std::binary_search(cyc.begin(), cyc.end(), conj)) ++hits;
    }
    total += hits / cyc.size();
  }
  return total;
}

std::vector<std::size_t> monodromy_classes(const BranchDatum& datum) {
  auto of = datum.group.class_of_element();
  std::vector<std::size_t> out;
  for (std::size_t g : datum.monodromy) out.push_back(of[g]);
  return out;
}

std::optional<BranchDatum> random_branch_datum(const Group& group,
                                               std::mt19937_64& rng) {
  if (group.size() < 2) return std::nullopt;
  std::uniform_int_distribution<std::size_t> rdist(3, 6);
  std::uniform_int_distribution<std::size_t> edist(1, group.size() - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::size_t r = rdist(rng);
    std::vector<std::size_t> mono;
    std::size_t prod = group.identity_index();
    for (std::size_t i = 0; i + 1 < r; ++i) {
      std::size_t e = edist(rng);
      mono.push_back(e);
      prod = group.multiply(prod, e);
    }
    std::size_t last = group.inverse_of(prod);
    if (last == group.identity_index()) continue;
    mono.push_back(last);
    if (!group.is_generating(mono)) continue;
    return BranchDatum{group, std::move(mono)};
  }
  return std::nullopt;
}

}  // namespace dblplane
