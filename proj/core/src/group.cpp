#include "dblplane/group.hpp"

#include <algorithm>
#include <set>

namespace dblplane {

Group Group::from_generators(std::size_t degree, std::vector<Perm> generators,
                             std::size_t order_bound, std::string name) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("Group: generator degree mismatch");
  std::set<Perm> closure;
  closure.insert(Perm(degree));
  std::vector<Perm> queue{Perm(degree)};
  while (!queue.empty()) {
    Perm x = queue.back();
    queue.pop_back();
    for (const auto& g : generators) {
      Perm y = x * g;
      if (closure.insert(y).second) {
        if (closure.size() > order_bound)
          throw order_bound_error("Group: closure exceeds order bound " +
                                  std::to_string(order_bound));
        queue.push_back(std::move(y));
      }
    }
  }
  Group out;
  out.degree_ = degree;
  out.elements_.assign(closure.begin(), closure.end());
  out.generators_ = std::move(generators);
  out.name_ = std::move(name);
  return out;
}

Group Group::from_elements(std::size_t degree, std::vector<Perm> elements,
                           std::string name) {
  Group out;
  out.degree_ = degree;
  std::sort(elements.begin(), elements.end());
  out.elements_ = std::move(elements);
  out.name_ = std::move(name);
  if (out.elements_.empty() || !out.elements_[0].is_identity())
    throw std::invalid_argument("Group: element list must contain the identity");
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = 0; b < out.size(); ++b)
      if (!out.find(out.elements_[a] * out.elements_[b]))
        throw std::invalid_argument("Group: element list is not closed");
  out.generators_ = out.elements_;
  return out;
}

std::optional<std::size_t> Group::find(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it != elements_.end() && *it == p)
    return static_cast<std::size_t>(it - elements_.begin());
  return std::nullopt;
}

std::size_t Group::index_of(const Perm& p) const {
  auto i = find(p);
  if (!i) throw std::invalid_argument("Group: element not in group");
  return *i;
}

std::size_t Group::multiply(std::size_t a, std::size_t b) const {
  return index_of(elements_[a] * elements_[b]);
}

std::size_t Group::inverse_of(std::size_t a) const {
  return index_of(elements_[a].inverse());
}

std::size_t Group::conjugate(std::size_t g, std::size_t x) const {
  return index_of(elements_[x] * elements_[g] * elements_[x].inverse());
}

std::size_t Group::element_order(std::size_t a) const {
  return elements_[a].order();
}

std::vector<std::vector<std::size_t>> Group::conjugacy_classes() const {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<char> seen(size(), 0);
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::set<std::size_t> cls;
    for (std::size_t x = 0; x < size(); ++x) cls.insert(conjugate(i, x));
    std::vector<std::size_t> v(cls.begin(), cls.end());
    for (std::size_t e : v) seen[e] = 1;
    classes.push_back(std::move(v));
  }
  return classes;
}

std::vector<std::size_t> Group::class_of_element() const {
  auto classes = conjugacy_classes();
  std::vector<std::size_t> of(size(), npos);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t e : classes[c]) of[e] = c;
  return of;
}

std::vector<std::size_t> Group::subgroup_closure(std::vector<std::size_t> seed) const {
  std::set<std::size_t> closed;
  closed.insert(identity_index());
  std::vector<std::size_t> queue{identity_index()};
  for (std::size_t s : seed)
    if (closed.insert(s).second) queue.push_back(s);
  while (!queue.empty()) {
    std::size_t x = queue.back();
    queue.pop_back();
    for (std::size_t s : seed) {
      std::size_t y = multiply(x, s);
      if (closed.insert(y).second) queue.push_back(y);
    }
  }
  return std::vector<std::size_t>(closed.begin(), closed.end());
}

bool Group::is_generating(const std::vector<std::size_t>& elems) const {
  return subgroup_closure(elems).size() == size();
}

Group Group::subgroup(const std::vector<std::size_t>& closed_indices,
                      std::string name) const {
  std::vector<Perm> elems;
  elems.reserve(closed_indices.size());
  for (std::size_t i : closed_indices) elems.push_back(elements_[i]);
  return from_elements(degree_, std::move(elems), std::move(name));
}

std::vector<std::size_t> Group::cyclic_subgroup(std::size_t g) const {
  std::set<std::size_t> elems{identity_index()};
  std::size_t x = g;
  while (elems.insert(x).second) x = multiply(x, g);
  return std::vector<std::size_t>(elems.begin(), elems.end());
}

bool Group::is_abelian() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (multiply(a, b) != multiply(b, a)) return false;
  return true;
}

std::map<std::size_t, std::size_t> Group::order_histogram() const {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t i = 0; i < size(); ++i) ++h[element_order(i)];
  return h;
}

Group direct_product(const Group& a, const Group& b, std::string name) {
  std::size_t deg = a.degree() + b.degree();
  std::vector<Perm> elems;
  elems.reserve(a.size() * b.size());
  for (const auto& pa : a.elements()) {
    for (const auto& pb : b.elements()) {
      std::vector<unsigned> img(deg);
      for (std::size_t i = 0; i < a.degree(); ++i) img[i] = pa[static_cast<unsigned>(i)];
      for (std::size_t i = 0; i < b.degree(); ++i)
        img[a.degree() + i] = static_cast<unsigned>(a.degree()) + pb[static_cast<unsigned>(i)];
      elems.emplace_back(std::move(img));
    }
  }
  return Group::from_elements(deg, std::move(elems), std::move(name));
}

IsoSignature iso_signature(const Group& g) {
  IsoSignature s;
  s.order = g.size();
  s.abelian = g.is_abelian();
  for (auto& [ord, cnt] : g.order_histogram()) s.histogram.emplace_back(ord, cnt);
  return s;
}

namespace {

// Small generating set picked greedily in canonical order.
std::vector<std::size_t> greedy_generators(const Group& g) {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> closed{g.identity_index()};
  while (closed.size() < g.size()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!std::binary_search(closed.begin(), closed.end(), i)) {
        gens.push_back(i);
        break;
      }
    }
    closed = g.subgroup_closure(gens);
  }
  return gens;
}

}  // namespace

bool is_isomorphic(const Group& a, const Group& b) {
  if (!(iso_signature(a) == iso_signature(b))) return false;
  if (a.size() == 1) return true;

  auto gens = greedy_generators(a);
  // Word structure: every element of a as parent * generator.
  std::vector<std::pair<std::size_t, std::size_t>> word(a.size(), {npos, npos});
  std::vector<std::size_t> bfs{a.identity_index()};
  std::vector<char> seen(a.size(), 0);
  seen[a.identity_index()] = 1;
  for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
    std::size_t x = bfs[qi];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      std::size_t y = a.multiply(x, gens[gi]);
      if (!seen[y]) {
        seen[y] = 1;
        word[y] = {x, gi};
        bfs.push_back(y);
      }
    }
  }

  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    std::size_t ord = a.element_order(gens[gi]);
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b.element_order(j) == ord) candidates[gi].push_back(j);
  }

  std::vector<std::size_t> image(gens.size(), npos);
  std::vector<std::size_t> phi(a.size(), npos);

  auto try_map = [&]() -> bool {
    std::fill(phi.begin(), phi.end(), npos);
    phi[a.identity_index()] = b.identity_index();
    for (std::size_t x : bfs) {
      if (x == a.identity_index()) continue;
      auto [parent, gi] = word[x];
      phi[x] = b.multiply(phi[parent], image[gi]);
    }
    std::vector<char> hit(b.size(), 0);
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (hit[phi[x]]) return false;
      hit[phi[x]] = 1;
      if (a.element_order(x) != b.element_order(phi[x])) return false;
    }
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < a.size(); ++y)
        if (phi[a.multiply(x, y)] != b.multiply(phi[x], phi[y])) return false;
    return true;
  };

  std::size_t k = gens.size();
  std::vector<std::size_t> pos(k, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == k) {
      if (try_map()) return true;
      --depth;
      ++pos[depth];
    } else if (pos[depth] < candidates[depth].size()) {
      image[depth] = candidates[depth][pos[depth]];
      ++depth;
      if (depth < k) pos[depth] = 0;
    } else {
      if (depth == 0) return false;
      --depth;
      ++pos[depth];
    }
  }
}

std::vector<std::vector<std::size_t>> surjecting_subgroups(
    const Group& g0, const std::vector<std::size_t>& projection,
    const Group& image) {
  if (projection.size() != g0.size())
    throw std::invalid_argument("surjecting_subgroups: projection size mismatch");
  for (std::size_t i = 0; i < g0.size(); ++i)
    for (std::size_t j = 0; j < g0.size(); ++j)
      if (projection[g0.multiply(i, j)] !=
          image.multiply(projection[i], projection[j]))
        throw std::invalid_argument(
            "surjecting_subgroups: projection is not a homomorphism");

  std::vector<std::size_t> kernel;
  for (std::size_t i = 0; i < g0.size(); ++i)
    if (projection[i] == image.identity_index()) kernel.push_back(i);
  if (kernel.size() != 2)
    throw std::invalid_argument("surjecting_subgroups: kernel must have order 2");
  std::size_t tau = kernel[0] == g0.identity_index() ? kernel[1] : kernel[0];
  if (g0.element_order(tau) != 2)
    throw std::invalid_argument("surjecting_subgroups: kernel generator not an involution");
  for (std::size_t x = 0; x < g0.size(); ++x)
    if (g0.conjugate(tau, x) != tau)
      throw std::invalid_argument("surjecting_subgroups: kernel generator not central");
  std::vector<char> covered(image.size(), 0);
  for (std::size_t i = 0; i < g0.size(); ++i) covered[projection[i]] = 1;
  for (char c : covered)
    if (!c) throw std::invalid_argument("surjecting_subgroups: projection not onto");

  // Index-2 subgroups all contain squares and commutators; enumerate the
  // hyperplanes of the elementary abelian quotient and keep those avoiding tau.
  std::vector<std::size_t> verbal_seed;
  for (std::size_t i = 0; i < g0.size(); ++i) verbal_seed.push_back(g0.multiply(i, i));
  for (std::size_t i = 0; i < g0.size(); ++i)
    for (std::size_t j = 0; j < g0.size(); ++j) {
      std::size_t comm = g0.multiply(g0.multiply(i, j),
                                     g0.multiply(g0.inverse_of(i), g0.inverse_of(j)));
      verbal_seed.push_back(comm);
    }
  std::vector<std::size_t> n_sub = g0.subgroup_closure(verbal_seed);

  // Coset labels: minimum element of each coset of the verbal subgroup.
  std::vector<std::size_t> coset_of(g0.size(), npos);
  for (std::size_t x = 0; x < g0.size(); ++x) {
    std::size_t best = npos;
    for (std::size_t n : n_sub) best = std::min(best, g0.multiply(x, n));
    coset_of[x] = best;
  }
  auto coset_mul = [&](std::size_t ca, std::size_t cb) {
    return coset_of[g0.multiply(ca, cb)];
  };

  // F2-coordinates of each coset with respect to a greedy basis.
  std::map<std::size_t, unsigned> coords;
  coords[coset_of[g0.identity_index()]] = 0;
  std::vector<std::size_t> basis;
  std::set<std::size_t> reps(coset_of.begin(), coset_of.end());
  for (std::size_t rep : reps) {
    if (coords.count(rep)) continue;
    basis.push_back(rep);
    unsigned bit = 1u << (basis.size() - 1);
    auto snapshot = coords;
    for (auto& [c, mask] : snapshot) coords[coset_mul(c, rep)] = mask | bit;
  }

  std::vector<std::vector<std::size_t>> result;
  std::vector<std::size_t> full(g0.size());
  for (std::size_t i = 0; i < g0.size(); ++i) full[i] = i;
  result.push_back(std::move(full));

  std::vector<std::vector<std::size_t>> sections;
  unsigned k = static_cast<unsigned>(basis.size());
  for (unsigned chi = 1; chi < (1u << k); ++chi) {
    std::vector<std::size_t> ker;
    for (std::size_t x = 0; x < g0.size(); ++x) {
      unsigned m = coords[coset_of[x]] & chi;
      if (__builtin_parity(m) == 0) ker.push_back(x);
    }
    if (std::binary_search(ker.begin(), ker.end(), tau)) continue;
    sections.push_back(std::move(ker));
  }
  std::sort(sections.begin(), sections.end());
  sections.erase(std::unique(sections.begin(), sections.end()), sections.end());
  for (auto& s : sections) result.push_back(std::move(s));
  return result;
}

}  // namespace dblplane
