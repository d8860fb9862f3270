#include "dblplane/plane_model.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dblplane {

using boost::multiprecision::cpp_int;

namespace {

// Total-transform multiplicity: the strict data at the point plus the
// exceptional curve inherited when the parent has odd multiplicity.
std::size_t attach(const BranchCurveSpec& spec, std::optional<std::size_t> parent,
                   std::size_t strict_multiplicity) {
  std::size_t m = strict_multiplicity;
  if (parent) m += spec.points[*parent].multiplicity % 2;
  return m;
}

}  // namespace

BranchCurveSpec duval_spec(DuValType type) {
  BranchCurveSpec spec;
  if (type == DuValType::I) {
    // C16 with an 8-fold point on all six lines, and six tacnodes of type
    // (4,4) with the line tangent, one per line.
    spec.half_degree = 11;
    spec.points.push_back({attach(spec, std::nullopt, 8 + 6), std::nullopt});  // P
    for (int i = 0; i < 6; ++i) {
      std::size_t r = spec.points.size();
      spec.points.push_back({attach(spec, std::nullopt, 4 + 1), std::nullopt});  // R_i
      spec.points.push_back({attach(spec, r, 4 + 1), r});                        // S_i
    }
  } else {
    // C21 with a 9-fold point on all five lines, and five (6,6) points.
    spec.half_degree = 13;
    spec.points.push_back({attach(spec, std::nullopt, 9 + 5), std::nullopt});
    for (int i = 0; i < 5; ++i) {
      std::size_t r = spec.points.size();
      spec.points.push_back({attach(spec, std::nullopt, 6 + 1), std::nullopt});
      spec.points.push_back({attach(spec, r, 6 + 1), r});
    }
  }
  return spec;
}

ResolutionInvariants canonical_resolution_invariants(const BranchCurveSpec& spec) {
  long long m = static_cast<long long>(spec.half_degree);
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    const auto& p = spec.points[i];
    if (p.multiplicity < 2)
      throw std::invalid_argument("canonical_resolution_invariants: multiplicity < 2");
    if (p.parent && *p.parent >= i)
      throw std::invalid_argument("canonical_resolution_invariants: parent must precede child");
  }
  ResolutionInvariants inv;
  inv.chi = 2 + m * (m - 3) / 2;
  inv.ksq = 2 * (m - 3) * (m - 3);
  for (const auto& p : spec.points) {
    long long h = static_cast<long long>(p.multiplicity / 2);
    inv.chi -= h * (h - 1) / 2;
    inv.ksq -= 2 * (h - 1) * (h - 1);
  }
  return inv;
}

namespace {

std::size_t monomial_count(std::size_t degree) {
  return (degree + 1) * (degree + 2) / 2;
}

// Exact rank by fraction-free Gaussian elimination.
std::size_t integer_rank(std::vector<std::vector<cpp_int>> m) {
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  std::size_t rank = 0;
  cpp_int prev_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev_pivot;
      m[r][col] = 0;
    }
    prev_pivot = m[rank][col];
    ++rank;
  }
  return rank;
}

cpp_int int_pow(const cpp_int& base, std::size_t e) {
  cpp_int out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (long long i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace

long long linsys_dimension(std::size_t degree,
                           const std::vector<PointCondition>& conditions) {
  // Affine chart: f(x,y) = sum c_{ab} x^a y^b over a+b <= degree.  Conditions
  // are derivative vanishings, scaled to integers per row.
  std::vector<std::pair<std::size_t, std::size_t>> monomials;
  for (std::size_t a = 0; a <= degree; ++a)
    for (std::size_t b = 0; a + b <= degree; ++b) monomials.emplace_back(a, b);
  std::vector<std::vector<cpp_int>> matrix;

  for (const auto& cond : conditions) {
    // Clear denominators of the point once; each derivative row is then an
    // integer combination scaled by a power of the common denominator.
    cpp_int px(cond.x.num), qx(cond.x.den), py(cond.y.num), qy(cond.y.den);
    for (std::size_t p = 0; p < cond.multiplicity; ++p) {
      for (std::size_t q = 0; p + q < cond.multiplicity; ++q) {
        std::vector<cpp_int> row(monomials.size(), 0);
        for (std::size_t mi = 0; mi < monomials.size(); ++mi) {
          auto [a, b] = monomials[mi];
          if (a < p || b < q) continue;
          // d^{p+q} x^a y^b / dx^p dy^q  at the point, denominators cleared
          cpp_int coeff = 1;
          for (std::size_t t = 0; t < p; ++t) coeff *= static_cast<long long>(a - t);
          for (std::size_t t = 0; t < q; ++t) coeff *= static_cast<long long>(b - t);
          coeff *= int_pow(px, a - p) * int_pow(qx, degree - (a - p));
          coeff *= int_pow(py, b - q) * int_pow(qy, degree - (b - q));
          row[mi] = coeff;
        }
        matrix.push_back(std::move(row));
      }
    }
    if (cond.tangent) {
      // Kill the order-m term along the tangent direction.
      std::size_t m = cond.multiplicity;
      cpp_int tx_n(cond.tx.num), tx_d(cond.tx.den), ty_n(cond.ty.num), ty_d(cond.ty.den);
      std::vector<cpp_int> row(monomials.size(), 0);
      for (std::size_t p = 0; p <= m; ++p) {
        std::size_t q = m - p;
        cpp_int dir = binom(static_cast<long long>(m), static_cast<long long>(p));
        dir *= int_pow(tx_n, p) * int_pow(tx_d, m - p);
        dir *= int_pow(ty_n, q) * int_pow(ty_d, m - q);
        for (std::size_t mi = 0; mi < monomials.size(); ++mi) {
          auto [a, b] = monomials[mi];
          if (a < p || b < q) continue;
          cpp_int coeff = 1;
          for (std::size_t t = 0; t < p; ++t) coeff *= static_cast<long long>(a - t);
          for (std::size_t t = 0; t < q; ++t) coeff *= static_cast<long long>(b - t);
          coeff *= int_pow(px, a - p) * int_pow(qx, degree - (a - p));
          coeff *= int_pow(py, b - q) * int_pow(qy, degree - (b - q));
          row[mi] += dir * coeff;
        }
      }
      matrix.push_back(std::move(row));
    }
  }
  std::size_t rank = integer_rank(std::move(matrix));
  return static_cast<long long>(monomial_count(degree)) -
         static_cast<long long>(rank) - 1;
}

std::uint64_t GenericSampler::next_u64() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long long GenericSampler::small_int(long long lo, long long hi) {
  return lo + static_cast<long long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

PgCertificate duval_pg_check(DuValType type, std::uint64_t seed, bool force_conic,
                             int max_retries) {
  GenericSampler sampler(seed);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::size_t lines = (type == DuValType::I) ? 6 : 5;
    Rat cx(sampler.small_int(-500, 500)), cy(sampler.small_int(-500, 500));
    std::vector<Rat> rx(lines), ry(lines);
    bool degenerate = false;

    if (force_conic) {
      // Tacnode centers on the parabola y = x^2.
      std::vector<long long> ts;
      for (std::size_t i = 0; i < lines; ++i) {
        long long t = sampler.small_int(-60, 60);
        if (t == 0 || std::find(ts.begin(), ts.end(), t) != ts.end()) {
          degenerate = true;
          break;
        }
        ts.push_back(t);
        rx[i] = Rat(t);
        ry[i] = Rat(t * t);
      }
    } else {
      for (std::size_t i = 0; i < lines; ++i) {
        rx[i] = Rat(sampler.small_int(-500, 500));
        ry[i] = Rat(sampler.small_int(-500, 500));
      }
    }
    for (std::size_t i = 0; !degenerate && i < lines; ++i) {
      if (rx[i] == cx && ry[i] == cy) degenerate = true;
      for (std::size_t j = i + 1; j < lines; ++j)
        if (rx[i] == rx[j] && ry[i] == ry[j]) degenerate = true;
    }
    if (degenerate) continue;

    std::vector<PointCondition> conds;
    long long dim = 0;
    if (type == DuValType::I) {
      // Obstruction: a conic through the six tacnode centers.
      for (std::size_t i = 0; i < lines; ++i)
        conds.push_back(PointCondition{rx[i], ry[i], 1, false, Rat(0), Rat(0)});
      dim = linsys_dimension(2, conds);
    } else {
      // Obstruction: a quintic through the center, doubled at the five
      // tacnode centers with the lines through the center tangent there.
      conds.push_back(PointCondition{cx, cy, 1, false, Rat(0), Rat(0)});
      for (std::size_t i = 0; i < lines; ++i)
        conds.push_back(PointCondition{rx[i], ry[i], 2, true, rx[i] - cx, ry[i] - cy});
      dim = linsys_dimension(5, conds);
    }
    PgCertificate cert;
    cert.obstruction_dimension = dim;
    cert.pg = dim + 1;
    if (force_conic && cert.pg <= 0) continue;  // conic sample collapsed; retry
    return cert;
  }
  throw std::runtime_error("duval_pg_check: no non-degenerate sample found");
}

BranchCurveSpec parse_branch_spec(std::istream& in) {
  BranchCurveSpec spec;
  std::map<std::string, std::size_t> names;
  bool have_degree = false;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "halfdegree") {
      if (!(ls >> spec.half_degree) || spec.half_degree < 1)
        throw std::invalid_argument("branch spec: bad halfdegree line");
      have_degree = true;
    } else if (tok == "point") {
      std::string name;
      std::size_t mult = 0;
      if (!(ls >> name >> mult))
        throw std::invalid_argument("branch spec: bad point line");
      SingularPoint p{mult, std::nullopt};
      std::string kw;
      if (ls >> kw) {
        std::string parent;
        if (kw != "parent" || !(ls >> parent) || !names.count(parent))
          throw std::invalid_argument("branch spec: bad parent reference");
        p.parent = names[parent];
      }
      names[name] = spec.points.size();
      spec.points.push_back(p);
    } else {
      throw std::invalid_argument("branch spec: unknown keyword '" + tok + "'");
    }
  }
  if (!have_degree) throw std::invalid_argument("branch spec: missing halfdegree");
  return spec;
}

}  // namespace dblplane
