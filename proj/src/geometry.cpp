#include "setrep/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "setrep/errors.hpp"

namespace setrep {
namespace {

struct FieldSpec {
  int q;
  int p;
  int degree;
  // Monic irreducible polynomial, low coefficient first, leading 1 omitted.
  std::vector<int> reduction;
};

std::optional<FieldSpec> field_spec(int q) {
  switch (q) {
    case 2: case 3: case 5: case 7:
      return FieldSpec{q, q, 1, {}};
    case 4:
      return FieldSpec{4, 2, 2, {1, 1}};  // x^2 + x + 1
    case 8:
      return FieldSpec{8, 2, 3, {1, 1, 0}};  // x^3 + x + 1
    case 9:
      return FieldSpec{9, 3, 2, {1, 0}};  // x^2 + 1
    default:
      return std::nullopt;
  }
}

std::vector<int> digits(int a, int p, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i, a /= p) d[i] = a % p;
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int a = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
  return a;
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q) {
  const auto spec = field_spec(q);
  if (!spec) throw NoSuchPlaneConstruction("GF(" + std::to_string(q) + ") is not supported");
  p_ = spec->p;
  const int k = spec->degree;
  add_.resize(q * q);
  mul_.resize(q * q);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p_, k);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p_, k);
      std::vector<int> sum(k);
      for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = undigits(sum, p_);

      std::vector<int> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      // x^k = -reduction(x)
      for (int deg = 2 * k - 2; deg >= k; --deg) {
        const int c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        for (int i = 0; i < k; ++i)
          prod[deg - k + i] = ((prod[deg - k + i] - c * spec->reduction[i]) % p_ + p_) % p_;
      }
      prod.resize(k);
      mul_[a * q + b] = undigits(prod, p_);
    }
  }
}

void validate_linear_space(const FiniteLinearSpace& s) {
  const std::size_t n = s.points;
  std::vector<std::vector<int>> on(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < s.lines.size(); ++i) {
    const auto& l = s.lines[i];
    if (l.size() < 2 || l.size() + 1 > n)
      throw DomainError("line " + std::to_string(i) + " has " + std::to_string(l.size()) +
                        " points; a line needs between 2 and n-1 points");
    for (std::size_t a = 0; a < l.size(); ++a) {
      if (l[a] >= n) throw DomainError("line " + std::to_string(i) + " names point " + std::to_string(l[a]));
      for (std::size_t b = a + 1; b < l.size(); ++b) {
        if (l[a] == l[b]) throw DomainError("line " + std::to_string(i) + " repeats a point");
        ++on[l[a]][l[b]];
        ++on[l[b]][l[a]];
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (on[a][b] != 1)
        throw DomainError("points " + std::to_string(a) + " and " + std::to_string(b) + " lie on " +
                          std::to_string(on[a][b]) + " lines");
}

bool is_linear_space(const FiniteLinearSpace& s) {
  try {
    validate_linear_space(s);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

PlaneCertificate certify_plane(FiniteLinearSpace s) {
  validate_linear_space(s);
  const auto r = plane_order_for(static_cast<long long>(s.points));
  if (!r) throw DomainError(std::to_string(s.points) + " points is not r^2+r+1 for any r >= 2");
  const std::size_t k = static_cast<std::size_t>(*r) + 1;
  if (s.lines.size() != s.points) throw DomainError("a plane has as many lines as points");
  std::vector<std::size_t> through(s.points, 0);
  std::vector<std::set<std::size_t>> line_sets;
  for (const auto& l : s.lines) {
    if (l.size() != k) throw DomainError("every line of a plane of order " + std::to_string(*r) + " has r+1 points");
    for (auto p : l) ++through[p];
    line_sets.emplace_back(l.begin(), l.end());
  }
  for (auto t : through)
    if (t != k) throw DomainError("every point of a plane lies on r+1 lines");
  for (std::size_t i = 0; i < line_sets.size(); ++i) {
    for (std::size_t j = i + 1; j < line_sets.size(); ++j) {
      std::size_t common = 0;
      for (auto p : line_sets[i]) common += line_sets[j].count(p);
      if (common != 1) throw DomainError("two lines of a plane meet in exactly one point");
    }
  }
  // A quadrangle: no three of four points collinear.
  auto collinear = [&](std::size_t a, std::size_t b, std::size_t c) {
    return std::any_of(line_sets.begin(), line_sets.end(),
                       [&](const auto& l) { return l.count(a) && l.count(b) && l.count(c); });
  };
  const std::size_t n = s.points;
  bool quadrangle = false;
  for (std::size_t a = 0; a < n && !quadrangle; ++a)
    for (std::size_t b = a + 1; b < n && !quadrangle; ++b)
      for (std::size_t c = b + 1; c < n && !quadrangle; ++c) {
        if (collinear(a, b, c)) continue;
        for (std::size_t d = c + 1; d < n && !quadrangle; ++d)
          quadrangle = !collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d);
      }
  if (!quadrangle) throw DomainError("no four points in general position");
  return {std::move(s), *r};
}

PlaneCertificate projective_plane(int q) {
  if (q == 6 || q == 10) throw NoPlaneExists("no projective plane of order " + std::to_string(q) + " exists");
  if (!field_spec(q)) throw NoSuchPlaneConstruction("no construction for planes of order " + std::to_string(q));
  const GaloisField f(q);

  // Normalized representatives: first nonzero coordinate is 1.
  std::vector<std::array<int, 3>> reps;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) reps.push_back({1, a, b});
  for (int b = 0; b < q; ++b) reps.push_back({0, 1, b});
  reps.push_back({0, 0, 1});

  FiniteLinearSpace s;
  s.points = reps.size();
  for (const auto& l : reps) {
    Line line;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const auto& x = reps[i];
      int dot = 0;
      for (int c = 0; c < 3; ++c) dot = f.add(dot, f.mul(l[c], x[c]));
      if (dot == 0) line.push_back(i);
    }
    s.lines.push_back(std::move(line));
  }
  return certify_plane(std::move(s));
}

FiniteLinearSpace near_pencil(std::size_t n) {
  if (n < 3) throw DomainError("near-pencil needs at least 3 points");
  FiniteLinearSpace s;
  s.points = n;
  Line big(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) big[i] = i;
  s.lines.push_back(std::move(big));
  for (std::size_t i = 0; i + 1 < n; ++i) s.lines.push_back({i, n - 1});
  return s;
}

FiniteLinearSpace puncture(const PlaneCertificate& plane, std::span<const std::size_t> points) {
  if (points.size() > 2) throw DomainError("puncturing supports at most two points");
  const std::size_t n = plane.space.points;
  std::vector<bool> removed(n, false);
  for (auto p : points) {
    if (p >= n) throw DomainError("point " + std::to_string(p) + " is not in the plane");
    if (removed[p]) throw DomainError("point " + std::to_string(p) + " listed twice");
    removed[p] = true;
  }
  std::vector<std::size_t> renumber(n, 0);
  std::size_t next = 0;
  for (std::size_t p = 0; p < n; ++p)
    if (!removed[p]) renumber[p] = next++;

  FiniteLinearSpace out;
  out.points = next;
  for (const auto& l : plane.space.lines) {
    Line kept;
    for (auto p : l)
      if (!removed[p]) kept.push_back(renumber[p]);
    if (kept.size() >= 2) out.lines.push_back(std::move(kept));
  }
  validate_linear_space(out);
  return out;
}

std::optional<int> plane_order_for(long long n) {
  if (n < 7) return std::nullopt;
  const auto r = static_cast<long long>(std::llround((std::sqrt(4.0 * static_cast<double>(n) - 3.0) - 1.0) / 2.0));
  for (long long c = std::max(2LL, r - 1); c <= r + 1; ++c)
    if (c * c + c + 1 == n) return static_cast<int>(c);
  return std::nullopt;
}

std::optional<int> n_pp(long long n) {
  const auto r = plane_order_for(n);
  if (!r) return 0;
  switch (*r) {
    case 2: case 3: case 4: case 5: case 7: case 8:
      return 1;
    case 6: case 10:
      return 0;
    case 9:
      return 4;
    default:
      return std::nullopt;
  }
}

CliqueCover fls_to_cover(const FiniteLinearSpace& s) {
  CliqueCover q{complete_graph(s.points), {}};
  for (const auto& l : s.lines) q.cliques.emplace_back(l.begin(), l.end());
  return q;
}

CliqueCover silly_partition(std::size_t n) {
  if (n < 2) throw DomainError("silly partition needs at least 2 vertices");
  CliqueCover q{complete_graph(n), {}};
  Clique all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  q.cliques.push_back(std::move(all));
  for (std::size_t i = 1; i < n; ++i) q.cliques.push_back({i});
  return q;
}

}  // namespace setrep
