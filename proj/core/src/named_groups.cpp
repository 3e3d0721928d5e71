#include "fitkit/named_groups.hpp"

#include <numeric>
#include <vector>

#include "fitkit/errors.hpp"

namespace fitkit::groups {

namespace {

Permutation cycle(std::size_t degree, std::vector<Point> pts) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t k = 0; k < pts.size(); ++k) img[pts[k]] = pts[(k + 1) % pts.size()];
  return Permutation(std::move(img));
}

}  // namespace

FiniteGroup symmetric(std::size_t n) {
  if (n <= 1) return FiniteGroup::trivial(1);
  if (n == 2) return FiniteGroup({cycle(2, {0, 1})});
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  return FiniteGroup({cycle(n, {0, 1}), cycle(n, all)});
}

FiniteGroup alternating(std::size_t n) {
  if (n <= 2) return FiniteGroup::trivial(std::max<std::size_t>(n, 1));
  if (n == 3) return FiniteGroup({cycle(3, {0, 1, 2})});
  // (1 2 3) and the (n-1)- or n-cycle on the remaining structure.
  std::vector<Point> tail;
  if (n % 2 == 1) {
    tail.resize(n);
    std::iota(tail.begin(), tail.end(), Point{0});
  } else {
    tail.resize(n - 1);
    std::iota(tail.begin(), tail.end(), Point{1});
  }
  return FiniteGroup({cycle(n, {0, 1, 2}), cycle(n, tail)});
}

FiniteGroup cyclic(std::size_t n) {
  if (n <= 1) return FiniteGroup::trivial(1);
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  return FiniteGroup({cycle(n, all)});
}

FiniteGroup dihedral(std::size_t n) {
  if (n < 3) throw DomainError("dihedral group needs n >= 3");
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return FiniteGroup({cycle(n, all), Permutation(refl)});
}

FiniteGroup quaternion8() {
  // Regular representation: elements 1,i,j,k,-1,-i,-j,-k as 0..7.
  // Right multiplication by i and by j.
  const int mul_i[8] = {1, 4, 7, 2, 5, 0, 3, 6};  // x -> x*i
  const int mul_j[8] = {2, 3, 4, 5, 6, 7, 0, 1};  // x -> x*j
  // x*i: 1i=i, ii=-1, ji=-k, ki=j, -1i=-i, -ii=1, -ji=k, -ki=-j
  // x*j: 1j=j, ij=k, jj=-1, kj=-i, -1j=-j, -ij=-k, -jj=1, -kj=i
  std::vector<Point> a(8), b(8);
  for (int x = 0; x < 8; ++x) {
    a[static_cast<std::size_t>(x)] = static_cast<Point>(mul_i[x]);
    b[static_cast<std::size_t>(x)] = static_cast<Point>(mul_j[x]);
  }
  return FiniteGroup({Permutation(a), Permutation(b)});
}

FiniteGroup elementary_abelian(std::uint64_t p, unsigned k) {
  if (k == 0) return FiniteGroup::trivial(1);
  const std::size_t n = static_cast<std::size_t>(p) * k;
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < k; ++i) {
    std::vector<Point> pts(p);
    std::iota(pts.begin(), pts.end(), static_cast<Point>(i * p));
    gens.push_back(cycle(n, pts));
  }
  return FiniteGroup(std::move(gens));
}

FiniteGroup klein_four() {
  return FiniteGroup({Permutation::parse("(1 2)(3 4)", 4), Permutation::parse("(1 3)(2 4)", 4)});
}

FiniteGroup special_linear2(std::uint64_t q) {
  if (q < 2) throw DomainError("special_linear2: q must be prime");
  // Nonzero vectors (x, y) indexed as x*q + y - 1.
  auto idx = [q](std::uint64_t x, std::uint64_t y) { return static_cast<Point>(x * q + y - 1); };
  const std::size_t n = q * q - 1;
  auto act = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    // Row vector (x, y) -> (x, y) [[a, b], [c, d]].
    std::vector<Point> img(n);
    for (std::uint64_t x = 0; x < q; ++x)
      for (std::uint64_t y = 0; y < q; ++y) {
        if (x == 0 && y == 0) continue;
        img[idx(x, y)] = idx((x * a + y * c) % q, (x * b + y * d) % q);
      }
    return Permutation(std::move(img));
  };
  return FiniteGroup({act(1, 1, 0, 1), act(0, 1, q - 1, 0)});
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  const std::size_t na = A.degree(), nb = B.degree(), n = na + nb;
  std::vector<Permutation> gens;
  for (const auto& a : A.generators()) gens.push_back(a.extended(n));
  for (const auto& b : B.generators()) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    for (Point i = 0; i < nb; ++i) img[na + i] = static_cast<Point>(na + b[i]);
    gens.emplace_back(std::move(img));
  }
  return FiniteGroup(std::move(gens), n);
}

FiniteGroup wreath_product(const FiniteGroup& A, const FiniteGroup& B) {
  // Point (block j, point a) -> j * deg(A) + a.
  const std::size_t na = A.degree(), nb = B.degree(), n = na * nb;
  std::vector<Permutation> gens;
  for (const auto& a : A.generators()) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    for (Point x = 0; x < na; ++x) img[x] = a[x];
    gens.emplace_back(std::move(img));
  }
  for (const auto& b : B.generators()) {
    std::vector<Point> img(n);
    for (Point j = 0; j < nb; ++j)
      for (Point x = 0; x < na; ++x) img[j * na + x] = static_cast<Point>(b[j] * na + x);
    gens.emplace_back(std::move(img));
  }
  return FiniteGroup(std::move(gens), n);
}

}  // namespace fitkit::groups
