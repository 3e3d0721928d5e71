#include "fitkit/permutation.hpp"

#include <cctype>
#include <numeric>

#include "fitkit/errors.hpp"

namespace fitkit {

Permutation::Permutation(std::size_t degree) : images_(degree == 0 ? 1 : degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw DomainError("permutation of degree 0");
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw DomainError("images do not form a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  if (degree == 0) throw ParseError("degree must be positive");
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) {
        std::size_t end = i;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) &&
               text[end] != ')' && text[end] != ',')
          ++end;
        throw ParseError("non-numeric token '" + std::string(text.substr(start, std::max<std::size_t>(end - start, 1))) + "'");
      }
      unsigned long long v = 0;
      for (std::size_t k = start; k < i; ++k) {
        v = v * 10 + static_cast<unsigned>(text[k] - '0');
        if (v > degree) break;
      }
      if (v == 0 || v > degree)
        throw ParseError("point " + std::string(text.substr(start, i - start)) + " outside 1.." +
                         std::to_string(degree));
      Point p = static_cast<Point>(v - 1);
      if (used[p]) throw ParseError("repeated point " + std::to_string(v));
      used[p] = true;
      cycle.push_back(p);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      result.images_[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::optional<Point> Permutation::smallest_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return std::nullopt;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw DomainError("degree mismatch: " + std::to_string(degree()) + " vs " +
                      std::to_string(rhs.degree()));
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = rhs.images_[images_[i]];
  return r;
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  if (this == &rhs) return *this = *this * rhs;
  if (degree() != rhs.degree())
    throw DomainError("degree mismatch: " + std::to_string(degree()) + " vs " +
                      std::to_string(rhs.degree()));
  for (auto& x : images_) x = rhs.images_[x];
  return *this;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Permutation acc(degree());
  while (n > 0) {
    if (n & 1U) acc *= base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return acc;
}

Permutation Permutation::conjugate(const Permutation& by) const {
  // x -> by(this(by^-1(x)))
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[by.images_[i]] = by.images_[images_[i]];
  return r;
}

Order Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  Order result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    Order len = 0;
    for (Point p = static_cast<Point>(i); !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) throw DomainError("cannot shrink a permutation");
  Permutation r(degree);
  std::copy(images_.begin(), images_.end(), r.images_.begin());
  return r;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (Point p = static_cast<Point>(i); !seen[p]; p = images_[p]) {
      seen[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t Permutation::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point p : images_) {
    h ^= p;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace fitkit
