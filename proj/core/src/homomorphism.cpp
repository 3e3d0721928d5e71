#include "fitkit/homomorphism.hpp"

#include <mutex>
#include <numeric>

#include "fitkit/errors.hpp"

namespace fitkit {

namespace {

// (a, b) acting on a's points first, then b's points shifted by a.degree().
Permutation pair(const Permutation& a, const Permutation& b) {
  std::vector<Point> img(a.degree() + b.degree());
  const auto na = static_cast<Point>(a.degree());
  for (Point i = 0; i < na; ++i) img[i] = a[i];
  for (Point i = 0; i < b.degree(); ++i) img[na + i] = na + b[i];
  return Permutation(std::move(img));
}

Permutation left_part(const Permutation& p, std::size_t n) {
  std::vector<Point> img(p.images().begin(), p.images().begin() + static_cast<std::ptrdiff_t>(n));
  return Permutation(std::move(img));
}

Permutation right_part(const Permutation& p, std::size_t n) {
  const auto off = static_cast<Point>(p.degree() - n);
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i) img[i] = p[off + i] - off;
  return Permutation(std::move(img));
}

std::vector<Point> iota_points(std::size_t n) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  return v;
}

}  // namespace

struct Homomorphism::Graphs {
  std::once_flag once;
  std::unique_ptr<StabChain> codomain_first;  // points: codomain, then domain
};

Homomorphism::Homomorphism(FiniteGroup domain, FiniteGroup codomain,
                           std::vector<Permutation> generator_images)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(generator_images)),
      lazy_(std::make_shared<Graphs>()) {
  if (images_.size() != domain_.generators().size())
    throw DomainError("homomorphism: " + std::to_string(images_.size()) + " images for " +
                      std::to_string(domain_.generators().size()) + " generators");
  for (const auto& y : images_)
    if (y.degree() != codomain_.degree() || !codomain_.contains(y))
      throw DomainError("homomorphism: generator image " + y.to_string() + " is not in the codomain");
  std::vector<Permutation> graph;
  graph.reserve(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) graph.push_back(pair(domain_.generators()[i], images_[i]));
  auto prefix = iota_points(domain_.degree());
  domain_first_ =
      std::make_shared<StabChain>(domain_.degree() + codomain_.degree(), graph, prefix);
  if (domain_first_->order() != domain_.order())
    throw DomainError("generator images do not define a homomorphism (graph order " +
                      std::to_string(domain_first_->order()) + " vs domain order " +
                      std::to_string(domain_.order()) + ")");
}

Homomorphism Homomorphism::identity(const FiniteGroup& G) {
  return Homomorphism(G, G, G.generators());
}

Permutation Homomorphism::image(const Permutation& g) const {
  if (g.degree() != domain_.degree() || !domain_.contains(g))
    throw DomainError("image: element " + g.to_string() + " is not in the domain");
  auto res = domain_first_->sift(pair(g, codomain_.identity())).residue;
  return right_part(res, codomain_.degree()).inverse();
}

FiniteGroup Homomorphism::image(const FiniteGroup& H) const {
  require_subgroup(domain_, H, "image");
  std::vector<Permutation> gens;
  gens.reserve(H.generators().size());
  for (const auto& h : H.generators()) gens.push_back(image(h));
  return subgroup_from(codomain_.degree(), gens);
}

FiniteGroup Homomorphism::image() const { return subgroup_from(codomain_.degree(), images_); }

const Homomorphism::Graphs& Homomorphism::graphs_codomain_first() const {
  std::call_once(lazy_->once, [this] {
    std::vector<Permutation> graph;
    for (std::size_t i = 0; i < images_.size(); ++i) graph.push_back(pair(images_[i], domain_.generators()[i]));
    auto prefix = iota_points(codomain_.degree());
    lazy_->codomain_first =
        std::make_unique<StabChain>(codomain_.degree() + domain_.degree(), graph, prefix);
  });
  return *lazy_;
}

FiniteGroup Homomorphism::kernel() const {
  const auto& chain = *graphs_codomain_first().codomain_first;
  const std::size_t nc = codomain_.degree();
  std::vector<Permutation> gens;
  if (chain.levels().size() > nc)
    for (const auto& s : chain.levels()[nc].gens) gens.push_back(right_part(s, domain_.degree()));
  return subgroup_from(domain_.degree(), gens);
}

Permutation Homomorphism::preimage(const Permutation& y) const {
  if (y.degree() != codomain_.degree()) throw DomainError("preimage: degree mismatch");
  const auto& chain = *graphs_codomain_first().codomain_first;
  const std::size_t nc = codomain_.degree();
  Permutation h = pair(y, domain_.identity());
  const auto& levels = chain.levels();
  for (std::size_t l = 0; l < nc && l < levels.size(); ++l) {
    const auto& L = levels[l];
    const std::int32_t pos = L.position[h[L.base]];
    if (pos < 0) throw DomainError("preimage: " + y.to_string() + " is not in the image");
    h *= L.inverse_transversal[static_cast<std::size_t>(pos)];
  }
  if (!left_part(h, nc).is_identity())
    throw DomainError("preimage: " + y.to_string() + " is not in the image");
  return right_part(h, domain_.degree()).inverse();
}

FiniteGroup Homomorphism::preimage(const FiniteGroup& S) const {
  if (S.degree() != codomain_.degree()) throw DomainError("preimage: degree mismatch");
  std::vector<Permutation> gens = kernel().generators();
  for (const auto& s : S.generators()) gens.push_back(preimage(s));
  return subgroup_from(domain_.degree(), gens);
}

Homomorphism Homomorphism::then(const Homomorphism& next) const {
  if (!(next.domain_.degree() == codomain_.degree() && next.domain_.contains(image())))
    throw DomainError("composition: image does not lie in the next domain");
  std::vector<Permutation> imgs;
  imgs.reserve(images_.size());
  for (const auto& y : images_) imgs.push_back(next.image(y));
  return Homomorphism(domain_, next.codomain_, std::move(imgs));
}

}  // namespace fitkit
