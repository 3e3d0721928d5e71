#include "fitkit/tower.hpp"

#include <algorithm>

#include <json.hpp>

#include "fitkit/caps.hpp"
#include "fitkit/errors.hpp"
#include "fitkit/fitting.hpp"
#include "fitkit/lattice.hpp"
#include "fitkit/named_groups.hpp"
#include "fitkit/numtheory.hpp"
#include "fitkit/perm_core.hpp"

namespace fitkit {

using json = nlohmann::ordered_json;

// ---- Tower -----------------------------------------------------------------

Tower::Tower(std::vector<FiniteGroup> levels, std::vector<std::vector<Permutation>> projection_images,
             std::vector<std::uint64_t> primes)
    : levels_(std::move(levels)), images_(std::move(projection_images)), primes_(std::move(primes)) {
  if (levels_.empty()) throw DomainError("tower: no levels");
  if (images_.size() + 1 != levels_.size())
    throw DomainError("tower: " + std::to_string(levels_.size()) + " levels need " +
                      std::to_string(levels_.size() - 1) + " projections, got " +
                      std::to_string(images_.size()));
  check_.valid = true;
  homs_.resize(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    const std::size_t i = k + 1;
    try {
      auto h = std::make_shared<const Homomorphism>(levels_[k + 1], levels_[k], images_[k]);
      if (!h->is_surjective()) {
        if (check_.valid) check_ = {false, i, "projection " + std::to_string(i) + " is not surjective"};
        continue;
      }
      homs_[k] = std::move(h);
    } catch (const DomainError& e) {
      if (check_.valid) check_ = {false, i, "projection " + std::to_string(i) + ": " + e.what()};
    }
  }
}

void Tower::require_level(std::size_t i, const char* what) const {
  if (i < 1 || i > levels_.size())
    throw DomainError(std::string(what) + ": level " + std::to_string(i) + " outside 1.." +
                      std::to_string(levels_.size()));
}

const FiniteGroup& Tower::level(std::size_t i) const {
  require_level(i, "level");
  return levels_[i - 1];
}

const std::vector<Permutation>& Tower::projection_images(std::size_t i) const {
  if (i < 1 || i >= levels_.size()) throw DomainError("projection_images: no projection " + std::to_string(i));
  return images_[i - 1];
}

const Homomorphism& Tower::projection(std::size_t i) const {
  if (i < 1 || i >= levels_.size()) throw DomainError("projection: no projection " + std::to_string(i));
  if (!homs_[i - 1]) throw DomainError("projection " + std::to_string(i) + " is invalid: " + check_.reason);
  return *homs_[i - 1];
}

Permutation Tower::project(const Permutation& x, std::size_t from, std::size_t to) const {
  require_level(from, "project");
  require_level(to, "project");
  if (to > from) throw DomainError("project: target level above source");
  Permutation y = x;
  for (std::size_t k = from; k > to; --k) y = projection(k - 1).image(y);
  return y;
}

FiniteGroup Tower::project(const FiniteGroup& H, std::size_t from, std::size_t to) const {
  require_level(from, "project");
  require_level(to, "project");
  if (to > from) throw DomainError("project: target level above source");
  FiniteGroup y = H;
  for (std::size_t k = from; k > to; --k) y = projection(k - 1).image(y);
  return y;
}

Permutation Tower::lift(const Permutation& x, std::size_t from, std::size_t to) const {
  require_level(from, "lift");
  require_level(to, "lift");
  if (to < from) throw DomainError("lift: target level below source");
  Permutation y = x;
  for (std::size_t k = from; k < to; ++k) y = projection(k).preimage(y);
  return y;
}

FiniteGroup Tower::kernel(std::size_t j, std::size_t i) const {
  require_level(j, "kernel");
  require_level(i, "kernel");
  if (i > j) throw DomainError("kernel: target level above source");
  if (i == j) return FiniteGroup::trivial(level(j).degree());
  Homomorphism h = projection(j - 1);
  for (std::size_t k = j - 1; k > i; --k) h = h.then(projection(k - 1));
  return h.kernel();
}

bool operator==(const Tower& a, const Tower& b) {
  if (a.levels_.size() != b.levels_.size() || a.primes_ != b.primes_ || a.images_ != b.images_) return false;
  for (std::size_t k = 0; k < a.levels_.size(); ++k)
    if (a.levels_[k].degree() != b.levels_[k].degree() ||
        a.levels_[k].generators() != b.levels_[k].generators())
      return false;
  return true;
}

Tower constant_tower(const FiniteGroup& G, std::size_t levels) {
  if (levels == 0) throw DomainError("constant_tower: no levels");
  return Tower(std::vector<FiniteGroup>(levels, G),
               std::vector<std::vector<Permutation>>(levels - 1, G.generators()));
}

TowerCheck tower_validate(const Tower& t) { return t.check(); }

// ---- stable images -----------------------------------------------------------

FiniteGroup invariant_of(const FiniteGroup& G, Invariant inv) {
  switch (inv) {
    case Invariant::Fitting: return fitting_subgroup(G);
    case Invariant::Layer: return layer(G);
    case Invariant::Fstar: break;
  }
  return generalized_fitting(G).fstar;
}

FiniteGroup stable_image(const Tower& t, std::size_t i, Invariant inv, std::size_t J) {
  if (i < 1 || i >= J || J > t.depth())
    throw DomainError("stable_image: need 1 <= i < J <= " + std::to_string(t.depth()));
  FiniteGroup out = invariant_of(t.level(i), inv);
  for (std::size_t j = i + 1; j <= J && !out.is_trivial(); ++j)
    out = intersection(out, t.project(invariant_of(t.level(j), inv), j, i));
  return out;
}

bool DegeneracyCertificate::valid() const {
  return std::all_of(trivial.begin(), trivial.end(), [](bool b) { return b; });
}

DegeneracyCertificate fd_certificate(const Tower& t, std::size_t J) {
  if (J < 1 || J > t.depth()) throw DomainError("fd_certificate: depth outside 1.." + std::to_string(t.depth()));
  DegeneracyCertificate c;
  c.depth = J;
  for (std::size_t i = 1; i < J; ++i) c.stable_images.push_back(invariant_of(t.level(i), Invariant::Fstar));
  // push each F*(G_j) down one level at a time
  for (std::size_t j = 2; j <= J; ++j) {
    FiniteGroup img = invariant_of(t.level(j), Invariant::Fstar);
    for (std::size_t i = j - 1; i >= 1; --i) {
      img = t.projection(i).image(img);
      c.stable_images[i - 1] = intersection(c.stable_images[i - 1], img);
    }
  }
  for (const auto& s : c.stable_images) c.trivial.push_back(s.is_trivial());
  return c;
}

// ---- witness search -------------------------------------------------------

struct WitnessSearch::Level {
  struct Entry {
    FiniteGroup maximal;
    FiniteGroup kernel;
    Homomorphism action;  // onto G_j/K, faithful on the cosets of `maximal`
    FiniteGroup fstar;
  };
  std::vector<Entry> entries;
};

WitnessSearch::WitnessSearch(const Tower& t) : tower_(t), cache_(t.depth()) {
  if (!t.check().valid) throw DomainError("witness search on an invalid tower: " + t.check().reason);
}

WitnessSearch::~WitnessSearch() = default;

const WitnessSearch::Level& WitnessSearch::level_data(std::size_t j) {
  auto& slot = cache_[j - 1];
  if (!slot) {
    auto lv = std::make_unique<Level>();
    const FiniteGroup& G = tower_.level(j);
    for (auto& mc : maximal_subgroups_by_core(G)) {
      Homomorphism act = coset_action(G, mc.subgroup);
      FiniteGroup fs = generalized_fitting(act.codomain()).fstar;
      lv->entries.push_back({std::move(mc.subgroup), std::move(mc.core), std::move(act), std::move(fs)});
    }
    slot = std::move(lv);
  }
  return *slot;
}

namespace {

// Second opinion on a hit: regular quotient, fresh primitivity test, and a
// lift that differs from the first by a kernel element.
void recheck(const Tower& t, const TowerElement& x, const Witness& w) {
  const FiniteGroup& G = t.level(w.level);
  if (!is_normal_in(G, w.kernel)) throw InternalError("witness: kernel is not normal");
  Quotient q = quotient_with_projection(G, w.kernel);
  if (q.group.order() != w.quotient_order) throw InternalError("witness: quotient order mismatch");
  if (!is_primitive(q.group).primitive) throw InternalError("witness: quotient is not primitive");
  Permutation y = w.lift;
  FiniteGroup ker = t.kernel(w.level, x.level);
  if (!ker.is_trivial()) y = y * ker.generators().front();
  if (t.project(y, w.level, x.level) != x.element) throw InternalError("witness: second lift is not a lift");
  if (generalized_fitting(q.group).fstar.contains(q.projection.image(y)))
    throw InternalError("witness: second lift lands in F* of the quotient");
}

}  // namespace

std::optional<Witness> WitnessSearch::find(const TowerElement& x, std::size_t J) {
  if (J > tower_.depth()) throw DomainError("witness: depth beyond the tower");
  if (x.level < 1 || x.level > J) throw DomainError("witness: element level outside 1..depth");
  const FiniteGroup& base = tower_.level(x.level);
  if (x.element.degree() != base.degree() || !base.contains(x.element))
    throw DomainError("witness: " + x.element.to_string() + " is not in level " + std::to_string(x.level));
  if (x.element.is_identity()) throw DomainError("witness: element is trivial");

  for (std::size_t j = x.level; j <= J; ++j) {
    const Permutation y = tower_.lift(x.element, x.level, j);
    for (const auto& e : level_data(j).entries) {
      if (e.kernel.contains(y)) continue;
      if (e.fstar.contains(e.action.image(y))) continue;
      Witness w{j, e.kernel, e.maximal, y, e.action.codomain().order(), e.fstar.order()};
      recheck(tower_, x, w);
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> theorem_d_witness(const Tower& t, const TowerElement& x, std::size_t J) {
  WitnessSearch s(t);
  return s.find(x, J);
}

// ---- construction -------------------------------------------------------------

FaithfulAction minimal_faithful_degree(const FiniteGroup& G) {
  FiniteGroup H = FiniteGroup::trivial(G.degree());
  if (G.order() <= caps().subgroups) {
    auto inv = all_subgroups(G);
    const FiniteGroup* best = nullptr;
    for (const auto& S : inv.subgroups) {
      if (best && S.order() <= best->order()) continue;
      if (core(G, S).is_trivial()) best = &S;
    }
    H = *best;
  } else {
    std::vector<bool> moved(G.degree(), false);
    std::size_t n_moved = 0;
    for (const auto& g : G.generators())
      for (Point x = 0; x < g.degree(); ++x)
        if (g[x] != x && !moved[x]) {
          moved[x] = true;
          ++n_moved;
        }
    auto first = std::find(moved.begin(), moved.end(), true);
    if (first != moved.end()) {
      const auto x0 = static_cast<Point>(first - moved.begin());
      std::vector<bool> seen(G.degree(), false);
      std::vector<Point> orbit{x0};
      seen[x0] = true;
      for (std::size_t k = 0; k < orbit.size(); ++k)
        for (const auto& g : G.generators())
          if (!seen[g[orbit[k]]]) {
            seen[g[orbit[k]]] = true;
            orbit.push_back(g[orbit[k]]);
          }
      if (orbit.size() == n_moved) H = point_stabilizer(G, x0);
    }
  }
  Homomorphism act = coset_action(G, H);
  if (act.codomain().order() != G.order()) throw InternalError("minimal_faithful_degree: action is not faithful");
  const std::size_t n = act.codomain().degree();
  return {n, std::move(act), std::move(H)};
}

namespace {

// p^n * m, saturating at UINT64_MAX.
Order module_order(std::uint64_t p, std::size_t n, Order m) {
  Order out = m;
  for (std::size_t k = 0; k < n; ++k) {
    if (out > UINT64_MAX / p) return UINT64_MAX;
    out *= p;
  }
  return out;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t primitive_root(std::uint64_t p) {
  const auto qs = prime_divisors(p - 1);
  for (std::uint64_t w = 2; w < p; ++w)
    if (std::all_of(qs.begin(), qs.end(), [&](std::uint64_t q) { return pow_mod(w, (p - 1) / q, p) != 1; }))
      return w;
  return 1;  // p = 2
}

struct Module {
  FiniteGroup K;
  Permutation g;       // K = <H, g>
  std::uint64_t e = 1;  // order of gH
  std::uint64_t zeta = 1;
};

// Largest cyclic K/H in N(H)/H whose order divides p-1.
std::optional<Module> monomial_choice(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t p) {
  FiniteGroup N = normalizer(G, H);
  std::uint64_t best_e = 1;
  Permutation best = G.identity();
  for (const auto& g : N.elements()) {
    std::uint64_t e = 1;
    for (Permutation x = g; !H.contains(x); x *= g) ++e;
    if (e > best_e && (p - 1) % e == 0) {
      best_e = e;
      best = g;
    }
  }
  if (best_e == 1) return std::nullopt;
  std::vector<Permutation> gens = H.generators();
  gens.push_back(best);
  return Module{subgroup_from(G.degree(), gens), best, best_e, pow_mod(primitive_root(p), (p - 1) / best_e, p)};
}

struct Step {
  FiniteGroup group;
  std::vector<Permutation> images;
};

Step extend_level(const FiniteGroup& G, std::uint64_t p) {
  FaithfulAction fa = minimal_faithful_degree(G);
  const Order cap = caps().tower_order;
  Module mod{fa.stabilizer, G.identity(), 1, 1};
  Order need = module_order(p, fa.degree, G.order());
  if (need > cap) {
    auto m = p > 2 ? monomial_choice(G, fa.stabilizer, p) : std::nullopt;
    if (!m) throw CapExceeded("tower_order", cap, need);
    need = module_order(p, fa.degree / m->e, G.order());
    if (need > cap) throw CapExceeded("tower_order", cap, need);
    mod = std::move(*m);
  }
  const FiniteGroup& H = fa.stabilizer;
  const Permutation ginv = mod.g.inverse();
  auto chi = [&](const Permutation& k) {
    Permutation x = k;
    std::uint64_t z = 1;
    for (std::uint64_t i = 0; i < mod.e; ++i) {
      if (H.contains(x)) return z;
      x *= ginv;
      z = z * mod.zeta % p;
    }
    throw InternalError("tower: cocycle value outside K");
  };

  const auto reps = right_coset_representatives(G, mod.K);
  const Homomorphism act = coset_action(G, mod.K);
  const std::size_t m = reps.size();
  const std::size_t deg = m * p;
  std::vector<Permutation> gens;
  for (std::size_t s = 0; s < G.generators().size(); ++s) {
    const Permutation& g = G.generators()[s];
    const Permutation& sigma = act.generator_images()[s];
    std::vector<Point> img(deg);
    for (Point j = 0; j < m; ++j) {
      const std::uint64_t c = chi(reps[j] * g * reps[sigma[j]].inverse());
      for (Point a = 0; a < p; ++a) img[j * p + a] = static_cast<Point>(sigma[j] * p + c * a % p);
    }
    gens.emplace_back(std::move(img));
  }
  std::vector<Point> shift(deg);
  for (Point x = 0; x < deg; ++x) shift[x] = x < p ? static_cast<Point>((x + 1) % p) : x;
  const Permutation t0(std::move(shift));
  gens.push_back(t0);

  std::vector<Permutation> images = G.generators();
  images.push_back(G.identity());
  FiniteGroup next(std::move(gens), deg);

  if (next.order() != module_order(p, m, G.order())) throw InternalError("tower: level order is not p^n |G|");
  const Permutation tv[] = {t0};
  FiniteGroup V = normal_closure(next, tv);
  if (V.order() != module_order(p, m, 1)) throw InternalError("tower: module is not the full coordinate space");
  if (!(fitting_subgroup(next) == V)) throw InternalError("tower: F(G_{i+1}) differs from the module");
  return {std::move(next), std::move(images)};
}

}  // namespace

Tower build_degenerate_tower(std::span<const std::uint64_t> primes, std::size_t levels) {
  if (levels == 0) throw DomainError("build: need at least one level");
  if (primes.size() < levels)
    throw DomainError("build: " + std::to_string(levels) + " levels need " + std::to_string(levels) +
                      " primes, got " + std::to_string(primes.size()));
  for (std::size_t k = 0; k < levels; ++k) {
    if (!is_prime(primes[k])) throw DomainError("build: " + std::to_string(primes[k]) + " is not prime");
    if (k > 0 && primes[k] == primes[k - 1])
      throw DomainError("build: consecutive equal primes " + std::to_string(primes[k]) + " at positions " +
                        std::to_string(k) + " and " + std::to_string(k + 1));
  }
  std::vector<FiniteGroup> lv{groups::cyclic(primes[0])};
  std::vector<std::vector<Permutation>> imgs;
  for (std::size_t k = 1; k < levels; ++k) {
    Step s = extend_level(lv.back(), primes[k]);
    lv.push_back(std::move(s.group));
    imgs.push_back(std::move(s.images));
  }
  Tower t(std::move(lv), std::move(imgs), {primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(levels)});
  if (!t.check().valid) throw InternalError("build: " + t.check().reason);
  return t;
}

Supernatural tower_order(const Tower& t, std::size_t J) {
  if (J > t.depth()) throw DomainError("tower_order: depth beyond the tower");
  Supernatural out;
  for (std::size_t j = 1; j <= J; ++j) out = lcm(out, Supernatural::from_integer(t.level(j).order()));
  return out;
}

// ---- JSON ----------------------------------------------------------------------

std::string tower_to_json(const Tower& t) {
  json doc;
  json levels = json::array();
  for (std::size_t i = 1; i <= t.depth(); ++i) {
    json gens = json::array();
    for (const auto& g : t.level(i).generators()) gens.push_back(g.to_string());
    levels.push_back({{"degree", t.level(i).degree()}, {"generators", std::move(gens)}});
  }
  json projections = json::array();
  for (std::size_t i = 1; i < t.depth(); ++i) {
    json imgs = json::array();
    for (const auto& g : t.projection_images(i)) imgs.push_back(g.to_string());
    projections.push_back({{"generator_images", std::move(imgs)}});
  }
  doc["levels"] = std::move(levels);
  doc["projections"] = std::move(projections);
  doc["metadata"] = {{"primes", t.primes()}};
  return doc.dump(2) + "\n";
}

namespace {

std::vector<Permutation> parse_cycles(const json& arr, std::size_t degree, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + ": expected an array of cycle strings");
  std::vector<Permutation> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (!arr[k].is_string()) throw ParseError(where + "[" + std::to_string(k) + "]: expected a string");
    try {
      out.push_back(Permutation::parse(arr[k].get<std::string>(), degree));
    } catch (const ParseError& e) {
      throw ParseError(where + "[" + std::to_string(k) + "]: " + e.what());
    }
  }
  return out;
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing '" + key + "'");
  return obj.at(key);
}

}  // namespace

Tower tower_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("tower file: ") + e.what());
  }
  const json& lv = field(doc, "levels", "tower");
  if (!lv.is_array() || lv.empty()) throw ParseError("tower: 'levels' must be a non-empty array");
  std::vector<FiniteGroup> levels;
  for (std::size_t i = 0; i < lv.size(); ++i) {
    const std::string where = "levels[" + std::to_string(i) + "]";
    const json& d = field(lv[i], "degree", where);
    if (!d.is_number_unsigned() || d.get<std::uint64_t>() == 0)
      throw ParseError(where + ".degree: expected a positive integer");
    const auto degree = d.get<std::size_t>();
    levels.emplace_back(parse_cycles(field(lv[i], "generators", where), degree, where + ".generators"), degree);
  }
  const json& pj = field(doc, "projections", "tower");
  if (!pj.is_array()) throw ParseError("tower: 'projections' must be an array");
  if (pj.size() + 1 != levels.size())
    throw ParseError("tower: " + std::to_string(levels.size()) + " levels need " +
                     std::to_string(levels.size() - 1) + " projections");
  std::vector<std::vector<Permutation>> images;
  for (std::size_t i = 0; i < pj.size(); ++i) {
    const std::string where = "projections[" + std::to_string(i) + "]";
    images.push_back(parse_cycles(field(pj[i], "generator_images", where), levels[i].degree(),
                                  where + ".generator_images"));
  }
  std::vector<std::uint64_t> primes;
  if (doc.contains("metadata")) {
    const json& md = doc.at("metadata");
    if (md.is_object() && md.contains("primes")) {
      const json& ps = md.at("primes");
      if (!ps.is_array()) throw ParseError("metadata.primes: expected an array");
      for (const auto& p : ps) {
        if (!p.is_number_unsigned()) throw ParseError("metadata.primes: expected positive integers");
        primes.push_back(p.get<std::uint64_t>());
      }
    }
  }
  try {
    return Tower(std::move(levels), std::move(images), std::move(primes));
  } catch (const DomainError& e) {
    throw ParseError(std::string("tower: ") + e.what());
  }
}

}  // namespace fitkit
