#include "fitkit_cli/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <json.hpp>

#include "fitkit/errors.hpp"
#include "fitkit/fitting.hpp"
#include "fitkit/group_io.hpp"
#include "fitkit/lattice.hpp"
#include "fitkit/numtheory.hpp"
#include "fitkit/perm_core.hpp"

#ifndef FITKIT_CORPUS_DIR
#define FITKIT_CORPUS_DIR "corpus"
#endif

namespace fitkit::cli {

std::filesystem::path default_corpus_dir() { return FITKIT_CORPUS_DIR; }

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  nlohmann::json idx;
  try {
    idx = nlohmann::json::parse(read_text_file(dir / "index.json"));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("corpus index: " + std::string(e.what()));
  }
  if (!idx.contains("groups") || !idx["groups"].is_array()) throw ParseError("corpus index: missing 'groups'");
  std::vector<CorpusEntry> out;
  std::set<std::string> names;
  for (const auto& g : idx["groups"]) {
    try {
      CorpusEntry e{g.at("name").get<std::string>(), {}, {}};
      if (!names.insert(e.name).second) throw ParseError("corpus index: duplicate name " + e.name);
      try {
        e.group = read_group_file(dir / g.at("file").get<std::string>());
      } catch (const ParseError& pe) {
        throw ParseError(e.name + ": " + pe.what());
      }
      if (g.contains("order") && g["order"].get<Order>() != e.group.order())
        throw ParseError("corpus: " + e.name + " has order " + std::to_string(e.group.order()) +
                         ", index says " + std::to_string(g["order"].get<Order>()));
      for (const auto& t : g.value("tags", nlohmann::json::array())) e.tags.insert(t.get<std::string>());
      out.push_back(std::move(e));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("corpus index: " + std::string(e.what()));
    }
  }
  return out;
}

std::set<std::string> compute_tags(const FiniteGroup& G) {
  std::set<std::string> t;
  auto sp = structure_predicates(G);
  if (is_abelian(G)) t.insert("abelian");
  if (sp.is_nilpotent) t.insert("nilpotent");
  if (G.order() > 1 && prime_divisors(G.order()).size() == 1) t.insert("p-group");
  if (sp.is_soluble) t.insert("soluble");
  if (sp.is_perfect && !G.is_trivial()) t.insert("perfect");
  if (is_quasisimple(G)) t.insert("quasisimple");
  if (is_simple(G)) t.insert("simple");
  return t;
}

std::vector<CorpusEntry> random_groups(std::size_t k, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("random groups: degree must be positive");
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Permutation> gens;
    for (int r = 0; r < 2; ++r) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), Point{0});
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(std::move(img));
    }
    FiniteGroup G(std::move(gens), n);
    out.push_back({"random-S" + std::to_string(n) + "-" + std::to_string(i), G, compute_tags(G)});
  }
  return out;
}

}  // namespace fitkit::cli
