#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "fitkit/group.hpp"

namespace fitkit::cli {

struct CorpusEntry {
  std::string name;
  FiniteGroup group;
  std::set<std::string> tags;  // abelian, nilpotent, p-group, soluble, perfect, quasisimple, simple
};

/// Directory baked in at build time.
std::filesystem::path default_corpus_dir();

/// Reads index.json and every group file it lists, in index order. Names
/// must be unique and each group must have the order recorded in the index.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

std::set<std::string> compute_tags(const FiniteGroup& G);

/// k subgroups of Sym(n), each generated by two uniform random permutations.
std::vector<CorpusEntry> random_groups(std::size_t k, std::size_t n, std::uint64_t seed);

}  // namespace fitkit::cli
