#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fitkit_cli/corpus.hpp"
#include "fitkit_cli/report.hpp"

namespace fitkit::cli {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::optional<Order> max_order;  // skip larger corpus groups
  std::size_t random_k = 0;        // extra random subgroups of Sym(random_n)
  std::size_t random_n = 8;
};

/// Registered names, in acceptance order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// DomainError for an unknown name. Deterministic for a given corpus and
/// options; wall clock is left unset.
SuiteReport run_suite(const std::string& name, const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts);

}  // namespace fitkit::cli
