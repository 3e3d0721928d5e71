#include "fitkit/group_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "fitkit/errors.hpp"

namespace fitkit {

namespace {

std::string_view strip(std::string_view s) {
  if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

FiniteGroup parse_group(std::string_view text) {
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = strip(raw);
    if (line.empty()) continue;
    if (degree == 0) {
      constexpr std::string_view kw = "degree";
      if (line.substr(0, kw.size()) != kw) throw ParseError("expected 'degree N' before generators", line_no);
      std::string_view num = strip(line.substr(kw.size()));
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), degree);
      if (num.empty() || ec != std::errc() || ptr != num.data() + num.size() || degree == 0)
        throw ParseError("bad degree '" + std::string(num) + "'", line_no);
      continue;
    }
    try {
      gens.push_back(Permutation::parse(line, degree));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (degree == 0) throw ParseError("missing 'degree N' line", line_no);
  return FiniteGroup(std::move(gens), degree);
}

std::string format_group(const FiniteGroup& G) {
  std::string out = "degree " + std::to_string(G.degree()) + "\n";
  for (const auto& g : G.generators()) out += g.to_string() + "\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteGroup read_group_file(const std::filesystem::path& path) {
  try {
    return parse_group(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_group_file(const std::filesystem::path& path, const FiniteGroup& G) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << format_group(G);
}

}  // namespace fitkit
