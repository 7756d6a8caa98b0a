#include "qslab/cache.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace qslab {

namespace {

constexpr std::string_view kCacheSchema = "qslab-chartable-cache";
constexpr int kCacheVersion = 1;

std::string canonical_spec(const GroupSpec& spec) {
  std::ostringstream out;
  out << "n " << spec.n_rank << "\nq " << spec.q_rank << "\n";
  for (const auto& a : spec.action) {
    out << "a";
    for (auto r : a.rows()) out << " " << r;
    out << "\n";
  }
  for (const auto& g : spec.generators) out << "g " << g.name << " " << g.n << " " << g.q << "\n";
  return out.str();
}

std::string hex64(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 0xf];
  return s;
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace

std::uint64_t spec_hash(const GroupSpec& spec) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_spec(spec)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string_view cache_outcome_name(CacheOutcome outcome) {
  switch (outcome) {
    case CacheOutcome::Disabled:
      return "disabled";
    case CacheOutcome::Hit:
      return "hit";
    case CacheOutcome::Miss:
      return "miss";
    case CacheOutcome::Stale:
      return "stale";
  }
  return "unknown";
}

std::string serialize_table(const CharacterTable& table) {
  const auto& g = table.group();
  nlohmann::ordered_json j;
  j["schema"] = kCacheSchema;
  j["version"] = kCacheVersion;
  j["spec_hash"] = hex64(spec_hash(g.spec()));
  j["order"] = g.order();
  auto reps = nlohmann::ordered_json::array();
  for (const auto& c : g.classes()) reps.push_back(c.representative);
  j["class_representatives"] = std::move(reps);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows()) {
    auto values = nlohmann::ordered_json::array();
    for (const auto& v : row.values()) {
      nlohmann::ordered_json cell;
      cell["conductor"] = v.conductor();
      auto coeffs = nlohmann::ordered_json::array();
      for (const auto& c : v.coefficients()) coeffs.push_back(c.str());
      cell["coefficients"] = std::move(coeffs);
      values.push_back(std::move(cell));
    }
    rows.push_back(std::move(values));
  }
  j["rows"] = std::move(rows);
  return j.dump(1) + "\n";
}

std::optional<CharacterTable> deserialize_table(const GroupPtr& group, std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto& g = *group;
    if (j.at("schema") != kCacheSchema || j.at("version") != kCacheVersion) return std::nullopt;
    if (j.at("spec_hash") != hex64(spec_hash(g.spec())) || j.at("order") != g.order()) return std::nullopt;
    const auto& reps = j.at("class_representatives");
    if (reps.size() != g.class_count()) return std::nullopt;
    for (std::size_t c = 0; c < g.class_count(); ++c)
      if (reps[c].get<std::size_t>() != g.classes()[c].representative) return std::nullopt;
    std::vector<ClassFunction> rows;
    for (const auto& row : j.at("rows")) {
      std::vector<Cyclotomic> values;
      for (const auto& cell : row) {
        std::vector<Rational> coeffs;
        for (const auto& c : cell.at("coefficients")) coeffs.push_back(parse_rational(c.get<std::string>()));
        values.push_back(Cyclotomic::from_powers(cell.at("conductor").get<unsigned>(), std::move(coeffs)));
      }
      rows.emplace_back(group, std::move(values));
    }
    CharacterTable table(group, std::move(rows));
    if (table.check_orthogonality()) return std::nullopt;
    return table;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const GroupSpec& spec) {
  return dir / ("chartable-" + hex64(spec_hash(spec)) + ".json");
}

CachedTable load_or_compute_table(const GroupPtr& group,
                                  const std::optional<std::filesystem::path>& dir) {
  if (!dir) return {compute_character_table(group), CacheOutcome::Disabled};
  const auto path = cache_file(*dir, group->spec());
  auto outcome = CacheOutcome::Miss;
  if (std::ifstream in(path); in) {
    std::stringstream buf;
    buf << in.rdbuf();
    if (auto table = deserialize_table(group, buf.str())) return {std::move(*table), CacheOutcome::Hit};
    outcome = CacheOutcome::Stale;
  }
  auto table = compute_character_table(group);
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << serialize_table(table);
  }
  std::filesystem::rename(tmp, path, ec);
  return {std::move(table), outcome};
}

}  // namespace qslab
