#include "plab/table_cache.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace plab {

namespace {

constexpr char kMagic[5] = {'P', 'L', 'A', 'B', '1'};

template <class T>
void put_raw(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof value);
}

template <class T>
T get_raw(std::istream& in) {
  T value{};
  if (!in.read(reinterpret_cast<char*>(&value), sizeof value)) throw CacheFormatError("truncated cache header");
  return value;
}

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

void write_table(std::ostream& out, const SolveTable& table) {
  out.write(kMagic, sizeof kMagic);
  put_raw<std::uint8_t>(out, static_cast<std::uint8_t>(table.rule().cop));
  put_raw<std::uint8_t>(out, static_cast<std::uint8_t>(table.rule().robber));
  put_raw<std::uint8_t>(out, static_cast<std::uint8_t>(table.cops()));
  put_raw<std::uint32_t>(out, static_cast<std::uint32_t>(table.graph().vertex_count()));
  put_raw<std::uint64_t>(out, table.graph_hash());
  put_raw<std::uint64_t>(out, table.space().size());
  const auto& bits = table.win_bits();
  out.write(reinterpret_cast<const char*>(bits.data()), static_cast<std::streamsize>(bits.size() * sizeof bits[0]));
  const auto& times = table.capture_times();
  out.write(reinterpret_cast<const char*>(times.data()), static_cast<std::streamsize>(times.size() * sizeof times[0]));
}

SolveTable read_table(std::istream& in, std::shared_ptr<const Graph> g, int cops, MovementRule rule) {
  char magic[sizeof kMagic];
  if (!in.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
    throw CacheFormatError("bad magic (expected PLAB1)");
  const auto cop_rule = get_raw<std::uint8_t>(in);
  const auto robber_rule = get_raw<std::uint8_t>(in);
  const auto k = get_raw<std::uint8_t>(in);
  const auto n = get_raw<std::uint32_t>(in);
  const auto hash = get_raw<std::uint64_t>(in);
  const auto states = get_raw<std::uint64_t>(in);
  if (cop_rule != static_cast<std::uint8_t>(rule.cop) || robber_rule != static_cast<std::uint8_t>(rule.robber) ||
      k != cops || n != static_cast<std::uint32_t>(g->vertex_count()) || hash != g->adjacency_hash())
    throw CacheFormatError("cache header does not match the requested table");
  auto space = std::make_shared<const StateSpace>(std::move(g), cops, rule);
  if (states != space->size()) throw CacheFormatError("state count mismatch");
  std::vector<std::uint64_t> bits((states + 63) / 64);
  std::vector<std::uint16_t> times(states);
  if (!in.read(reinterpret_cast<char*>(bits.data()), static_cast<std::streamsize>(bits.size() * 8)) ||
      !in.read(reinterpret_cast<char*>(times.data()), static_cast<std::streamsize>(times.size() * 2)))
    throw CacheFormatError("truncated cache body");
  if (in.peek() != std::char_traits<char>::eof()) throw CacheFormatError("trailing bytes after cache body");
  for (std::uint64_t s = 0; s < states; ++s) {
    const bool win = (bits[s >> 6] >> (s & 63)) & 1;
    if (win != (times[s] != kNoCapture)) throw CacheFormatError("win bits and capture times disagree");
  }
  return SolveTable(std::move(space), std::move(bits), std::move(times));
}

std::string table_to_json(const SolveTable& table) {
  nlohmann::json j;
  j["rule"] = table.rule().name();
  j["cops"] = table.cops();
  j["n"] = table.graph().vertex_count();
  j["graph_hash"] = hex(table.graph_hash());
  auto& states = j["states"] = nlohmann::json::array();
  const StateSpace& sp = table.space();
  for (std::uint64_t i = 0; i < sp.size(); ++i) {
    const auto s = static_cast<StateIndex>(i);
    const GameState st = sp.decode(s);
    nlohmann::json e;
    e["phase"] = st.phase == GameState::Phase::RobberToMove ? "robber" : "cops";
    if (st.phase == GameState::Phase::RobberToMove) {
      e["cops"] = st.pending;
    } else {
      e["moved"] = st.moved;
      e["pending"] = st.pending;
      e["any_moved"] = st.any_moved;
    }
    e["robber"] = st.robber;
    e["winner"] = table.cop_win(s) ? "cops" : "robber";
    if (table.cop_win(s)) e["capture_time"] = table.capture_time(s);
    states.push_back(std::move(e));
  }
  return j.dump(1);
}

std::filesystem::path TableCache::resolve_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("PLAB_CACHE_DIR"); env && *env) return env;
  return "plab-cache";
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path TableCache::path_for(const Graph& g, int cops, MovementRule rule) const {
  return dir_ / (hex(g.adjacency_hash()) + "_n" + std::to_string(g.vertex_count()) + "_k" + std::to_string(cops) +
                 "_" + rule.name() + ".plab");
}

std::shared_ptr<const SolveTable> TableCache::get(std::shared_ptr<const Graph> g, int cops, MovementRule rule) {
  const auto path = path_for(*g, cops, rule);
  std::ifstream in(path, std::ios::binary);
  if (!in) return nullptr;
  try {
    return std::make_shared<const SolveTable>(read_table(in, std::move(g), cops, rule));
  } catch (const CacheFormatError& e) {
    warnings_.push_back("corrupt cache file " + path.string() + ": " + e.what() + "; recomputing");
    return nullptr;
  }
}

void TableCache::put(const SolveTable& table) {
  std::filesystem::create_directories(dir_);
  const auto path = path_for(table.graph(), table.cops(), table.rule());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    write_table(out, table);
  }
  std::filesystem::rename(tmp, path);
}

std::shared_ptr<const SolveTable> TableCache::get_or_solve(std::shared_ptr<const Graph> g, int cops,
                                                           MovementRule rule) {
  if (auto hit = get(g, cops, rule)) return hit;
  auto table = std::make_shared<const SolveTable>(solve(std::move(g), cops, rule));
  put(*table);
  return table;
}

std::vector<CacheEntry> TableCache::list() const {
  std::vector<CacheEntry> out;
  if (!std::filesystem::is_directory(dir_)) return out;
  for (const auto& e : std::filesystem::directory_iterator(dir_))
    if (e.is_regular_file() && e.path().extension() == ".plab") out.push_back({e.path(), e.file_size()});
  std::sort(out.begin(), out.end(), [](const CacheEntry& a, const CacheEntry& b) { return a.path < b.path; });
  return out;
}

int TableCache::clear() {
  int removed = 0;
  for (const auto& e : list()) removed += std::filesystem::remove(e.path) ? 1 : 0;
  return removed;
}

}  // namespace plab
