#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>
#include <map>
#include <string_view>

#include "gpm/graph.h"

namespace gpm {
namespace {

constexpr char kMagic[8] = {'G', 'P', 'M', 'C', 'S', 'R', '0', '1'};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_comment(std::string_view s) { return s.empty() || s[0] == '#' || s[0] == '%'; }

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_u64(std::string_view tok, std::uint64_t& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return in;
}

template <typename T>
void write_le(std::ostream& out, T value) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>(value >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T read_le(std::istream& in, const std::string& file) {
  unsigned char buf[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(buf), sizeof(T)))
    throw ParseError(file, 0, "truncated binary cache");
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(buf[i]) << (8 * i);
  return value;
}

// Dense label ids: numeric order when every label is an integer, else lexicographic.
std::pair<std::vector<label_t>, std::vector<std::string>> densify_labels(
    const std::vector<std::string>& raw) {
  std::vector<std::string> names(raw);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  const bool numeric = std::all_of(names.begin(), names.end(), [](const std::string& s) {
    std::uint64_t x;
    return parse_u64(s, x);
  });
  if (numeric)
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
      return std::stoull(a) < std::stoull(b);
    });
  std::map<std::string, label_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<label_t>(i);
  std::vector<label_t> dense(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) dense[i] = index.at(raw[i]);
  return {std::move(dense), std::move(names)};
}

}  // namespace

bool is_binary_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  char head[sizeof(kMagic)];
  return in.read(head, sizeof(head)) && std::memcmp(head, kMagic, sizeof(kMagic)) == 0;
}

Graph load_edge_list(const std::filesystem::path& path,
                     const std::optional<std::filesystem::path>& labels_path) {
  Graph base;
  if (is_binary_cache(path)) {
    base = load_binary(path);
  } else {
    auto in = open_or_throw(path);
    std::vector<Edge> edges;
    std::uint64_t max_id = 0;
    bool any = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto s = trim(line);
      if (is_comment(s)) continue;
      auto toks = split_ws(s);
      std::uint64_t u, v;
      if (toks.size() < 2 || !parse_u64(toks[0], u) || !parse_u64(toks[1], v))
        throw ParseError(path.string(), lineno, "expected \"u v\", got \"" + std::string(s) + "\"");
      if (u > 0xFFFFFFFEull || v > 0xFFFFFFFEull)
        throw ParseError(path.string(), lineno, "vertex id exceeds 32-bit range");
      edges.push_back({static_cast<vid_t>(u), static_cast<vid_t>(v)});
      max_id = std::max({max_id, u, v});
      any = true;
    }
    const vid_t n = any ? static_cast<vid_t>(max_id + 1) : 0;
    base = Graph::from_edges(n, edges);
  }
  if (!labels_path) return base;

  auto in = open_or_throw(*labels_path);
  const vid_t n = base.num_vertices();
  std::vector<std::string> raw(n);
  std::vector<bool> seen(n, false);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto s = trim(line);
    if (is_comment(s)) continue;
    auto toks = split_ws(s);
    std::uint64_t id;
    if (toks.size() < 2 || !parse_u64(toks[0], id))
      throw ParseError(labels_path->string(), lineno, "expected \"id label\"");
    if (id >= n)
      throw ParseError(labels_path->string(), lineno,
                       "label for vertex " + std::to_string(id) + " but graph has " +
                           std::to_string(n) + " vertices");
    raw[id] = std::string(toks[1]);
    seen[id] = true;
  }
  for (vid_t v = 0; v < n; ++v)
    if (!seen[v]) throw ParseError(labels_path->string(), 0, "no label for vertex " + std::to_string(v));
  auto [dense, names] = densify_labels(raw);
  std::vector<eid_t> offsets(base.row_offsets().begin(), base.row_offsets().end());
  std::vector<vid_t> adj(base.column_indices().begin(), base.column_indices().end());
  return Graph::from_csr(std::move(offsets), std::move(adj), std::move(dense), std::move(names));
}

void save_binary(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(kMagic, sizeof(kMagic));
  write_le<std::uint64_t>(out, g.num_vertices());
  write_le<std::uint64_t>(out, g.column_indices().size());
  write_le<std::uint64_t>(out, g.labels().size());
  for (eid_t o : g.row_offsets()) write_le<std::uint64_t>(out, o);
  for (vid_t v : g.column_indices()) write_le<std::uint32_t>(out, v);
  for (label_t l : g.labels()) write_le<std::uint32_t>(out, l);
  write_le<std::uint64_t>(out, g.label_names().size());
  for (const auto& name : g.label_names()) {
    write_le<std::uint32_t>(out, static_cast<std::uint32_t>(name.size()));
    out.write(name.data(), static_cast<std::streamsize>(name.size()));
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Graph load_binary(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  const std::string file = path.string();
  char head[sizeof(kMagic)];
  if (!in.read(head, sizeof(head)) || std::memcmp(head, kMagic, sizeof(kMagic)) != 0)
    throw ParseError(file, 0, "not a binary CSR cache");
  const auto n = read_le<std::uint64_t>(in, file);
  const auto arcs = read_le<std::uint64_t>(in, file);
  const auto nlabels = read_le<std::uint64_t>(in, file);
  std::vector<eid_t> offsets(n + 1);
  for (auto& o : offsets) o = read_le<std::uint64_t>(in, file);
  std::vector<vid_t> adj(arcs);
  for (auto& v : adj) v = read_le<std::uint32_t>(in, file);
  std::vector<label_t> labels(nlabels);
  for (auto& l : labels) l = read_le<std::uint32_t>(in, file);
  std::vector<std::string> names(read_le<std::uint64_t>(in, file));
  for (auto& name : names) {
    name.resize(read_le<std::uint32_t>(in, file));
    if (!in.read(name.data(), static_cast<std::streamsize>(name.size())))
      throw ParseError(file, 0, "truncated binary cache");
  }
  try {
    return Graph::from_csr(std::move(offsets), std::move(adj), std::move(labels), std::move(names));
  } catch (const std::invalid_argument& e) {
    throw ParseError(file, 0, std::string("corrupt cache: ") + e.what());
  }
}

}  // namespace gpm
