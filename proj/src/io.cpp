#include "contraction/io.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "contraction/clique_kernel.hpp"
#include "contraction/errors.hpp"
#include "contraction/oracles.hpp"
#include "contraction/split_kernel.hpp"

namespace contraction {
namespace {

struct Row {
  int line = 0;
  std::vector<long long> nums;
};

// Comment-stripped, whitespace-tokenized integer rows. Blank lines dropped.
std::vector<Row> tokenize(const std::string& text) {
  std::vector<Row> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    Row row;
    row.line = line_no;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'", line_no);
      }
      if (used != tok.size()) {
        throw ParseError("expected an integer, got '" + tok + "'", line_no);
      }
      row.nums.push_back(value);
    }
    if (!row.nums.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

const Row& header_row(const std::vector<Row>& rows, std::size_t arity, const char* shape) {
  if (rows.empty()) throw ParseError(std::string("missing header '") + shape + "'");
  if (rows[0].nums.size() != arity) {
    throw ParseError(std::string("expected header '") + shape + "'", rows[0].line);
  }
  return rows[0];
}

void check_row_count(const std::vector<Row>& rows, long long declared, const char* what) {
  const long long present = static_cast<long long>(rows.size()) - 1;
  if (present < declared) {
    throw ParseError("expected " + std::to_string(declared) + " " + what + " lines, found " +
                     std::to_string(present));
  }
  if (present > declared) {
    throw ParseError("unexpected data after the declared " + std::to_string(declared) + " " +
                         what + " lines",
                     rows[declared + 1].line);
  }
}

int checked_vertex(long long v, long long n, int line) {
  if (v < 0 || v >= n) {
    throw ParseError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) +
                         ")",
                     line);
  }
  return static_cast<int>(v);
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

}  // namespace

Graph parse_graph(const std::string& text) {
  const auto rows = tokenize(text);
  const Row& header = header_row(rows, 2, "n m");
  const long long n = header.nums[0], m = header.nums[1];
  if (n < 0 || m < 0) throw ParseError("negative counts in header", header.line);
  check_row_count(rows, m, "edge");
  EdgeSet edges;
  std::set<Edge> seen;
  for (long long i = 1; i <= m; ++i) {
    const Row& row = rows[i];
    if (row.nums.size() != 2) throw ParseError("expected 'u v'", row.line);
    const int u = checked_vertex(row.nums[0], n, row.line);
    const int v = checked_vertex(row.nums[1], n, row.line);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), row.line);
    const Edge e = make_edge(u, v);
    if (!seen.insert(e).second) {
      throw ParseError("duplicate edge " + std::to_string(e.first) + " " +
                           std::to_string(e.second),
                       row.line);
    }
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

ColoredGraph parse_colored_graph(const std::string& text) {
  const auto rows = tokenize(text);
  const Row& header = header_row(rows, 3, "n m t");
  const long long n = header.nums[0], m = header.nums[1], t = header.nums[2];
  if (n < 0 || m < 0 || t < 0) throw ParseError("negative counts in header", header.line);
  check_row_count(rows, m, "edge");
  std::vector<std::pair<Edge, int>> colored;
  std::set<Edge> seen;
  for (long long i = 1; i <= m; ++i) {
    const Row& row = rows[i];
    if (row.nums.size() != 3) throw ParseError("expected 'u v c'", row.line);
    const int u = checked_vertex(row.nums[0], n, row.line);
    const int v = checked_vertex(row.nums[1], n, row.line);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), row.line);
    const long long c = row.nums[2];
    if (c < 1 || c > t) {
      throw ParseError("color " + std::to_string(c) + " out of range [1, " + std::to_string(t) +
                           "]",
                       row.line);
    }
    const Edge e = make_edge(u, v);
    if (!seen.insert(e).second) {
      throw ParseError("duplicate edge " + std::to_string(e.first) + " " +
                           std::to_string(e.second),
                       row.line);
    }
    colored.push_back({e, static_cast<int>(c) - 1});
  }
  std::sort(colored.begin(), colored.end());
  ColoredGraph cg;
  cg.t = static_cast<int>(t);
  EdgeSet edges;
  for (auto& [e, c] : colored) {
    edges.push_back(e);
    cg.color.push_back(c);
  }
  cg.graph = Graph(static_cast<int>(n), std::move(edges));
  return cg;
}

SetCoverInstance parse_setcover(const std::string& text) {
  const auto rows = tokenize(text);
  const Row& header = header_row(rows, 3, "n m k");
  const long long n = header.nums[0], m = header.nums[1], k = header.nums[2];
  if (n < 0 || m < 0 || k < 0) throw ParseError("negative counts in header", header.line);
  check_row_count(rows, m, "set");
  SetCoverInstance sc;
  sc.n_elements = static_cast<int>(n);
  sc.k = static_cast<int>(k);
  for (long long i = 1; i <= m; ++i) {
    const Row& row = rows[i];
    const long long size = row.nums[0];
    if (size < 0 || row.nums.size() != static_cast<std::size_t>(size) + 1) {
      throw ParseError("expected 'size e1 ... e_size'", row.line);
    }
    std::vector<int> members;
    std::set<int> seen;
    for (long long j = 1; j <= size; ++j) {
      const int e = checked_vertex(row.nums[j], n, row.line);
      if (!seen.insert(e).second) {
        throw ParseError("duplicate element " + std::to_string(e) + " in set", row.line);
      }
      members.push_back(e);
    }
    sc.sets.push_back(std::move(members));
  }
  return sc;
}

EdgeSet parse_edge_set(const std::string& text) {
  const auto rows = tokenize(text);
  const Row& header = header_row(rows, 1, "m");
  const long long m = header.nums[0];
  if (m < 0) throw ParseError("negative count in header", header.line);
  check_row_count(rows, m, "edge");
  EdgeSet edges;
  std::set<Edge> seen;
  for (long long i = 1; i <= m; ++i) {
    const Row& row = rows[i];
    if (row.nums.size() != 2) throw ParseError("expected 'u v'", row.line);
    const long long u = row.nums[0], v = row.nums[1];
    if (u < 0 || v < 0 || u > std::numeric_limits<int>::max() ||
        v > std::numeric_limits<int>::max()) {
      throw ParseError("vertex out of range", row.line);
    }
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), row.line);
    const Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
    if (!seen.insert(e).second) {
      throw ParseError("duplicate edge " + std::to_string(e.first) + " " +
                           std::to_string(e.second),
                       row.line);
    }
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string serialize_colored_graph(const ColoredGraph& cg) {
  std::ostringstream os;
  os << cg.graph.vertex_count() << ' ' << cg.graph.edge_count() << ' ' << cg.t << '\n';
  for (int i = 0; i < cg.graph.edge_count(); ++i) {
    const auto& [u, v] = cg.graph.edges()[i];
    os << u << ' ' << v << ' ' << cg.color[i] + 1 << '\n';
  }
  return os.str();
}

std::string serialize_setcover(const SetCoverInstance& sc) {
  std::ostringstream os;
  os << sc.n_elements << ' ' << sc.sets.size() << ' ' << sc.k << '\n';
  for (const auto& s : sc.sets) {
    os << s.size();
    for (int e : s) os << ' ' << e;
    os << '\n';
  }
  return os.str();
}

std::string serialize_edge_set(const EdgeSet& f) {
  std::ostringstream os;
  os << f.size() << '\n';
  for (const auto& [u, v] : f) os << u << ' ' << v << '\n';
  return os.str();
}

namespace {

// Uniform value in [0, n) from whole rng draws; fixed algorithm so that
// generated instances are reproducible across platforms.
int bounded(std::mt19937_64& rng, int n) {
  if (n <= 1) return 0;
  const int bits = std::bit_width(static_cast<std::uint64_t>(n - 1));
  const std::uint64_t mask = (bits >= 64) ? ~0ULL : ((1ULL << bits) - 1);
  while (true) {
    const std::uint64_t v = rng() & mask;
    if (v < static_cast<std::uint64_t>(n)) return static_cast<int>(v);
  }
}

}  // namespace

Graph gen_random_graph(int n, unsigned long long seed) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::mt19937_64 rng(seed);
  EdgeSet edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() & 1ULL) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

Graph gen_perturbed_clique(int n, unsigned long long seed) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::mt19937_64 rng(seed);
  EdgeSet all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  const int m = static_cast<int>(all.size());
  const int removals = std::min(m, std::max(1, n / 3));
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  for (int i = 0; i < removals; ++i) std::swap(idx[i], idx[i + bounded(rng, m - i)]);
  std::set<int> removed(idx.begin(), idx.begin() + removals);
  EdgeSet edges;
  for (int i = 0; i < m; ++i) {
    if (!removed.count(i)) edges.push_back(all[i]);
  }
  return Graph(n, std::move(edges));
}

Graph gen_perturbed_split(int n, unsigned long long seed) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::mt19937_64 rng(seed);
  const int h = (n + 1) / 2;
  std::set<Edge> edges;
  for (int u = 0; u < h; ++u) {
    for (int v = u + 1; v < h; ++v) edges.insert({u, v});
  }
  for (int v = h; v < n; ++v) {
    for (int u = 0; u < h; ++u) {
      if (rng() & 1ULL) edges.insert({u, v});
    }
  }
  if (n - h >= 2) {
    for (int attempt = 0; attempt < 2; ++attempt) {
      const int a = h + bounded(rng, n - h);
      const int b = h + bounded(rng, n - h);
      if (a != b) edges.insert(make_edge(a, b));
    }
  }
  return Graph(n, EdgeSet(edges.begin(), edges.end()));
}

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

const char* kind_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::unchanged: return "unchanged";
    case KernelKind::reduced: return "reduced";
    case KernelKind::trivial_no: return "trivial_no";
    default: return "infeasible";
  }
}

KernelKind kind_from(const std::string& name) {
  if (name == "unchanged") return KernelKind::unchanged;
  if (name == "reduced") return KernelKind::reduced;
  if (name == "trivial_no") return KernelKind::trivial_no;
  if (name == "infeasible") return KernelKind::infeasible;
  throw ParseError("unknown kernel kind '" + name + "'");
}

// Flat "key value..." file: one entry per line, '#' comments allowed.
struct KvFile {
  std::map<std::string, std::string> entries;

  const std::string& str(const std::string& key) const {
    auto it = entries.find(key);
    if (it == entries.end()) throw ParseError("missing key '" + key + "'");
    return it->second;
  }
  long long num(const std::string& key) const {
    try {
      return std::stoll(str(key));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("key '" + key + "' is not an integer");
    }
  }
  double real(const std::string& key) const {
    try {
      return std::stod(str(key));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("key '" + key + "' is not a number");
    }
  }
  std::vector<int> list(const std::string& key) const {
    std::istringstream ss(str(key));
    std::vector<int> out;
    long long v = 0;
    while (ss >> v) out.push_back(static_cast<int>(v));
    return out;
  }
};

KvFile parse_kv(const std::string& text) {
  KvFile kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string value;
    std::getline(ls, value);
    const auto start = value.find_first_not_of(" \t");
    value = start == std::string::npos ? std::string() : value.substr(start);
    const auto end = value.find_last_not_of(" \t\r");
    if (end != std::string::npos) value.resize(end + 1);
    if (!kv.entries.emplace(key, value).second) {
      throw ParseError("duplicate key '" + key + "'", line_no);
    }
  }
  return kv;
}

void append_list(std::ostringstream& os, const char* key, const std::vector<int>& values) {
  os << key;
  for (int v : values) os << ' ' << v;
  os << '\n';
}

// ---- gadget instance file: graph body plus '#' directives that pin the
// ---- parameters and the colored host graph it was built from.

std::string gadget_to_text(const GadgetInstance& gi, const ColoredGraph& host) {
  std::ostringstream os;
  os << "# split-contraction gadget\n";
  os << "# k " << gi.params.k << '\n';
  os << "# delta " << format_double(gi.params.delta) << '\n';
  os << "# host " << host.graph.vertex_count() << ' ' << host.graph.edge_count() << ' '
     << host.t << '\n';
  for (int i = 0; i < host.graph.edge_count(); ++i) {
    const auto& [u, v] = host.graph.edges()[i];
    os << "# host-edge " << u << ' ' << v << ' ' << host.color[i] + 1 << '\n';
  }
  os << serialize_graph(gi.graph);
  return os.str();
}

GadgetInstance parse_gadget_file(const std::string& text) {
  std::optional<int> k;
  std::optional<double> delta;
  std::optional<std::vector<long long>> host_header;
  std::ostringstream host_edges;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int host_edge_count = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash == std::string::npos) continue;
    std::istringstream ls(line.substr(hash + 1));
    std::string directive;
    if (!(ls >> directive)) continue;
    if (directive == "k") {
      int v = 0;
      if (!(ls >> v)) throw ParseError("malformed '# k' directive", line_no);
      k = v;
    } else if (directive == "delta") {
      double v = 0;
      if (!(ls >> v)) throw ParseError("malformed '# delta' directive", line_no);
      delta = v;
    } else if (directive == "host") {
      std::vector<long long> nums(3);
      if (!(ls >> nums[0] >> nums[1] >> nums[2])) {
        throw ParseError("malformed '# host' directive", line_no);
      }
      host_header = nums;
    } else if (directive == "host-edge") {
      long long u = 0, v = 0, c = 0;
      if (!(ls >> u >> v >> c)) throw ParseError("malformed '# host-edge' directive", line_no);
      host_edges << u << ' ' << v << ' ' << c << '\n';
      ++host_edge_count;
    }
  }
  if (!k || !delta || !host_header) {
    throw ParseError("gadget file misses '# k', '# delta' or '# host' directives");
  }
  if (host_edge_count != (*host_header)[1]) {
    throw ParseError("gadget file host-edge directives do not match the '# host' header");
  }
  std::ostringstream host_text;
  host_text << (*host_header)[0] << ' ' << (*host_header)[1] << ' ' << (*host_header)[2] << '\n'
            << host_edges.str();
  const ColoredGraph host = parse_colored_graph(host_text.str());
  GadgetInstance gi = build_split_gadget(host, *k, *delta);
  const Graph body = parse_graph(text);
  if (!(gi.graph == body)) {
    throw ParseError("gadget graph body does not match its '#' parameter directives");
  }
  return gi;
}

std::string value_or_inf(int value) {
  return value == kInf ? "inf" : std::to_string(value);
}

TargetClass class_of(const std::string& name) {
  if (name == "clique") return TargetClass::complete;
  if (name == "split") return TargetClass::split;
  return TargetClass::chordal;
}

// ---- subcommand bodies ----

int cmd_kernelize(const std::string& problem, int k, double epsilon, const std::string& in,
                  const std::string& out_dir) {
  const Graph g = parse_graph(read_file(in));
  fs::create_directories(out_dir);
  std::ostringstream map, meta;
  KernelKind kind;
  int kernel_n = 0, kernel_m = 0, k_out = 0;
  std::string kernel_text;
  if (problem == "clique") {
    const auto cfg = CliqueKernelConfig::make(epsilon, k);
    const KernelResult kr = reduce_clique(g, cfg);
    kind = kr.kind;
    kernel_n = kr.graph.vertex_count();
    kernel_m = kr.graph.edge_count();
    k_out = kr.k_out;
    kernel_text = serialize_graph(kr.graph);
    map << "problem clique\n";
    map << "kind " << kind_name(kr.kind) << '\n';
    map << "k " << cfg.k << '\n';
    map << "epsilon " << format_double(cfg.epsilon) << '\n';
    map << "k_out " << kr.k_out << '\n';
    append_list(map, "kept", kr.kept);
    append_list(map, "partition_x", kr.partition_x);
    meta << "problem clique\nkind " << kind_name(kr.kind) << "\nk " << cfg.k << "\nepsilon "
         << format_double(cfg.epsilon) << "\nd " << cfg.d << "\nk_out " << kr.k_out
         << "\nkernel_vertices " << kernel_n << "\nkernel_edges " << kernel_m << '\n';
  } else {
    const auto cfg = SplitKernelConfig::make(epsilon, k);
    const SplitKernelResult kr = reduce_split(g, cfg);
    kind = kr.kind;
    kernel_n = kr.graph.vertex_count();
    kernel_m = kr.graph.edge_count();
    k_out = kr.k_out;
    kernel_text = serialize_graph(kr.graph);
    map << "problem split\n";
    map << "kind " << kind_name(kr.kind) << '\n';
    map << "k " << cfg.k << '\n';
    map << "epsilon " << format_double(cfg.epsilon) << '\n';
    map << "alpha " << format_double(cfg.alpha) << '\n';
    map << "k_out " << kr.k_out << '\n';
    map << "mandatory_cost " << kr.mandatory_cost << '\n';
    append_list(map, "kept", kr.kept);
    append_list(map, "part_s", kr.part_s);
    append_list(map, "part_x", kr.part_x);
    append_list(map, "part_y", kr.part_y);
    meta << "problem split\nkind " << kind_name(kr.kind) << "\nk " << cfg.k << "\nepsilon "
         << format_double(cfg.epsilon) << "\nalpha " << format_double(cfg.alpha) << "\nd "
         << cfg.d << "\nc " << format_double(cfg.c) << "\nk_out " << kr.k_out
         << "\nmandatory_cost " << kr.mandatory_cost << "\nkernel_vertices " << kernel_n
         << "\nkernel_edges " << kernel_m << '\n';
  }
  write_file(out_dir + "/kernel.graph", kernel_text);
  write_file(out_dir + "/kernel.map", map.str());
  write_file(out_dir + "/kernel.meta", meta.str());
  std::cout << "kind " << kind_name(kind) << '\n';
  std::cout << "kernel_vertices " << kernel_n << '\n';
  std::cout << "kernel_edges " << kernel_m << '\n';
  std::cout << "k_out " << k_out << '\n';
  return (kind == KernelKind::trivial_no || kind == KernelKind::infeasible) ? 3 : 0;
}

int cmd_lift(const std::string& problem, const std::string& in, const std::string& kernel_dir,
             const std::string& sol, const std::string& out) {
  const Graph g = parse_graph(read_file(in));
  const KvFile map = parse_kv(read_file(kernel_dir + "/kernel.map"));
  if (map.str("problem") != problem) {
    throw ParseError("kernel directory was produced for problem '" + map.str("problem") + "'");
  }
  const Graph kernel = parse_graph(read_file(kernel_dir + "/kernel.graph"));
  const EdgeSet f_prime = parse_edge_set(read_file(sol));
  const int k = static_cast<int>(map.num("k"));
  const double epsilon = map.real("epsilon");
  EdgeSet lifted;
  int value = kInf;
  if (problem == "clique") {
    const auto cfg = CliqueKernelConfig::make(epsilon, k);
    KernelResult kr;
    kr.kind = kind_from(map.str("kind"));
    kr.graph = kernel;
    kr.k_out = static_cast<int>(map.num("k_out"));
    kr.kept = map.list("kept");
    kr.partition_x = map.list("partition_x");
    lifted = lift_clique(g, cfg, kr, f_prime);
    value = objective_clc(g, k, lifted);
  } else {
    const auto cfg = SplitKernelConfig::make_with_alpha(epsilon, k, map.real("alpha"));
    SplitKernelResult kr;
    kr.kind = kind_from(map.str("kind"));
    kr.graph = kernel;
    kr.k_out = static_cast<int>(map.num("k_out"));
    kr.kept = map.list("kept");
    kr.part_s = map.list("part_s");
    kr.part_x = map.list("part_x");
    kr.part_y = map.list("part_y");
    kr.mandatory_cost = static_cast<int>(map.num("mandatory_cost"));
    lifted = lift_split(g, cfg, kr, f_prime);
    value = objective_spc(g, k, lifted);
  }
  write_file(out, serialize_edge_set(lifted));
  std::cout << "lifted_edges " << lifted.size() << '\n';
  std::cout << "lifted_value " << value_or_inf(value) << '\n';
  return value == kInf ? 3 : 0;
}

int print_solution(int value, const EdgeSet* edges) {
  std::cout << "value " << value_or_inf(value) << '\n';
  if (value != kInf && edges) {
    for (const auto& [u, v] : *edges) std::cout << u << ' ' << v << '\n';
  }
  return value == kInf ? 3 : 0;
}

int cmd_solve(const std::string& problem, int k, const std::string& in, bool exact,
              double epsilon) {
  const Graph g = parse_graph(read_file(in));
  const TargetClass cls = class_of(problem);
  if (exact || problem == "chordal") {
    const auto best = brute_force_contraction(g, k, cls);
    if (best) return print_solution(best->second, &best->first);
    const EdgeSet forest = spanning_forest_edges(g);
    const int value = [&] {
      auto [q, w] = contract_edges(g, forest);
      (void)w;
      return in_target_class(q, cls) ? k + 1 : kInf;
    }();
    return print_solution(value, &forest);
  }
  EdgeSet lifted;
  int value = kInf;
  if (problem == "clique") {
    const auto cfg = CliqueKernelConfig::make(epsilon, k);
    const KernelResult kr = reduce_clique(g, cfg);
    const auto best = brute_force_contraction(kr.graph, kr.k_out, cls);
    const EdgeSet f_prime = best ? best->first : spanning_forest_edges(kr.graph);
    lifted = lift_clique(g, cfg, kr, f_prime);
    value = objective_clc(g, k, lifted);
  } else {
    const auto cfg = SplitKernelConfig::make(epsilon, k);
    const SplitKernelResult kr = reduce_split(g, cfg);
    const auto best = brute_force_contraction(kr.graph, kr.k_out, cls);
    const EdgeSet f_prime = best ? best->first : spanning_forest_edges(kr.graph);
    lifted = lift_split(g, cfg, kr, f_prime);
    value = objective_spc(g, k, lifted);
  }
  return print_solution(value, &lifted);
}

int cmd_check(const std::string& cls_name, int k, const std::string& in,
              const std::string& sol) {
  const Graph g = parse_graph(read_file(in));
  const EdgeSet f = parse_edge_set(read_file(sol));
  const SolutionReport report = verify_solution(g, k, f, class_of(cls_name));
  std::cout << "edges_valid " << (report.edges_valid ? "true" : "false") << '\n';
  std::cout << "quotient_in_class " << (report.quotient_in_class ? "true" : "false") << '\n';
  std::cout << "value " << value_or_inf(report.value) << '\n';
  return (report.edges_valid && report.quotient_in_class) ? 0 : 3;
}

int cmd_reduce_setcover(const std::string& in, const std::string& out) {
  const SetCoverInstance sc = parse_setcover(read_file(in));
  const ChordalInstance ci = set_cover_to_chordal(sc);
  std::ostringstream os;
  os << "# chordal-contraction instance built from a set cover\n";
  os << "# k " << ci.k << '\n';
  os << "# universe " << sc.n_elements << '\n';
  os << "# sets " << sc.sets.size() << '\n';
  for (std::size_t j = 0; j < sc.sets.size(); ++j) {
    os << "# set " << j;
    for (int e : sc.sets[j]) os << ' ' << e;
    os << '\n';
  }
  os << serialize_graph(ci.graph);
  write_file(out, os.str());
  std::cout << "vertices " << ci.graph.vertex_count() << '\n';
  std::cout << "edges " << ci.graph.edge_count() << '\n';
  std::cout << "k " << ci.k << '\n';
  return 0;
}

int cmd_reduce_dks(const std::string& in, int k, double delta, const std::string& out) {
  const ColoredGraph cg = parse_colored_graph(read_file(in));
  const GadgetInstance gi = build_split_gadget(cg, k, delta);
  write_file(out, gadget_to_text(gi, cg));
  std::cout << "vertices " << gi.graph.vertex_count() << '\n';
  std::cout << "edges " << gi.graph.edge_count() << '\n';
  std::cout << "k_prime " << gi.k_prime << '\n';
  return 0;
}

int cmd_extract(const std::string& gadget, const std::string& sol) {
  const GadgetInstance gi = parse_gadget_file(read_file(gadget));
  const EdgeSet f = parse_edge_set(read_file(sol));
  const auto [vertices, edges] = extract_dense_subgraph(gi, f);
  std::cout << "vertices";
  for (int v : vertices) std::cout << ' ' << v;
  std::cout << '\n';
  for (const auto& [u, v] : edges) std::cout << "edge " << u << ' ' << v << '\n';
  return 0;
}

int cmd_gen(const std::string& family, int n, unsigned long long seed) {
  Graph g;
  if (family == "random") {
    g = gen_random_graph(n, seed);
  } else if (family == "perturbed-clique") {
    g = gen_perturbed_clique(n, seed);
  } else {
    g = gen_perturbed_split(n, seed);
  }
  std::cout << serialize_graph(g);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"lossy kernelization toolkit for graph contraction problems"};
  app.require_subcommand(1);

  auto* kernelize = app.add_subcommand("kernelize", "shrink an instance, keeping lifting data");
  std::string kz_problem, kz_in, kz_out_dir;
  int kz_k = 0;
  double kz_epsilon = 1.0;
  kernelize->add_option("--problem", kz_problem, "clique or split")
      ->required()
      ->check(CLI::IsMember({"clique", "split"}));
  kernelize->add_option("--k", kz_k, "contraction budget")->required()->check(CLI::NonNegativeNumber);
  kernelize->add_option("--epsilon", kz_epsilon, "approximation slack, > 0")->required();
  kernelize->add_option("--in", kz_in, "instance file")->required();
  kernelize->add_option("--out-dir", kz_out_dir, "directory for kernel.{graph,map,meta}")
      ->required();

  auto* lift = app.add_subcommand("lift", "map a kernel solution back to the original graph");
  std::string lf_problem, lf_in, lf_kernel_dir, lf_sol, lf_out;
  lift->add_option("--problem", lf_problem, "clique or split")
      ->required()
      ->check(CLI::IsMember({"clique", "split"}));
  lift->add_option("--in", lf_in, "original instance file")->required();
  lift->add_option("--kernel-dir", lf_kernel_dir, "directory written by kernelize")->required();
  lift->add_option("--sol", lf_sol, "edge-set file in kernel vertex ids")->required();
  lift->add_option("--out", lf_out, "where to write the lifted edge set")->required();

  auto* solve = app.add_subcommand("solve", "compute a contraction solution");
  std::string sv_problem, sv_in;
  int sv_k = 0;
  bool sv_exact = false;
  double sv_epsilon = 1.0;
  solve->add_option("--problem", sv_problem, "clique, split or chordal")
      ->required()
      ->check(CLI::IsMember({"clique", "split", "chordal"}));
  solve->add_option("--k", sv_k, "contraction budget")->required()->check(CLI::NonNegativeNumber);
  solve->add_option("--in", sv_in, "instance file")->required();
  solve->add_flag("--exact", sv_exact, "exhaustive search instead of kernelize+lift");
  solve->add_option("--epsilon", sv_epsilon, "slack for the kernel pipeline (default 1)");

  auto* check = app.add_subcommand("check", "verify a claimed solution");
  std::string ck_class, ck_in, ck_sol;
  int ck_k = 0;
  check->add_option("--class", ck_class, "clique, split or chordal")
      ->required()
      ->check(CLI::IsMember({"clique", "split", "chordal"}));
  check->add_option("--k", ck_k, "contraction budget")->required()->check(CLI::NonNegativeNumber);
  check->add_option("--in", ck_in, "instance file")->required();
  check->add_option("--sol", ck_sol, "edge-set file")->required();

  auto* reduce = app.add_subcommand("reduce", "build a contraction instance from another problem");
  std::string rd_from, rd_in, rd_out;
  int rd_k = 0;
  double rd_delta = 0.25;
  reduce->add_option("--from", rd_from, "setcover or dks")
      ->required()
      ->check(CLI::IsMember({"setcover", "dks"}));
  reduce->add_option("--in", rd_in, "source instance file")->required();
  reduce->add_option("--out", rd_out, "where to write the produced instance")->required();
  reduce->add_option("--k", rd_k, "dks only: clique size");
  reduce->add_option("--delta", rd_delta, "dks only: density slack, > 0");

  auto* extract = app.add_subcommand("extract", "recover a dense subgraph from a gadget solution");
  std::string ex_gadget, ex_sol;
  extract->add_option("--gadget", ex_gadget, "gadget file written by reduce --from dks")
      ->required();
  extract->add_option("--sol", ex_sol, "edge-set file on the gadget")->required();

  auto* gen = app.add_subcommand("gen", "write a seeded instance to stdout");
  std::string gn_family;
  int gn_n = 0;
  unsigned long long gn_seed = 0;
  gen->add_option("--family", gn_family, "random, perturbed-clique or perturbed-split")
      ->required()
      ->check(CLI::IsMember({"random", "perturbed-clique", "perturbed-split"}));
  gen->add_option("--n", gn_n, "vertex count")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gn_seed, "rng seed")->required();

  std::vector<std::string> storage;
  storage.push_back("contraction");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(storage.size());
  for (const auto& s : storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(kernelize)) {
      if (kz_epsilon <= 0) throw ParseError("--epsilon must be positive");
      return cmd_kernelize(kz_problem, kz_k, kz_epsilon, kz_in, kz_out_dir);
    }
    if (app.got_subcommand(lift)) {
      return cmd_lift(lf_problem, lf_in, lf_kernel_dir, lf_sol, lf_out);
    }
    if (app.got_subcommand(solve)) {
      if (sv_epsilon <= 0) throw ParseError("--epsilon must be positive");
      return cmd_solve(sv_problem, sv_k, sv_in, sv_exact, sv_epsilon);
    }
    if (app.got_subcommand(check)) {
      return cmd_check(ck_class, ck_k, ck_in, ck_sol);
    }
    if (app.got_subcommand(reduce)) {
      if (rd_from == "setcover") return cmd_reduce_setcover(rd_in, rd_out);
      if (!reduce->count("--k")) throw ParseError("reduce --from dks needs --k");
      if (!reduce->count("--delta")) throw ParseError("reduce --from dks needs --delta");
      if (rd_delta <= 0) throw ParseError("--delta must be positive");
      return cmd_reduce_dks(rd_in, rd_k, rd_delta, rd_out);
    }
    if (app.got_subcommand(extract)) {
      return cmd_extract(ex_gadget, ex_sol);
    }
    return cmd_gen(gn_family, gn_n, gn_seed);
  } catch (const AssertionViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return 4;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const NotASolution& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace contraction
