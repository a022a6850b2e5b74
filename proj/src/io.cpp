#include "oscnet/io.hpp"

#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#include "oscnet/detail/rng.hpp"
#include "oscnet/error.hpp"

namespace oscnet {

namespace {

using nlohmann::json;

double parse_double(std::string_view token, const char* what) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    raise(errc::parse_error, std::string(what) + ": cannot parse number '" +
                                 std::string(token) + "'");
  return value;
}

long parse_long(std::string_view token, const char* what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    raise(errc::parse_error, std::string(what) + ": cannot parse integer '" +
                                 std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  while (begin <= line.size()) {
    std::size_t end = line.find(sep, begin);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(begin, end - begin));
    begin = end + 1;
    if (end == line.size()) break;
  }
  return out;
}

json parse_json_text(const std::string& text, const char* what) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded())
    raise(errc::parse_error, std::string(what) + ": malformed JSON");
  return parsed;
}

json graph_json(const WeightedDigraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.source, e.target, e.weight});
  return json{{"n", g.node_count()}, {"edges", edges}};
}

WeightedDigraph graph_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    raise(errc::parse_error, "graph JSON needs fields 'n' and 'edges'");
  const int n = doc.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& item : doc.at("edges")) {
    if (!item.is_array() || item.size() != 3)
      raise(errc::parse_error, "graph edge must be a [source, target, weight] triple");
    edges.push_back({item.at(0).get<int>(), item.at(1).get<int>(), item.at(2).get<double>()});
  }
  return build_graph(n, edges);
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json complex_rows_json(const std::vector<ComplexVector>& rows, bool real_part) {
  json out = json::array();
  for (const ComplexVector& row : rows) {
    json line = json::array();
    for (Index i = 0; i < row.size(); ++i)
      line.push_back(real_part ? row[i].real() : row[i].imag());
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 40> buffer{};
  auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), ptr);
}

std::string graph_hash(const WeightedDigraph& g) {
  std::string canonical = std::to_string(g.node_count());
  for (const Edge& e : g.edges()) {
    canonical += '|';
    canonical += std::to_string(e.source);
    canonical += ',';
    canonical += std::to_string(e.target);
    canonical += ',';
    canonical += format_double(e.weight);
  }
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  std::array<char, 17> hex{};
  static const char digits[] = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    hex[std::size_t(i)] = digits[hash & 0xf];
    hash >>= 4;
  }
  return std::string(hex.data(), 16);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::io_error, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) raise(errc::io_error, "read failure on " + path.string());
  return std::move(buffer).str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(errc::io_error, "cannot open " + path.string() + " for writing");
  out << text;
  if (!out) raise(errc::io_error, "write failure on " + path.string());
}

WeightedDigraph parse_graph_json(const std::string& text) {
  return graph_from_json(parse_json_text(text, "graph"));
}

WeightedDigraph parse_graph_edgelist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_n = false;
  int n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    std::string token;
    while (tokens >> token) fields.push_back(token);
    if (fields.empty()) continue;
    if (!have_n) {
      if (fields.size() != 1) raise(errc::parse_error, "edge list must start with the node count");
      n = int(parse_long(fields[0], "edge list node count"));
      have_n = true;
      continue;
    }
    if (fields.size() != 3)
      raise(errc::parse_error, "edge list lines must be 'source target weight'");
    edges.push_back({int(parse_long(fields[0], "edge source")),
                     int(parse_long(fields[1], "edge target")),
                     parse_double(fields[2], "edge weight")});
  }
  if (!have_n) raise(errc::parse_error, "edge list is empty");
  return build_graph(n, edges);
}

std::string graph_to_json(const WeightedDigraph& g) { return graph_json(g).dump(2) + "\n"; }

std::string graph_to_edgelist(const WeightedDigraph& g) {
  std::string out = std::to_string(g.node_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.source);
    out += ' ';
    out += std::to_string(e.target);
    out += ' ';
    out += format_double(e.weight);
    out += '\n';
  }
  return out;
}

WeightedDigraph load_graph(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
  return parse_graph_edgelist(text);
}

void save_graph(const WeightedDigraph& g, const std::filesystem::path& path) {
  if (path.extension() == ".json")
    write_text_file(path, graph_to_json(g));
  else
    write_text_file(path, graph_to_edgelist(g));
}

void write_matrix_csv(const Matrix& m, const std::filesystem::path& path) {
  std::string out;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  write_text_file(path, out);
}

Matrix read_matrix_csv(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    for (std::string_view token : split(line, ','))
      row.push_back(parse_double(token, "matrix CSV"));
    if (!rows.empty() && row.size() != rows.front().size())
      raise(errc::parse_error, "matrix CSV is not rectangular");
    rows.push_back(std::move(row));
  }
  Matrix m(Index(rows.size()), rows.empty() ? 0 : Index(rows.front().size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = rows[std::size_t(i)][std::size_t(j)];
  return m;
}

void write_pattern_pbm(const BoolMatrix& pattern, const std::filesystem::path& path) {
  std::string out = "P1\n";
  out += std::to_string(pattern.cols()) + " " + std::to_string(pattern.rows()) + "\n";
  for (Index i = 0; i < pattern.rows(); ++i) {
    for (Index j = 0; j < pattern.cols(); ++j) {
      if (j > 0) out += ' ';
      out += pattern(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  write_text_file(path, out);
}

std::string trajectory_to_csv(const TrajectoryRecord& trajectory) {
  const Index n = trajectory.projected.empty() ? 0 : trajectory.projected.front().size();
  std::string out = "t";
  for (Index i = 0; i < n; ++i) {
    out += ",re(x_" + std::to_string(i) + ")";
    out += ",im(x_" + std::to_string(i) + ")";
  }
  out += '\n';
  for (Index s = 0; s < trajectory.times.size(); ++s) {
    out += format_double(trajectory.times[s]);
    const ComplexVector& x = trajectory.projected[std::size_t(s)];
    for (Index i = 0; i < n; ++i) {
      out += ',';
      out += format_double(x[i].real());
      out += ',';
      out += format_double(x[i].imag());
    }
    out += '\n';
  }
  return out;
}

void write_trajectory_csv(const TrajectoryRecord& trajectory,
                          const std::filesystem::path& path) {
  write_text_file(path, trajectory_to_csv(trajectory));
}

TrajectoryRecord read_trajectory_csv(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) raise(errc::parse_error, "trajectory CSV is empty");
  const std::size_t columns = split(line, ',').size();
  if (columns < 1 || columns % 2 == 0)
    raise(errc::parse_error, "trajectory CSV header must be t,re(x_0),im(x_0),...");
  const Index n = Index((columns - 1) / 2);

  std::vector<double> times;
  std::vector<ComplexVector> projected;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != columns) raise(errc::parse_error, "trajectory CSV row width mismatch");
    times.push_back(parse_double(fields[0], "trajectory time"));
    ComplexVector x(n);
    for (Index i = 0; i < n; ++i)
      x[i] = Complex(parse_double(fields[std::size_t(1 + 2 * i)], "trajectory sample"),
                     parse_double(fields[std::size_t(2 + 2 * i)], "trajectory sample"));
    projected.push_back(std::move(x));
  }
  TrajectoryRecord record;
  record.times = Eigen::Map<const Vector>(times.data(), Index(times.size()));
  record.projected = std::move(projected);
  return record;
}

nlohmann::json trajectory_to_json(const TrajectoryRecord& trajectory) {
  json meta{{"solver", trajectory.meta.solver},
            {"graph_hash", trajectory.meta.graph_hash},
            {"dt", trajectory.meta.dt},
            {"dt_internal", trajectory.meta.dt_internal},
            {"zero_tol", trajectory.meta.zero_tol}};
  return json{{"meta", std::move(meta)},
              {"times", vector_json(trajectory.times)},
              {"projected",
               {{"re", complex_rows_json(trajectory.projected, true)},
                {"im", complex_rows_json(trajectory.projected, false)}}},
              {"states",
               {{"re", complex_rows_json(trajectory.states, true)},
                {"im", complex_rows_json(trajectory.states, false)}}}};
}

void write_trajectory_json(const TrajectoryRecord& trajectory,
                           const std::filesystem::path& path) {
  write_text_file(path, trajectory_to_json(trajectory).dump(2) + "\n");
}

nlohmann::json report_to_json(const PolarizationReport& report) {
  json components = json::array();
  for (const auto& c : report.components) components.push_back(c);

  json details = json::array();
  for (const ComponentReport& comp : report.component_reports) {
    json modes = json::array();
    for (Index k = 0; k < comp.ng_modes.cols(); ++k)
      modes.push_back(vector_json(comp.ng_modes.col(k)));
    details.push_back(json{{"nodes", comp.nodes},
                           {"skipped", comp.skipped},
                           {"bosonic_exists", comp.bosonic_exists},
                           {"frequencies", comp.frequencies},
                           {"ng_alignment", comp.ng_alignment},
                           {"ng_modes", std::move(modes)}});
  }

  json out{{"pre_graph", graph_json(report.pre_graph)},
           {"post_graph", graph_json(report.post_graph)},
           {"components", std::move(components)},
           {"zero_modes", {{"pre", report.zero_modes_pre}, {"post", report.zero_modes_post}}},
           {"sqrt_pattern_pre", report.sqrt_pattern_pre},
           {"frequencies_pre", report.frequencies_pre},
           {"phase", report.phase},
           {"component_reports", std::move(details)}};
  if (report.equilibrium_shift.size() == 2)
    out["equilibrium_shift"] = {{"left", report.equilibrium_shift[0]},
                                {"right", report.equilibrium_shift[1]}};
  else
    out["equilibrium_shift"] = nullptr;
  return out;
}

DoubledState parse_init_spec(const std::string& spec, Index n) {
  const auto parts = split(spec, ':');
  const std::string kind(parts.empty() ? std::string_view{} : parts[0]);

  if (kind == "zero") return DoubledState::Zero(2 * n);
  if (kind == "uniform") {
    DoubledState x = DoubledState::Zero(2 * n);
    for (Index i = 0; i < n; ++i) x[2 * i] = 1.0;
    return x;
  }
  if (kind == "node") {
    if (parts.size() < 2 || parts.size() > 3)
      raise(errc::invalid_params, "init spec: expected node:<i>[:plus|minus]");
    const long node = parse_long(parts[1], "init node");
    if (node < 0 || node >= n)
      raise(errc::index_out_of_range, "init node " + std::to_string(node) + " out of range");
    bool minus = parts.size() == 3 && parts[2] == "minus";
    if (parts.size() == 3 && parts[2] != "plus" && parts[2] != "minus")
      raise(errc::invalid_params, "init spec branch must be plus or minus");
    DoubledState x = DoubledState::Zero(2 * n);
    x[2 * node + (minus ? 1 : 0)] = 1.0;
    return x;
  }
  if (kind == "pair") {
    // equal weight on both branches of one node: zero initial velocity
    if (parts.size() != 2) raise(errc::invalid_params, "init spec: expected pair:<i>");
    const long node = parse_long(parts[1], "init node");
    if (node < 0 || node >= n)
      raise(errc::index_out_of_range, "init node " + std::to_string(node) + " out of range");
    DoubledState x = DoubledState::Zero(2 * n);
    x[2 * node] = 0.5;
    x[2 * node + 1] = 0.5;
    return x;
  }
  if (kind == "basis") {
    if (parts.size() != 2) raise(errc::invalid_params, "init spec: expected basis:<k>");
    const long k = parse_long(parts[1], "init basis index");
    if (k < 0 || k >= 2 * n)
      raise(errc::index_out_of_range, "init basis index " + std::to_string(k) + " out of range");
    DoubledState x = DoubledState::Zero(2 * n);
    x[k] = 1.0;
    return x;
  }
  if (kind == "random") {
    if (parts.size() != 2) raise(errc::invalid_params, "init spec: expected random:<seed>");
    std::mt19937_64 rng(std::uint64_t(parse_long(parts[1], "init seed")));
    DoubledState x(2 * n);
    for (Index i = 0; i < 2 * n; ++i)
      x[i] = Complex(detail::normal(rng), detail::normal(rng));
    return x;
  }
  if (kind == "file") {
    if (parts.size() < 2) raise(errc::invalid_params, "init spec: expected file:<path>");
    // the path may itself contain ':'
    const std::string path = spec.substr(5);
    const json doc = parse_json_text(read_text_file(path), "init file");
    auto read_parts = [&](const json& node, Index len) {
      if (!node.contains("re") || !node.at("re").is_array())
        raise(errc::parse_error, "init file: need arrays 're' (and optional 'im')");
      const auto& re = node.at("re");
      const json im = node.contains("im") ? node.at("im") : json::array();
      if (Index(re.size()) != len || (!im.empty() && im.size() != re.size()))
        raise(errc::parse_error, "init file: vector length mismatch");
      ComplexVector v(len);
      for (Index i = 0; i < len; ++i)
        v[i] = Complex(re.at(std::size_t(i)).get<double>(),
                       im.empty() ? 0.0 : im.at(std::size_t(i)).get<double>());
      return v;
    };
    if (doc.contains("x_plus") && doc.contains("x_minus"))
      return assemble_state(read_parts(doc.at("x_plus"), n), read_parts(doc.at("x_minus"), n));
    return read_parts(doc, 2 * n);
  }
  raise(errc::invalid_params, "unknown init spec '" + spec + "'");
}

ScenarioSpec parse_scenario_config(const std::string& text,
                                   const std::filesystem::path& base_dir) {
  const json doc = parse_json_text(text, "scenario config");
  if (!doc.is_object()) raise(errc::parse_error, "scenario config must be a JSON object");
  ScenarioSpec spec;

  if (!doc.contains("graph")) raise(errc::parse_error, "scenario config needs 'graph'");
  if (doc.at("graph").is_string()) {
    std::filesystem::path p = doc.at("graph").get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    spec.graph = load_graph(p);
  } else {
    spec.graph = graph_from_json(doc.at("graph"));
  }

  spec.options.threshold = doc.value("threshold", 0.5);
  spec.options.clique_weight = doc.value("clique_weight", 1.0);

  if (doc.contains("potential")) {
    const auto& pot = doc.at("potential");
    spec.options.potential = make_potential(pot.value("a", 0.0), pot.value("b", 1.0));
  } else {
    spec.options.potential = make_potential(0.0, 1.0);
  }

  if (doc.contains("times")) {
    const auto& times = doc.at("times");
    spec.options.grid.t0 = times.value("t0", 0.0);
    spec.options.grid.t1 = times.value("t1", 10.0);
    spec.options.grid.samples = times.value("samples", Index{101});
  }

  if (doc.contains("tolerances")) {
    const auto& tol = doc.at("tolerances");
    spec.options.spectral.zero_tol = tol.value("zero_tol", -1.0);
    spec.options.spectral.complex_tol = tol.value("complex_tol", -1.0);
    spec.options.spectral.cond_max = tol.value("cond_max", 1e12);
    spec.options.spectral.reconstruct_tol = tol.value("reconstruct_tol", -1.0);
    spec.options.pattern_tol = tol.value("pattern_tol", -1.0);
  }

  if (doc.contains("spring")) {
    const auto& s = doc.at("spring");
    SpringChain chain = SpringChain::uniform(
        s.value("n", 8), s.value("stiffness", 1.0), s.value("natural_length", 1.0),
        s.value("wall_gap", 8.0));
    if (s.contains("wall_stiffness")) chain.wall_stiffness = s.at("wall_stiffness").get<double>();
    if (s.contains("spring_constants")) {
      const auto values = s.at("spring_constants").get<std::vector<double>>();
      chain.spring_constants = Eigen::Map<const Vector>(values.data(), Index(values.size()));
    }
    if (s.contains("natural_lengths")) {
      const auto values = s.at("natural_lengths").get<std::vector<double>>();
      chain.natural_lengths = Eigen::Map<const Vector>(values.data(), Index(values.size()));
    }
    spec.options.spring = chain;
    if (s.contains("cut_after")) spec.options.spring_cut = s.at("cut_after").get<int>();
  }

  std::string init = doc.value("init", std::string("node:0"));
  if (init.rfind("file:", 0) == 0) {
    std::filesystem::path p = init.substr(5);
    if (p.is_relative()) init = "file:" + (base_dir / p).string();
  }
  spec.x_hat_0 = parse_init_spec(init, spec.graph.node_count());

  spec.output_dir = doc.value("output_dir", std::string());
  return spec;
}

ScenarioSpec load_scenario_config(const std::filesystem::path& path) {
  return parse_scenario_config(read_text_file(path), path.parent_path());
}

}  // namespace oscnet
