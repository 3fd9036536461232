// Command-line surface: generate | analyze | certify | decompose | distance |
// converge. Exit codes: 0 success, 2 input error, 3 numerical failure,
// 4 refused precondition.

#include <Eigen/Core>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "graphlets/distances.hpp"
#include "graphlets/generators.hpp"
#include "graphlets/graph.hpp"
#include "graphlets/io.hpp"
#include "graphlets/quasirandom.hpp"
#include "graphlets/rank_decomp.hpp"
#include "graphlets/rng.hpp"
#include "graphlets/spectral.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using json = nlohmann::ordered_json;
using namespace graphlets;

struct GlobalOpts {
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out;
};

json metadata(const GlobalOpts& g) {
  return json{{"tool_version", kVersion},
              {"seed", g.seed},
              {"rng_name", rng::kName},
              {"thread_count", g.threads}};
}

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw ParseError("cannot open " + g.out + " for writing");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

void emit_json(const GlobalOpts& g, json j) {
  j["meta"] = metadata(g);
  emit(g, j.dump(2));
}

Eigen::VectorXd load_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::vector<double> vals;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double w;
    while (ls >> w) vals.push_back(w);
  }
  if (vals.empty()) throw ParseError(path + ": no weights");
  return Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<long>(vals.size()));
}

std::vector<int> load_vertex_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::vector<int> out;
  int v;
  while (in >> v) out.push_back(v);
  if (out.empty()) throw ParseError(path + ": no vertex ids");
  return out;
}

std::string graph_to_edge_list_text(const Graph& g, const GlobalOpts& opts) {
  std::ostringstream out;
  out << "# tool_version=" << kVersion << " seed=" << opts.seed << " rng_name=" << rng::kName
      << " thread_count=" << opts.threads << "\n";
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u; v < g.n(); ++v) {
      if (g.weight(u, v) != 0.0) out << u << ' ' << v << ' ' << format_double(g.weight(u, v)) << '\n';
    }
  }
  return out.str();
}

DiscMode make_mode(const std::string& mode, int samples, std::uint64_t seed) {
  DiscMode m;
  m.exact = mode == "exact";
  m.samples = samples;
  m.seed = seed;
  return m;
}

json vec_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json certificate_to_json(const Certificate& c) {
  json j{{"property", qr_property_name(c.property)}, {"epsilon", c.epsilon}, {"exact", c.exact}};
  switch (c.property) {
    case QrProperty::SpectralIv:
    case QrProperty::BipartiteIv:
      j["witness_eigenvalue"] = c.witness_eigenvalue;
      j["witness_vector"] = vec_to_json(c.witness_vector);
      break;
    case QrProperty::DiscrepancyV:
    case QrProperty::BipartiteV:
      j["witness_s"] = c.witness_s;
      j["witness_t"] = c.witness_t;
      if (!c.exact) j["lower_bound"] = true;
      break;
    case QrProperty::TraceVi:
      j["trace_value"] = c.trace_value;
      j["k"] = c.trace_k;
      break;
  }
  return j;
}

int run_generate(const GlobalOpts& opts, const std::string& family, int n, int a, int b, int pairs, int k,
                 const std::string& weights_path, const std::string& weights2_path, const std::string& input) {
  Graph g = [&]() -> Graph {
    if (family == "complete") return complete_graph(n);
    if (family == "complete-bipartite") return complete_bipartite(a, b);
    if (family == "path") return path_graph(n);
    if (family == "cycle") return cycle_graph(n);
    if (family == "matching") return matching_graph(pairs);
    if (family == "chung-lu") return chung_lu(load_weights(weights_path), opts.seed);
    if (family == "bipartite") {
      return bipartite_quasirandom(load_weights(weights_path), load_weights(weights2_path), opts.seed);
    }
    if (family == "union") {
      std::vector<Eigen::VectorXd> lists = {load_weights(weights_path), load_weights(weights2_path)};
      return union_quasirandom(lists, opts.seed).graph;
    }
    if (family == "blowup") return blowup(load_graph(input), k);
    throw InvalidArgument("unknown family " + family);
  }();
  emit(opts, graph_to_edge_list_text(g, opts));
  return 0;
}

int run_analyze(const GlobalOpts& opts, const std::string& input, int samples) {
  const Graph g = load_graph(input);
  json j;
  j["n"] = g.n();
  j["volume"] = g.volume();
  j["connected"] = g.connected();
  j["components"] = g.component_count();
  if (!g.connected()) j["hint"] = "disconnected input: analyze or decompose the components separately";
  j["degree_measure"] = vec_to_json(degree_measure(g).values);
  const SpectralSummary s = spectrum(g);
  const int show = std::min<int>(10, g.n());
  j["rho_top"] = vec_to_json(s.rho.head(show));
  j["rho_bottom"] = vec_to_json(s.rho.tail(show));
  j["certificates"] = json::array();
  j["certificates"].push_back(certificate_to_json(qr_epsilon_spectral(g)));
  j["certificates"].push_back(
      certificate_to_json(qr_epsilon_discrepancy(g, make_mode(g.n() <= 12 ? "exact" : "sampled", samples, opts.seed))));
  j["certificates"].push_back(certificate_to_json(qr_trace_defect(g, 4)));
  emit_json(opts, std::move(j));
  return 0;
}

int run_certify(const GlobalOpts& opts, const std::string& input, const std::string& property,
                const std::string& partition, int k, bool paper_literal, const std::string& mode, int samples) {
  const Graph g = load_graph(input);
  const DiscMode m = make_mode(mode, samples, opts.seed);
  BipartiteOptions bip;
  bip.paper_literal = paper_literal;
  Certificate cert = [&] {
    if (property == "spectral") return qr_epsilon_spectral(g);
    if (property == "disc") return qr_epsilon_discrepancy(g, m);
    if (property == "trace") return qr_trace_defect(g, k);
    if (property == "bip-spectral") return bipartite_epsilon_spectral(g, load_vertex_set(partition), bip);
    if (property == "bip-disc") return bipartite_epsilon_discrepancy(g, load_vertex_set(partition), m, bip);
    throw InvalidArgument("unknown property " + property);
  }();
  emit_json(opts, certificate_to_json(cert));
  return 0;
}

int run_decompose(const GlobalOpts& opts, const std::string& input, double gap_min) {
  const Graph g = load_graph(input);
  auto [split, diag] = rank2_decompose(g, gap_min);
  json j{{"alpha", split.alpha},
         {"d_prime", vec_to_json(split.d_prime)},
         {"d_doubleprime", vec_to_json(split.d_doubleprime)},
         {"rho1", diag.rho1},
         {"eta", diag.eta},
         {"residual", diag.residual},
         {"balance_gap", diag.balance_gap},
         {"frow_gap", diag.frow_gap}};
  emit_json(opts, std::move(j));
  return 0;
}

int run_distance(const GlobalOpts& opts, const std::string& kind, const std::string& file1, const std::string& file2,
                 const std::string& mode, int samples) {
  const Graph g1 = load_graph(file1);
  const Graph g2 = load_graph(file2);
  const DiscMode m = make_mode(mode, samples, opts.seed);
  json j{{"kind", kind}, {"labeling", "degree-sorted"}};
  if (kind == "degree") {
    j["value"] = degree_distribution_distance(g1, g2);
    j["lower_bound"] = false;
  } else if (kind == "spectral") {
    const SpectralDistanceReport r = spectral_distance(g1, g2);
    j["value"] = r.value;
    j["lower_bound"] = false;
    j["shared_mu"] = r.shared_mu;
    j["degree_gap"] = r.degree_gap;
  } else if (kind == "disc" || kind == "cut" || kind == "disc-mu") {
    DiscReport r = [&] {
      if (kind == "disc") return disc_distance(g1, g2, m);
      if (kind == "cut") return cut_distance(g1, g2, m);
      // averaged lifted measure on the common refinement
      const int l = common_refinement_cells(g1.n(), g2.n());
      const StepMeasure mu1 = lift_measure(g1, canonical_labeling(g1)).refined(l);
      const StepMeasure mu2 = lift_measure(g2, canonical_labeling(g2)).refined(l);
      return disc_mu(g1, g2, StepMeasure::equal_cells(0.5 * (mu1.density + mu2.density)), m);
    }();
    j["value"] = r.value;
    j["lower_bound"] = r.lower_bound;
    j["witness_s"] = r.witness_s;
    j["witness_t"] = r.witness_t;
  } else {
    throw InvalidArgument("unknown distance kind " + kind);
  }
  emit_json(opts, std::move(j));
  return 0;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int run_converge(const GlobalOpts& opts, std::vector<int> sizes, std::vector<std::uint64_t> seeds, double mean_degree,
                 double density, int samples) {
  if (sizes.size() < 2) throw NeedTwoSizes("converge needs at least two sizes");
  std::sort(sizes.begin(), sizes.end());
  if (seeds.empty()) seeds = {opts.seed};

  auto make = [&](int n, std::uint64_t seed) {
    const double w = density > 0.0 ? density * n : mean_degree;
    return chung_lu(Eigen::VectorXd::Constant(n, w), seed);
  };

  std::ostringstream csv;
  csv << "# tool_version=" << kVersion << " seed=" << opts.seed << " rng_name=" << rng::kName
      << " thread_count=" << opts.threads << "\n";
  csv << "n1,n2,seed,d_deg,d_disc,eps1,eps2\n";
  std::vector<std::vector<double>> eps_by_size(sizes.size());
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
    for (std::uint64_t seed : seeds) {
      const Graph g1 = make(sizes[i], rng::hash(seed, sizes[i]));
      const Graph g2 = make(sizes[i + 1], rng::hash(seed, sizes[i + 1]));
      const double d_deg = degree_distribution_distance(g1, g2);
      const int l = common_refinement_cells(g1.n(), g2.n());
      const StepMeasure mu1 = lift_measure(g1, canonical_labeling(g1)).refined(l);
      const StepMeasure mu2 = lift_measure(g2, canonical_labeling(g2)).refined(l);
      DiscMode m = make_mode("sampled", samples, seed);
      const double d_disc = disc_mu(g1, g2, StepMeasure::equal_cells(0.5 * (mu1.density + mu2.density)), m).value;
      const double e1 = qr_epsilon_spectral(g1).epsilon;
      const double e2 = qr_epsilon_spectral(g2).epsilon;
      eps_by_size[i].push_back(e1);
      eps_by_size[i + 1].push_back(e2);
      csv << sizes[i] << ',' << sizes[i + 1] << ',' << seed << ',' << format_double(d_deg) << ','
          << format_double(d_disc) << ',' << format_double(e1) << ',' << format_double(e2) << '\n';
    }
  }
  bool monotone = true;
  double prev = 0.0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double med = median(eps_by_size[i]);
    if (i > 0 && med >= prev) monotone = false;
    prev = med;
  }
  csv << "# monotone_median_eps=" << (monotone ? "true" : "false") << "\n";
  emit(opts, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral graph analysis toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  GlobalOpts opts;
  app.add_option("--seed", opts.seed, "random seed")->capture_default_str();
  app.add_option("--threads", opts.threads, "worker threads (recorded in output metadata)")->capture_default_str();
  app.add_option("--out", opts.out, "output file (default stdout)");

  // generate
  auto* gen = app.add_subcommand("generate", "emit a graph as an edge list");
  std::string family, weights_path, weights2_path, gen_input;
  int gen_n = 0, gen_a = 0, gen_b = 0, gen_pairs = 0, gen_k = 1;
  gen->add_option("--family", family)->required();
  gen->add_option("--n", gen_n);
  gen->add_option("--a", gen_a);
  gen->add_option("--b", gen_b);
  gen->add_option("--pairs", gen_pairs);
  gen->add_option("--k", gen_k);
  gen->add_option("--weights", weights_path);
  gen->add_option("--weights2", weights2_path);
  gen->add_option("--input", gen_input);

  // analyze
  auto* ana = app.add_subcommand("analyze", "full single-graph report");
  std::string ana_input;
  int ana_samples = 2000;
  ana->add_option("input", ana_input)->required();
  ana->add_option("--samples", ana_samples);

  // certify
  auto* cert = app.add_subcommand("certify", "quasirandomness certificate");
  std::string cert_input, cert_property, cert_partition, cert_mode = "exact";
  int cert_k = 4, cert_samples = 10000;
  bool paper_literal = false;
  cert->add_option("input", cert_input)->required();
  cert->add_option("--property", cert_property)->required();
  cert->add_option("--partition", cert_partition);
  cert->add_option("--k", cert_k);
  cert->add_option("--mode", cert_mode)->check(CLI::IsMember({"exact", "sampled"}));
  cert->add_option("--samples", cert_samples);
  cert->add_flag("--paper-literal", paper_literal);

  // decompose
  auto* dec = app.add_subcommand("decompose", "rank-2 degree split");
  std::string dec_input;
  double gap_min = 1e-6;
  dec->add_option("input", dec_input)->required();
  dec->add_option("--gap-min", gap_min)->capture_default_str();

  // distance
  auto* dist = app.add_subcommand("distance", "distance between two graphs");
  std::string dist_kind, dist_a, dist_b, dist_mode = "exact";
  int dist_samples = 10000;
  dist->add_option("--kind", dist_kind)->required()->check(
      CLI::IsMember({"degree", "spectral", "disc", "cut", "disc-mu"}));
  dist->add_option("first", dist_a)->required();
  dist->add_option("second", dist_b)->required();
  dist->add_option("--mode", dist_mode)->check(CLI::IsMember({"exact", "sampled"}));
  dist->add_option("--samples", dist_samples);

  // converge
  auto* conv = app.add_subcommand("converge", "sequence convergence experiment (CSV)");
  std::vector<int> sizes;
  std::vector<std::uint64_t> seeds;
  double mean_degree = 16.0, density = 0.0;
  int conv_samples = 200;
  conv->add_option("--sizes", sizes)->required()->delimiter(',');
  conv->add_option("--seeds", seeds)->delimiter(',');
  conv->add_option("--mean-degree", mean_degree)->capture_default_str();
  conv->add_option("--density", density, "edge density p; weights w = p*n (overrides --mean-degree)");
  conv->add_option("--samples", conv_samples);

  try {
    app.parse(argc, argv);
    if (gen->parsed()) {
      return run_generate(opts, family, gen_n, gen_a, gen_b, gen_pairs, gen_k, weights_path, weights2_path, gen_input);
    }
    if (ana->parsed()) return run_analyze(opts, ana_input, ana_samples);
    if (cert->parsed()) {
      return run_certify(opts, cert_input, cert_property, cert_partition, cert_k, paper_literal, cert_mode,
                         cert_samples);
    }
    if (dec->parsed()) return run_decompose(opts, dec_input, gap_min);
    if (dist->parsed()) return run_distance(opts, dist_kind, dist_a, dist_b, dist_mode, dist_samples);
    if (conv->parsed()) return run_converge(opts, sizes, seeds, mean_degree, density, conv_samples);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Input: return 2;
      case ErrorKind::Numerical: return 3;
      case ErrorKind::Refused: return 4;
    }
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
