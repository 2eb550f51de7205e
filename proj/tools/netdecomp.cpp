// Copyright 2026 The netdecomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: gen, decompose, mis, color, derand, ruling,
// verify, bench, compare. Exit status: 0 ok, 1 failed verification,
// 2 usage or input error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netdecomp/alt_decomp.hpp"
#include "netdecomp/applications.hpp"
#include "netdecomp/decomp_power.hpp"
#include "netdecomp/decomp_strong.hpp"
#include "netdecomp/decomp_weak.hpp"
#include "netdecomp/graph.hpp"
#include "netdecomp/graph_io.hpp"
#include "netdecomp/ruling_set.hpp"
#include "netdecomp/serialize.hpp"
#include "netdecomp/verifier.hpp"

namespace nd = netdecomp;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed " + what + ": " + e.what());
  }
}

nd::Graph load_graph(const std::string& path) {
  std::istringstream in(read_text(path));
  return nd::read_graph(in);
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(1) + "\n"); }

std::size_t parse_size(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s[0] == '-') {
    throw UsageError(std::string("invalid ") + what + ": " + s);
  }
  return static_cast<std::size_t>(v);
}

nd::Rational parse_rational(const std::string& s) {
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      return nd::Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      const std::string frac = s.substr(dot + 1);
      if (frac.size() > 15) throw UsageError("too many decimals in " + s);
      std::int64_t den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      const std::int64_t whole = dot == 0 ? 0 : std::stoll(s.substr(0, dot));
      return nd::Rational(whole * den + (frac.empty() ? 0 : std::stoll(frac)), den);
    }
    return nd::Rational(std::stoll(s));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("invalid rational: " + s);
  }
}

nd::RoundLedger make_ledger(const std::string& mode, std::uint64_t budget, std::size_t n) {
  if (mode == "local") {
    if (budget != 0) throw UsageError("--budget needs --mode congest");
    return nd::RoundLedger::local();
  }
  return budget == 0 ? nd::RoundLedger::congest_for(n) : nd::RoundLedger::congest(budget);
}

nd::Graph generate(const std::string& family, const std::vector<std::string>& params,
                   std::uint64_t seed) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw UsageError("gen " + family + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  try {
    if (family == "path") {
      need(1);
      return nd::gen_path(parse_size(params[0], "n"));
    }
    if (family == "cycle") {
      need(1);
      return nd::gen_cycle(parse_size(params[0], "n"));
    }
    if (family == "complete") {
      need(1);
      return nd::gen_complete(parse_size(params[0], "n"));
    }
    if (family == "torus") {
      need(2);
      return nd::gen_torus(static_cast<int>(parse_size(params[0], "dim")),
                           static_cast<int>(parse_size(params[1], "side")));
    }
    need(2);
    std::size_t pos = 0;
    const double p = std::stod(params[1], &pos);
    if (pos != params[1].size()) throw UsageError("invalid probability: " + params[1]);
    return nd::gen_random(parse_size(params[0], "n"), p, seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

nd::WeakBounds weak_bounds_for(const nd::Graph& g, const nd::WeakDecomposition& dec) {
  const auto params = nd::DecompositionParams::of(g);
  const auto b = static_cast<std::uint64_t>(params.id_bits);
  nd::WeakBounds bounds;
  bounds.k = dec.k;
  if (dec.algorithm == "alt") return bounds;
  const auto k = static_cast<std::uint64_t>(dec.k);
  bounds.radius = b * k * params.steps_per_phase;
  bounds.colors = nd::floor_log2(g.node_count()) + 1;
  bounds.congestion = b * std::min<std::uint64_t>(k, std::max<std::uint64_t>(1, params.growth_step_bound()));
  return bounds;
}

std::uint64_t max_tree_radius(const nd::WeakDecomposition& dec) {
  int r = 0;
  for (const auto& c : dec.clusters) r = std::max(r, c.tree.radius);
  return static_cast<std::uint64_t>(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Network decomposition toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph (JSON)");
  std::string gen_family;
  std::vector<std::string> gen_params;
  std::uint64_t gen_seed = 1;
  std::uint64_t gen_shuffle = 0;
  std::string gen_out = "-";
  gen->add_option("family", gen_family, "path|cycle|complete|torus|random")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "torus", "random"}));
  gen->add_option("params", gen_params, "n | n | n | dim side | n p");
  gen->add_option("--seed", gen_seed, "Seed for random graphs");
  gen->add_option("--shuffle-ids", gen_shuffle, "Seed for an identifier permutation (0 = none)");
  gen->add_option("-o,--output", gen_out, "Output file");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "Compute a network decomposition");
  decompose->require_subcommand(1);
  struct DecomposeOpts {
    std::string in = "-";
    std::string out = "-";
    std::string mode = "local";
    std::uint64_t budget = 0;
  };
  DecomposeOpts dopts;
  int power_k = 1;
  std::uint64_t alt_t = 0;
  std::string alt_eps;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", dopts.in, "Graph file");
    sub->add_option("-o,--output", dopts.out, "Output file");
    sub->add_option("--mode", dopts.mode, "local|congest")->check(CLI::IsMember({"local", "congest"}));
    sub->add_option("--budget", dopts.budget, "CONGEST bits per message (default 32 ceil(log2 n))");
  };
  auto* d_weak = decompose->add_subcommand("weak", "Weak-diameter decomposition");
  auto* d_strong = decompose->add_subcommand("strong", "Strong-diameter decomposition");
  auto* d_power = decompose->add_subcommand("power", "Weak decomposition of G^k");
  auto* d_alt = decompose->add_subcommand("alt", "Rapid ball growing decomposition");
  for (auto* sub : {d_weak, d_strong, d_power, d_alt}) add_common(sub);
  d_power->add_option("--k", power_k, "Power")->required()->check(CLI::PositiveNumber);
  d_alt->add_option("--t", alt_t, "Radius base (default 4b)")->check(CLI::Range(2ULL, 1ULL << 32));
  d_alt->add_option("--eps", alt_eps, "Stopping ratio in (0,1), e.g. 1/4");

  // applications
  std::string app_in = "-";
  std::string app_out = "-";
  std::string lists_path;
  std::string problem = "cut-split";
  auto* c_mis = app.add_subcommand("mis", "Maximal independent set");
  auto* c_color = app.add_subcommand("color", "(Delta+1) or list coloring");
  auto* c_derand = app.add_subcommand("derand", "Conditional-expectation derandomization");
  auto* c_ruling = app.add_subcommand("ruling", "Ruling set of the whole graph");
  auto* c_compare = app.add_subcommand("compare", "Weak vs. ball-growing decomposition");
  for (auto* sub : {c_mis, c_color, c_derand, c_ruling, c_compare}) {
    sub->add_option("-i,--input", app_in, "Graph file");
    sub->add_option("-o,--output", app_out, "Output file");
  }
  c_color->add_option("--lists", lists_path, "JSON lists: {\"lists\": [[...], ...]}");
  c_derand->add_option("--problem", problem, "Problem")->check(CLI::IsMember({"cut-split"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Check an output against its definition");
  std::string kind;
  std::string v_graph;
  std::string v_data = "-";
  std::string v_out = "-";
  verify->add_option("--kind", kind, "weak|strong|mis|coloring|ruling")
      ->required()
      ->check(CLI::IsMember({"weak", "strong", "mis", "coloring", "ruling"}));
  verify->add_option("-g,--graph", v_graph, "Graph file (default: graph embedded in the output)");
  verify->add_option("-d,--data", v_data, "Output to check");
  verify->add_option("-o,--output", v_out, "Report file");
  verify->add_option("--lists", lists_path, "Lists for coloring checks");

  // bench
  auto* bench = app.add_subcommand("bench", "Scaling table (CSV)");
  std::string family;
  std::vector<std::size_t> sizes;
  std::string bench_out = "-";
  bench->add_option("--family", family, "torus|random|path")
      ->required()
      ->check(CLI::IsMember({"torus", "random", "path"}));
  bench->add_option("--sizes", sizes, "n1,n2,...")->required()->delimiter(',');
  bench->add_option("-o,--output", bench_out, "CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      nd::Graph g = generate(gen_family, gen_params, gen_seed);
      if (gen_shuffle != 0) g = nd::shuffle_ids(g, gen_shuffle);
      write_json(gen_out, nd::graph_to_json(g));
      return 0;
    }

    if (*decompose) {
      const nd::Graph g = load_graph(dopts.in);
      nd::RoundLedger ledger = make_ledger(dopts.mode, dopts.budget, g.node_count());
      json out;
      if (*d_weak) {
        out = nd::weak_to_json(nd::weak_decomposition(g, ledger), g.id_bits());
      } else if (*d_power) {
        out = nd::weak_to_json(nd::power_decomposition(g, power_k, ledger), g.id_bits());
      } else if (*d_strong) {
        out = nd::strong_to_json(nd::strong_decomposition(g, ledger));
      } else {
        nd::BallGrowthParams params = nd::BallGrowthParams::defaults_for(g);
        if (alt_t != 0) params.t = alt_t;
        if (!alt_eps.empty()) params.eps = parse_rational(alt_eps);
        try {
          params.validate();
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        const nd::AltDecomposition alt = nd::full_alt_decomposition(g, params, ledger);
        out = nd::weak_to_json(alt.decomposition, g.id_bits());
        out["t"] = params.t;
        out["eps"] = nd::rational_to_string(params.eps);
        out["max_radius"] = alt.max_radius;
      }
      out["graph"] = nd::graph_to_json(g);
      write_json(dopts.out, out);
      return 0;
    }

    if (*c_mis || *c_color || *c_derand || *c_ruling || *c_compare) {
      const nd::Graph g = load_graph(app_in);
      json out;
      if (*c_mis) {
        out = nd::mis_to_json(nd::mis(g));
      } else if (*c_color) {
        if (lists_path.empty()) {
          out = nd::coloring_to_json(nd::delta_plus_one_coloring(g));
        } else {
          const json lj = parse_json(read_text(lists_path), "lists");
          auto lists = (lj.is_object() ? lj.at("lists") : lj).get<std::vector<std::vector<nd::ColorValue>>>();
          try {
            out = nd::coloring_to_json(nd::list_coloring(g, lists));
          } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
          }
        }
      } else if (*c_derand) {
        auto prob = nd::cut_split_problem(g);
        out = nd::derandomize_to_json(nd::derandomize(g, *prob));
        out["problem"] = problem;
      } else if (*c_ruling) {
        std::vector<nd::Node> all(g.node_count());
        for (nd::Node v = 0; v < g.node_count(); ++v) all[v] = v;
        out = nd::ruling_to_json(nd::ruling_set(g, all), all);
      } else {
        out = nd::comparison_to_json(nd::compare_decompositions(g));
      }
      out["graph"] = nd::graph_to_json(g);
      write_json(app_out, out);
      return 0;
    }

    if (*verify) {
      const json data = parse_json(read_text(v_data), "output");
      nd::Graph g;
      if (!v_graph.empty()) {
        g = load_graph(v_graph);
      } else if (data.contains("graph")) {
        g = nd::graph_from_json(data.at("graph"));
      } else {
        throw UsageError("no graph given (-g) and none embedded in the output");
      }
      nd::Report report;
      try {
        if (kind == "weak") {
          const nd::WeakDecomposition dec = nd::weak_from_json(data);
          report = nd::verify_weak(g, dec, weak_bounds_for(g, dec));
        } else if (kind == "strong") {
          const auto colors = nd::color_of_from_json(data);
          report = nd::verify_strong(g, colors, 2 * nd::ceil_log2(g.node_count()),
                                     nd::floor_log2(g.node_count()) + 1);
        } else if (kind == "mis") {
          report = nd::verify_mis(g, data.at("mis").get<std::vector<nd::Node>>());
        } else if (kind == "coloring") {
          const auto color = data.at("color").get<std::vector<std::int64_t>>();
          if (lists_path.empty()) {
            report = nd::verify_coloring(g, color);
          } else {
            const json lj = parse_json(read_text(lists_path), "lists");
            auto lists = (lj.is_object() ? lj.at("lists") : lj).get<std::vector<std::vector<std::int64_t>>>();
            report = nd::verify_coloring(g, color, &lists);
          }
        } else {
          report = nd::verify_ruling(g, data.at("ruling_set").get<std::vector<nd::Node>>(),
                                     data.at("restrict_to").get<std::vector<nd::Node>>(), g.id_bits());
        }
      } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed output: ") + e.what());
      }
      write_json(v_out, report.to_json());
      return report.ok() ? 0 : 1;
    }

    if (*bench) {
      std::ostringstream csv;
      csv << "family,n,m,colors,max_tree_radius,radius_bound,rounds,max_message_bits\n";
      for (std::size_t n : sizes) {
        nd::Graph g;
        if (family == "path") {
          g = nd::gen_path(n);
        } else if (family == "torus") {
          const int side = std::max(3, static_cast<int>(std::lround(std::sqrt(static_cast<double>(n)))));
          g = nd::gen_torus(2, side);
        } else {
          g = nd::gen_random(n, std::min(1.0, 4.0 / static_cast<double>(std::max<std::size_t>(n, 1))), 1);
        }
        const nd::WeakDecomposition dec = nd::weak_decomposition(g);
        const auto params = nd::DecompositionParams::of(g);
        csv << family << ',' << g.node_count() << ',' << g.edge_count() << ',' << dec.colors << ','
            << max_tree_radius(dec) << ','
            << static_cast<std::uint64_t>(params.id_bits) * params.steps_per_phase << ','
            << dec.ledger.rounds << ',' << dec.ledger.max_message_bits << '\n';
      }
      write_text(bench_out, csv.str());
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
