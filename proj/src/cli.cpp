#include "dfk/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "dfk/deletion_kernel.hpp"
#include "dfk/diamond.hpp"
#include "dfk/generator.hpp"
#include "dfk/io.hpp"
#include "dfk/oracle.hpp"

namespace dfk {

namespace {

namespace fs = std::filesystem;

Mode parse_mode(const std::string& s) {
  auto m = mode_from_string(s);
  if (!m) throw CLI::ValidationError("--mode", "want `editing` or `deletion`");
  return *m;
}

Instance load_instance(const std::string& path, std::optional<int> k_flag,
                       Mode mode) {
  auto parsed = parse_instance_file(path);
  std::optional<int> k = k_flag ? k_flag : parsed.k;
  if (!k)
    throw std::runtime_error(
        "no budget: pass --k or put a `c k <k>` line in the file");
  if (*k < 0) throw std::runtime_error("budget must be nonnegative");
  return Instance{std::move(parsed.graph), *k, mode};
}

std::string kernel_stats_text(const std::string& name,
                              const KernelResult& result) {
  const KernelStats& s = result.stats;
  std::ostringstream os;
  if (!name.empty()) os << name << ": ";
  os << "n " << s.n_before << " -> " << s.n_after << ", m " << s.m_before
     << " -> " << s.m_after << ", k " << s.k_before << " -> " << s.k_after
     << ", answer " << s.answer << "\n";
  auto parts = [](const std::array<int, 5>& p) {
    std::ostringstream ps;
    ps << "i=" << p[0] << " ii=" << p[1] << " iii=" << p[2] << " iv=" << p[3]
       << " v=" << p[4];
    return ps.str();
  };
  os << "  parts before: " << parts(s.parts_before) << "\n";
  os << "  parts after:  " << parts(s.parts_after) << "\n";
  os << "  rules:";
  if (s.applications.empty()) os << " none";
  for (const auto& [rule, count] : s.applications)
    os << " " << to_string(rule) << "=" << count;
  os << "\n";
  return os.str();
}

KernelResult kernelize_instance(Instance inst) {
  return inst.mode == Mode::editing ? kernelize_editing(std::move(inst))
                                    : kernelize_deletion(std::move(inst));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

struct KernelizeArgs {
  std::string input;
  std::string out_path, trace_path, out_dir;
  std::optional<int> k;
  Mode mode = Mode::editing;
  int jobs = 1;
};

int run_kernelize_one(const KernelizeArgs& a, std::ostream& out) {
  Instance inst = load_instance(a.input, a.k, a.mode);
  auto result = kernelize_instance(std::move(inst));
  if (!a.out_path.empty())
    write_file(a.out_path,
               instance_to_string(result.instance.graph, result.instance.k));
  if (!a.trace_path.empty()) {
    std::ostringstream os;
    write_trace(os, result.trace);
    write_file(a.trace_path, os.str());
  }
  out << kernel_stats_text("", result);
  return 0;
}

int run_kernelize_batch(const KernelizeArgs& a, std::ostream& out) {
  if (a.out_dir.empty())
    throw std::runtime_error("batch mode needs --out-dir");
  fs::create_directories(a.out_dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.input))
    if (entry.is_regular_file() && entry.path().extension() == ".gr")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<std::string> stats(files.size());
  std::vector<std::string> errors(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= files.size()) return;
      try {
        Instance inst = load_instance(files[i].string(), a.k, a.mode);
        auto result = kernelize_instance(std::move(inst));
        auto stem = files[i].stem().string();
        write_file((fs::path(a.out_dir) / (stem + ".kernel.gr")).string(),
                   instance_to_string(result.instance.graph,
                                      result.instance.k));
        std::ostringstream os;
        write_trace(os, result.trace);
        write_file((fs::path(a.out_dir) / (stem + ".trace")).string(),
                   os.str());
        stats[i] = kernel_stats_text(files[i].filename().string(), result);
      } catch (const std::exception& ex) {
        errors[i] = files[i].filename().string() + ": " + ex.what();
      }
    }
  };
  const int jobs = std::max(1, a.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  bool failed = false;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!errors[i].empty()) {
      out << "error: " << errors[i] << "\n";
      failed = true;
    } else {
      out << stats[i];
    }
  }
  return failed ? 2 : 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"diamond-free edge editing and deletion: kernels, exact "
               "search, instance tools"};
  app.require_subcommand(1);

  std::string input, out_path, trace_path, out_dir, edits_path, mode_str;
  std::string kind_str = "gnp";
  std::optional<int> k_flag;
  int jobs = 1, n = 10, r = 0, clique_min = 2, clique_max = 4;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::size_t diamond_cap = 1000000;

  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode_str, "editing or deletion")
        ->default_val("editing");
  };
  auto add_k = [&](CLI::App* cmd) {
    cmd->add_option("--k", k_flag,
                    "edit budget; falls back to a `c k` comment line");
  };

  auto* kernelize = app.add_subcommand(
      "kernelize", "reduce an instance (or a directory of .gr files)");
  kernelize->add_option("input", input, "instance file or directory")
      ->required();
  add_mode(kernelize);
  add_k(kernelize);
  kernelize->add_option("--out", out_path, "kernel instance file");
  kernelize->add_option("--trace", trace_path, "rule application trace file");
  kernelize->add_option("--out-dir", out_dir, "output directory (batch mode)");
  kernelize->add_option("--jobs", jobs, "worker threads in batch mode")
      ->default_val(1);

  auto* solve_cmd =
      app.add_subcommand("solve", "exact decision, prints `yes opt=<s>` or `no`");
  solve_cmd->add_option("input", input, "instance file")->required();
  add_mode(solve_cmd);
  add_k(solve_cmd);

  auto* verify_cmd = app.add_subcommand(
      "verify", "check an edit set against an instance and budget");
  verify_cmd->add_option("input", input, "instance file")->required();
  verify_cmd->add_option("--edits", edits_path, "edit-set file")->required();
  add_mode(verify_cmd);
  add_k(verify_cmd);

  auto* partition_cmd = app.add_subcommand(
      "partition", "print the five-part vertex classification");
  partition_cmd->add_option("input", input, "instance file")->required();
  add_mode(partition_cmd);
  add_k(partition_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "write a generated instance");
  gen_cmd->add_option("--kind", kind_str, "gnp, planted or figure3")
      ->required();
  gen_cmd->add_option("--n", n, "vertex count");
  gen_cmd->add_option("--p", p, "gnp edge probability");
  gen_cmd->add_option("--r", r, "planted edit count");
  gen_cmd->add_option("--k", k_flag, "budget for gnp instances");
  gen_cmd->add_option("--clique-min", clique_min, "planted clique size lower bound");
  gen_cmd->add_option("--clique-max", clique_max, "planted clique size upper bound");
  gen_cmd->add_option("--seed", seed, "generator seed");
  add_mode(gen_cmd);
  gen_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* stats_cmd = app.add_subcommand(
      "stats", "size, diamond count and clique classification");
  stats_cmd->add_option("input", input, "instance file")->required();
  add_k(stats_cmd);
  stats_cmd->add_option("--diamond-cap", diamond_cap, "stop counting here")
      ->default_val(1000000);

  std::reverse(args.begin(), args.end());  // CLI11 wants reversed argv
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Mode mode = mode_str.empty() ? Mode::editing : parse_mode(mode_str);
    if (kernelize->parsed()) {
      KernelizeArgs a{input, out_path, trace_path, out_dir,
                      k_flag, mode,     jobs};
      return fs::is_directory(input) ? run_kernelize_batch(a, out)
                                     : run_kernelize_one(a, out);
    }
    if (solve_cmd->parsed()) {
      auto result = solve(load_instance(input, k_flag, mode));
      if (result.feasible) {
        out << "yes opt=" << *result.opt_size << "\n";
        return 0;
      }
      out << "no\n";
      return 1;
    }
    if (verify_cmd->parsed()) {
      Instance inst = load_instance(input, k_flag, mode);
      std::ifstream ein(edits_path);
      if (!ein) throw std::runtime_error("cannot open " + edits_path);
      EditSet edits = parse_edit_set(ein, inst.graph);
      std::string reason;
      if (inst.mode == Mode::deletion && !edits.additions.empty())
        reason = "additions are not allowed in deletion mode";
      else if (edits.size() > static_cast<std::size_t>(inst.k))
        reason = "edit set exceeds the budget";
      else if (!is_diamond_free(apply_edits(inst.graph, edits)))
        reason = "edited graph still contains a diamond";
      if (reason.empty()) {
        out << "valid\n";
        return 0;
      }
      out << "invalid: " << reason << "\n";
      return 1;
    }
    if (partition_cmd->parsed()) {
      Instance inst = load_instance(input, k_flag, mode);
      if (!is_reduced(inst))
        throw std::runtime_error(
            "instance is not reduced; apply the sunflower rules first "
            "(kernelize does)");
      auto labels = compute_partition(inst);
      std::array<std::vector<Vertex>, 5> parts;
      for (Vertex v : labels.vertices)
        parts[static_cast<int>(part_of(labels, v))].push_back(v);
      for (int i = 0; i < 5; ++i) {
        out << "part " << to_string(static_cast<Part>(i)) << ":";
        for (Vertex v : parts[i]) out << " " << v;
        out << "\n";
      }
      return 0;
    }
    if (gen_cmd->parsed()) {
      GenSpec spec;
      if (kind_str == "gnp")
        spec.kind = GenKind::gnp;
      else if (kind_str == "planted")
        spec.kind = GenKind::planted;
      else if (kind_str == "figure3")
        spec.kind = GenKind::figure3;
      else
        throw std::runtime_error("unknown generator kind " + kind_str);
      spec.n = n;
      spec.p = p;
      spec.r = r;
      spec.k = k_flag.value_or(0);
      spec.clique_min = clique_min;
      spec.clique_max = clique_max;
      spec.seed = seed;
      spec.mode = mode;
      Instance inst = generate(spec);
      if (out_path.empty()) {
        write_instance(out, inst.graph, inst.k);
      } else {
        write_file(out_path, instance_to_string(inst.graph, inst.k));
      }
      return 0;
    }
    if (stats_cmd->parsed()) {
      auto parsed = parse_instance_file(input);
      const Graph& g = parsed.graph;
      out << "n " << g.vertex_count() << "\n";
      out << "m " << g.edge_count() << "\n";
      auto diamonds = count_diamonds(g, diamond_cap);
      out << "diamonds " << diamonds
          << (diamonds >= diamond_cap ? " (capped)" : "") << "\n";
      std::optional<int> k = k_flag ? k_flag : parsed.k;
      if (g.vertex_count() > 25) {
        out << "cliques: skipped (graph above oracle scale)\n";
      } else if (!k) {
        out << "cliques: skipped (no budget for the big/small split)\n";
      } else {
        auto cls = classify_cliques(g, *k);
        out << "cliques big-type-I " << cls.big_type1.size()
            << ", small-type-I " << cls.small_type1.size() << ", type-II "
            << cls.type2.size() << "\n";
        out << "vulnerable " << vulnerable_set_bruteforce(g, *k).size()
            << "\n";
      }
      return 0;
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace dfk
