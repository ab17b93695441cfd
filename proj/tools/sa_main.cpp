#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sa/checks.hpp"
#include "sa/io.hpp"

namespace {

int emit(const sa::Json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    f << text;
  }
  return 0;
}

int cmd_builtin(const std::vector<std::string>& args,
                const std::string& out_path) {
  if (args.empty()) throw sa::Error("builtin: missing kind");
  const std::string& kind = args[0];
  sa::Semiring r;
  if (kind == "boolean") {
    r = sa::boolean_semifield();
  } else if (kind == "nat-trunc" || kind == "maxplus-trunc") {
    if (args.size() != 2) throw sa::Error("builtin " + kind + ": expected <k>");
    int k = std::stoi(args[1]);
    r = kind == "nat-trunc" ? sa::truncated_naturals(k)
                            : sa::truncated_maxplus(k);
  } else if (kind == "matrix") {
    if (args.size() != 3)
      throw sa::Error("builtin matrix: expected <n> <base-file>");
    int n = std::stoi(args[1]);
    sa::Semiring base = sa::load_semiring(args[2]);
    r = sa::matrix_semiring(base, n).ring;
  } else if (kind == "monoid-semiring") {
    if (args.size() != 3)
      throw sa::Error("builtin monoid-semiring: expected <base-file> <monoid-file>");
    sa::Semiring base = sa::load_semiring(args[1]);
    sa::FiniteMonoid monoid = sa::load_monoid(args[2]);
    r = sa::monoid_semiring(base, monoid).ring;
  } else {
    throw sa::Error("builtin: unknown kind " + kind);
  }
  return emit(sa::semiring_to_json(r), out_path);
}

int cmd_verify(const std::string& path) {
  sa::Structure s = sa::load_structure(path);
  struct Visitor {
    std::string operator()(const sa::Semiring& r) {
      return "semiring \"" + r.name() + "\", size " + std::to_string(r.size()) +
             (r.verify_mode() == sa::VerifyMode::exhaustive
                  ? ", axioms verified exhaustively"
                  : ", axioms verified by sampling");
    }
    std::string operator()(const sa::Module& v) {
      return "module of size " + std::to_string(v.size()) + " over \"" +
             v.ring().name() + "\", axioms verified";
    }
    std::string operator()(const sa::FiniteMonoid& m) {
      return "monoid of size " + std::to_string(m.size()) + ", laws verified";
    }
  };
  std::cout << "ok: " << std::visit(Visitor{}, s) << "\n";
  return 0;
}

int cmd_halo(const std::string& path, const std::string& set_csv,
             bool witnesses, const std::string& out_path) {
  sa::Module v = sa::load_module(path);
  sa::Bitset s = sa::parse_index_set(set_csv, v.size());
  return emit(sa::halo_to_json(sa::halo(v, s), witnesses), out_path);
}

int cmd_spine_check(const std::string& path, const std::string& set_csv,
                    const std::string& out_path) {
  sa::Module v = sa::load_module(path);
  sa::Bitset s = sa::parse_index_set(set_csv, v.size());
  sa::SpineCheck sc = sa::check_additive_spine(v, s);
  sa::Json j;
  j["ok"] = sc.ok;
  j["uncovered"] = sc.ok ? sa::Json(nullptr) : sa::Json(sc.uncovered);
  j["halo_members"] = sc.halo_members.indices();
  int rc = emit(j, out_path);
  return rc ? rc : (sc.ok ? 0 : 1);
}

int cmd_monoid_spine_check(const std::string& path, const std::string& set_csv,
                           const std::string& out_path) {
  sa::FiniteMonoid m = sa::load_monoid(path);
  sa::Bitset t = sa::parse_index_set(set_csv, m.size());
  sa::MonoidSpineCheck sc = sa::check_monoid_spine(m, t);
  sa::Json j;
  j["ok"] = sc.ok;
  j["unwitnessed"] = sc.ok ? sa::Json(nullptr) : sa::Json(sc.unwitnessed);
  int rc = emit(j, out_path);
  return rc ? rc : (sc.ok ? 0 : 1);
}

int cmd_lattice(const std::string& path, const std::string& spine_csv,
                bool sigma, const std::string& format,
                const std::string& out_path) {
  sa::Module v = sa::load_module(path);
  sa::SALattice l =
      spine_csv.empty()
          ? sa::enumerate_sa_bruteforce(v)
          : sa::enumerate_sa(v, sa::parse_index_set(spine_csv, v.size()));
  if (sigma) l = sa::enumerate_sigma_sa(v, l);
  if (format == "dot") {
    std::string text = sa::lattice_to_dot(l);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path);
      if (!f) return 2;
      f << text;
    }
    return 0;
  }
  return emit(sa::lattice_to_json(l), out_path);
}

int cmd_between(const std::string& path, const std::string& v0_csv,
                const std::string& w0_csv, const std::string& gens_csv,
                const std::string& m_csv, const std::string& out_path) {
  sa::Module v = sa::load_module(path);
  sa::Bitset v0 = sa::parse_index_set(v0_csv, v.size());
  sa::Bitset w0 = sa::parse_index_set(w0_csv, v.size());
  sa::Bitset s = sa::parse_index_set(gens_csv, v.size());
  sa::Bitset m = m_csv.empty() ? sa::Bitset::full(v.ring().size())
                               : sa::parse_index_set(m_csv, v.ring().size());
  sa::BetweenResult b = sa::sa_between(v, v0, w0, s, m);
  sa::Json j;
  sa::Json members = sa::Json::array();
  for (const sa::Bitset& w : b.members) members.push_back(w.indices());
  j["members"] = std::move(members);
  j["chain_length"] = b.chain.length;
  j["chain"] = b.chain.chain;
  j["m"] = b.m;
  j["s"] = b.s;
  return emit(j, out_path);
}

int cmd_check(const std::string& module_path, const std::string& config_path,
              const std::vector<std::string>& theorems,
              const std::string& out_path) {
  sa::SuiteOptions opts;
  opts.theorems = theorems;
  for (const std::string& t : theorems)
    if (!sa::known_theorem(t)) throw sa::Error("unknown theorem id: " + t);
  std::vector<sa::ZooInstance> instances;
  if (module_path.empty()) {
    instances = sa::zoo();
  } else {
    sa::Module v = sa::load_module(module_path);
    sa::Bitset spine = sa::Bitset::full(v.size());
    spine.reset(v.zero());
    sa::Bitset gens = spine;
    sa::Bitset ring_spine = sa::Bitset::full(v.ring().size());
    std::string name = module_path;
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw sa::Error("cannot read " + config_path);
      sa::Json c = sa::Json::parse(f);
      if (c.contains("name")) name = c.at("name").get<std::string>();
      if (c.contains("spine"))
        spine = sa::Bitset::of(v.size(), c.at("spine").get<std::vector<int>>());
      if (c.contains("generators"))
        gens = sa::Bitset::of(v.size(),
                              c.at("generators").get<std::vector<int>>());
      if (c.contains("ring_spine"))
        ring_spine = sa::Bitset::of(
            v.ring().size(), c.at("ring_spine").get<std::vector<int>>());
    }
    sa::SemiringPtr ring = v.ring_ptr();
    instances.push_back(sa::make_zoo_instance(name, std::move(ring),
                                              std::move(v), std::move(spine),
                                              std::move(gens),
                                              std::move(ring_spine)));
  }
  sa::RunReport report = sa::run_checks(instances, opts);
  int rc = emit(sa::report_to_json(report, opts), out_path);
  return rc ? rc : report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"summand-absorbing submodule toolkit"};
  app.require_subcommand(1);

  std::vector<std::string> builtin_args;
  std::string out_path, file_path, set_csv, spine_csv, format = "json";
  std::string v0_csv, w0_csv, gens_csv, m_csv, config_path, module_path;
  std::vector<std::string> theorems;
  bool witnesses = false, sigma = false;

  auto* builtin = app.add_subcommand("builtin", "emit a builtin semiring as JSON");
  builtin->add_option("args", builtin_args,
                      "boolean | nat-trunc <k> | maxplus-trunc <k> | "
                      "matrix <n> <base-file> | monoid-semiring <base-file> <monoid-file>")
      ->expected(-1);
  builtin->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "load and validate a structure file");
  verify->add_option("file", file_path)->required();

  auto* halo_cmd = app.add_subcommand("halo", "halo of a subset in a module");
  halo_cmd->add_option("file", file_path)->required();
  halo_cmd->add_option("--set", set_csv, "comma-separated element indices")->required();
  halo_cmd->add_flag("--witnesses", witnesses, "include scalar witnesses");
  halo_cmd->add_option("--out", out_path);

  auto* spine = app.add_subcommand("spine-check", "is the set an additive spine?");
  spine->add_option("file", file_path)->required();
  spine->add_option("--set", set_csv)->required();
  spine->add_option("--out", out_path);

  auto* mspine = app.add_subcommand("monoid-spine-check",
                                    "is the set a monoid spine?");
  mspine->add_option("file", file_path)->required();
  mspine->add_option("--set", set_csv)->required();
  mspine->add_option("--out", out_path);

  auto* lattice = app.add_subcommand("lattice", "enumerate the SA-submodule poset");
  lattice->add_option("file", file_path)->required();
  lattice->add_option("--spine", spine_csv,
                      "spine to enumerate from (omit for brute force)");
  lattice->add_flag("--sigma", sigma, "close under submodule sums");
  lattice->add_option("--out-format", format, "dot | json")
      ->check(CLI::IsMember({"dot", "json"}));
  lattice->add_option("--out", out_path);

  auto* between = app.add_subcommand("between",
                                     "SA-submodules W with W ∩ V0 = W0");
  between->add_option("file", file_path)->required();
  between->add_option("--v0", v0_csv)->required();
  between->add_option("--w0", w0_csv)->required();
  between->add_option("--gens", gens_csv)->required();
  between->add_option("--ring-spine", m_csv, "spine of R (default: all of R)");
  between->add_option("--out", out_path);

  auto* check = app.add_subcommand("check", "run the theorem suite");
  check->add_option("file", module_path, "module to check (default: builtin zoo)");
  check->add_option("--config", config_path,
                    "JSON with name/spine/generators/ring_spine");
  check->add_option("--theorems", theorems, "filter, e.g. 2.9 thm-3.3")
      ->delimiter(',');
  check->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (builtin->parsed()) return cmd_builtin(builtin_args, out_path);
    if (verify->parsed()) return cmd_verify(file_path);
    if (halo_cmd->parsed()) return cmd_halo(file_path, set_csv, witnesses, out_path);
    if (spine->parsed()) return cmd_spine_check(file_path, set_csv, out_path);
    if (mspine->parsed())
      return cmd_monoid_spine_check(file_path, set_csv, out_path);
    if (lattice->parsed())
      return cmd_lattice(file_path, spine_csv, sigma, format, out_path);
    if (between->parsed())
      return cmd_between(file_path, v0_csv, w0_csv, gens_csv, m_csv, out_path);
    if (check->parsed())
      return cmd_check(module_path, config_path, theorems, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
