#include "ramsey/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ramsey/dsl.hpp"
#include "ramsey/fixtures.hpp"
#include "ramsey/json_io.hpp"

namespace ramsey {

namespace {

void write_output(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file '" + out + "'");
  file << text;
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

}  // namespace

TupleFunction resolve_function(const RunConfig& cfg) {
  if (!cfg.fixture.empty() && !cfg.dsl.empty())
    throw ConfigError("give either a fixture or a DSL expression, not both");
  if (!cfg.fixture.empty()) {
    std::optional<Space> sp;
    if (cfg.space) sp = Space::parse_descriptor(*cfg.space);
    return builtin_fixture(cfg.fixture, cfg.arity, sp);
  }
  if (!cfg.dsl.empty()) {
    if (!cfg.arity || !cfg.space)
      throw ConfigError("a DSL function needs --arity and --space");
    return dsl::make_tuple_function(cfg.dsl, *cfg.arity,
                                    Space::parse_descriptor(*cfg.space));
  }
  throw ConfigError("no function given (use --fixture or --dsl)");
}

NatStream resolve_base(const std::string& desc) {
  if (desc.empty() || desc == "nat") return NatStream::naturals();
  if (desc == "evens") return NatStream::arithmetic(0, 2, "evens");
  if (desc == "odds") return NatStream::arithmetic(1, 2, "odds");
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
      if (i == s.size() || s[i] == ':') {
        parts.push_back(s.substr(start, i - start));
        start = i + 1;
      }
    }
    return parts;
  };
  const auto parts = split(desc);
  try {
    if (parts.size() == 2 && parts[0] == "from")
      return NatStream::arithmetic(std::stoull(parts[1]), 1, desc);
    if (parts.size() == 2 && parts[0] == "multiples") {
      const Nat k = std::stoull(parts[1]);
      return NatStream::arithmetic(0, k, desc);
    }
    if (parts.size() == 4 && parts[0] == "multiples" && parts[2] == "above") {
      const Nat k = std::stoull(parts[1]);
      const Nat above = std::stoull(parts[3]);
      const Nat start = (above / k + 1) * k;
      return NatStream::arithmetic(start, k, desc);
    }
  } catch (const std::exception&) {
    throw ConfigError("malformed base stream descriptor '" + desc + "'");
  }
  throw ConfigError("unknown base stream descriptor '" + desc + "'");
}

int cmd_extract(const RunConfig& cfg) {
  try {
    TupleFunction f = resolve_function(cfg);
    NatStream base = resolve_base(cfg.base);
    ExtractOptions opt;
    opt.max_level = cfg.levels;
    opt.prefix_len = cfg.prefix;
    opt.fuel = cfg.fuel;

    Json j;
    if (cfg.engine == "cover") {
      j = certificate_to_json(f.target(), extract_convergent(f, base, opt).cert);
    } else if (cfg.engine == "inductive") {
      j = certificate_to_json(f.target(), inductive_extract(f, base, opt).cert);
    } else if (cfg.engine == "product") {
      ProductExtract res = extract_product(f, base, opt);
      j = product_to_json(f.target(), res.product_cert, res.coordinate_certs);
    } else if (cfg.engine == "nice") {
      j = nice_to_json(f.target(), extract_nice(f, base, opt));
    } else {
      return usage_error("unknown engine '" + cfg.engine + "'");
    }
    write_output(j, cfg.out);
    return kExitOk;
  } catch (const ExtractionInterrupted& e) {
    try {
      TupleFunction f = resolve_function(cfg);
      write_output(certificate_to_json(f.target(), e.partial), cfg.out);
    } catch (const Error& inner) {
      return usage_error(inner.what());
    }
    std::cerr << "fuel exhausted: " << e.what() << "\n";
    return kExitFuel;
  } catch (const FuelExhausted& e) {
    std::cerr << "fuel exhausted: " << e.what() << "\n";
    return kExitFuel;
  } catch (const Error& e) {
    return usage_error(e.what());
  }
}

int cmd_verify(const std::string& cert_path, const RunConfig& fn) {
  Json j;
  try {
    std::ifstream file(cert_path, std::ios::binary);
    if (!file) return usage_error("cannot read certificate '" + cert_path + "'");
    j = Json::parse(file);
  } catch (const Json::exception& e) {
    return usage_error(std::string("malformed certificate JSON: ") + e.what());
  }
  try {
    TupleFunction f = resolve_function(fn);
    const std::string engine = j.value("engine", "cover");
    VerifyReport report;
    if (engine == "product") {
      ConvergenceCertificate cert;
      std::vector<ConvergenceCertificate> coords;
      product_from_json(f.target(), j, cert, coords);
      report = verify_product_certificate(f, cert, coords);
    } else if (engine == "nice") {
      report = verify_nice(f, nice_from_json(f.target(), j));
    } else {
      report = verify_certificate(f, certificate_from_json(f.target(), j));
    }
    write_output(verify_report_to_json(report), "-");
    return report.ok ? kExitOk : kExitVerifyFailed;
  } catch (const Json::exception& e) {
    return usage_error(std::string("malformed certificate JSON: ") + e.what());
  } catch (const Error& e) {
    return usage_error(e.what());
  }
}

int cmd_fin_tree(const std::string& set_text, unsigned b, const std::string& out) {
  try {
    const TupleSet set = tuple_set_from_json(Json::parse(set_text));
    Json j;
    auto tree = has_splitting_tree(set, b);
    j["found"] = tree.has_value();
    j["tree"] = tree ? tree_to_json(*tree) : Json(nullptr);
    write_output(j, out);
    return kExitOk;
  } catch (const Json::exception& e) {
    return usage_error(std::string("malformed tuple set: ") + e.what());
  } catch (const Error& e) {
    return usage_error(e.what());
  }
}

int cmd_fin_small(const RunConfig& cfg, unsigned b) {
  try {
    if (!cfg.arity) throw ConfigError("fin small needs --arity");
    const unsigned n = *cfg.arity;
    NatTupleFunction f;
    if (!cfg.dsl.empty()) {
      f = dsl::make_nat_tuple_function(cfg.dsl, n, n + 1);
    } else if (!cfg.fixture.empty()) {
      if (cfg.fixture.rfind("G(", 0) == 0 && cfg.fixture.back() == ')') {
        const unsigned r = static_cast<unsigned>(
            std::stoul(cfg.fixture.substr(2, cfg.fixture.size() - 3)));
        f = g_function(r);
        if (f.arity != n)
          throw ConfigError("G(" + std::to_string(r) + ") has arity " +
                            std::to_string(f.arity));
      } else {
        throw ConfigError("fin small accepts --dsl or the G(r) fixture");
      }
    } else {
      throw ConfigError("fin small needs --dsl or --fixture");
    }
    ExtractOptions opt;
    opt.max_level = cfg.levels;
    opt.prefix_len = cfg.prefix;
    opt.fuel = cfg.fuel;
    FinSmallResult res = fin_small_extract(f, resolve_base(cfg.base), opt, b);
    Json j;
    j["case"] = res.case_kind;
    if (res.column) j["column"] = *res.column;
    if (res.pinned) {
      j["pinned"] = Json{{"coordinate", res.pinned->first}, {"value", res.pinned->second}};
    }
    j["stream_prefix"] = res.prefix;
    j["image"] = tuple_set_to_json(res.image);
    j["branching"] = res.branching;
    j["tree_free"] = res.tree_free;
    write_output(j, cfg.out);
    return kExitOk;
  } catch (const FuelExhausted& e) {
    std::cerr << "fuel exhausted: " << e.what() << "\n";
    return kExitFuel;
  } catch (const Error& e) {
    return usage_error(e.what());
  }
}

int cmd_fin_avoid(const std::string& a_text, const std::string& b_set_text, Nat cut,
                  const std::string& out) {
  try {
    const TupleSet a = tuple_set_from_json(Json::parse(a_text));
    std::vector<Nat> b_set = Json::parse(b_set_text).get<std::vector<Nat>>();
    for (std::size_t i = 1; i < b_set.size(); ++i)
      if (b_set[i] <= b_set[i - 1])
        throw ConfigError("the ground set must be strictly increasing");
    Json j;
    j["avoided"] = check_avoidance(a, b_set, cut);
    write_output(j, out);
    return kExitOk;
  } catch (const Json::exception& e) {
    return usage_error(std::string("malformed input: ") + e.what());
  } catch (const Error& e) {
    return usage_error(e.what());
  }
}

int cmd_fixtures(const std::string& out) {
  Json arr = Json::array();
  for (const FixtureInfo& fx : list_fixtures()) {
    Json j;
    j["name"] = fx.name;
    j["summary"] = fx.summary;
    j["default_arity"] = fx.default_arity;
    j["flexible_arity"] = fx.flexible_arity;
    j["space"] = fx.space;
    arr.push_back(std::move(j));
  }
  write_output(arr, out);
  return kExitOk;
}

int cmd_corpus(std::uint64_t seed, std::size_t count, unsigned arity,
               std::uint64_t palette, const std::string& out) {
  if (arity == 0 || palette == 0) return usage_error("arity and palette must be positive");
  SplitMix64 rng(seed);
  Json arr = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    Json j;
    j["dsl"] = dsl::random_int_expression(rng, arity, 4);
    j["arity"] = arity;
    j["palette"] = palette;
    arr.push_back(std::move(j));
  }
  write_output(arr, out);
  return kExitOk;
}

namespace {

void apply_config_file(const std::string& path, RunConfig& cfg, const CLI::App* sub) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot read config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(file);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed config JSON: ") + e.what());
  }
  auto unset = [&](const std::string& flag) { return sub->count(flag) == 0; };
  if (j.contains("fixture") && unset("--fixture")) cfg.fixture = j["fixture"].get<std::string>();
  if (j.contains("dsl") && unset("--dsl")) cfg.dsl = j["dsl"].get<std::string>();
  if (j.contains("arity") && unset("--arity")) cfg.arity = j["arity"].get<unsigned>();
  if (j.contains("space") && unset("--space")) cfg.space = j["space"].get<std::string>();
  if (j.contains("base") && unset("--base")) cfg.base = j["base"].get<std::string>();
  if (j.contains("levels") && unset("--levels")) cfg.levels = j["levels"].get<std::uint32_t>();
  if (j.contains("prefix") && unset("--prefix")) cfg.prefix = j["prefix"].get<std::size_t>();
  if (j.contains("seed") && unset("--seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("engine") && unset("--engine")) cfg.engine = j["engine"].get<std::string>();
  if (j.contains("out") && unset("--out")) cfg.out = j["out"].get<std::string>();
  if (j.contains("fuel")) {
    const Json& f = j["fuel"];
    if (f.contains("max_materialize") && unset("--fuel-stream"))
      cfg.fuel.max_materialize = f["max_materialize"].get<std::uint64_t>();
    if (f.contains("max_oracle_calls") && unset("--fuel-oracle"))
      cfg.fuel.max_oracle_calls = f["max_oracle_calls"].get<std::uint64_t>();
  }
}

void add_function_options(CLI::App* sub, RunConfig& cfg, unsigned& arity_opt,
                          std::string& space_opt) {
  sub->add_option("--fixture", cfg.fixture, "builtin fixture name");
  sub->add_option("--dsl", cfg.dsl, "expression over x0..x{r-1}");
  sub->add_option("--arity", arity_opt, "tuple size r");
  sub->add_option("--space", space_opt, "target space descriptor");
}

void finish_function_options(const CLI::App* sub, RunConfig& cfg, unsigned arity_opt,
                             const std::string& space_opt) {
  if (sub->count("--arity")) cfg.arity = arity_opt;
  if (sub->count("--space")) cfg.space = space_opt;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"convergence certificates for functions on r-subsets of the naturals"};
  app.require_subcommand(1);

  RunConfig cfg;
  unsigned arity_opt = 0;
  std::string space_opt;
  std::string config_path;
  std::string cert_path;
  std::string set_text, a_text, b_set_text;
  unsigned branching = 2;
  Nat cut = 0;
  std::uint64_t corpus_seed = 0, corpus_palette = 2;
  std::size_t corpus_count = 10;
  unsigned corpus_arity = 2;

  CLI::App* ext = app.add_subcommand("extract", "extract a convergence certificate");
  add_function_options(ext, cfg, arity_opt, space_opt);
  ext->add_option("--base", cfg.base, "base stream descriptor (default nat)");
  ext->add_option("--levels", cfg.levels, "max certificate level L");
  ext->add_option("--prefix", cfg.prefix, "materialized stream length");
  ext->add_option("--fuel-stream", cfg.fuel.max_materialize, "per-stream element budget");
  ext->add_option("--fuel-oracle", cfg.fuel.max_oracle_calls, "function evaluation budget");
  ext->add_option("--seed", cfg.seed, "seed (recorded; extraction is deterministic)");
  ext->add_option("--engine", cfg.engine, "cover|inductive|product|nice");
  ext->add_option("--out", cfg.out, "output path (default stdout)");
  ext->add_option("--config", config_path, "JSON config file (flags win)");

  CLI::App* ver = app.add_subcommand("verify", "verify a certificate against a function");
  ver->add_option("certificate", cert_path, "certificate JSON path")->required();
  add_function_options(ver, cfg, arity_opt, space_opt);
  ver->add_option("--config", config_path, "JSON config file (flags win)");

  CLI::App* fin = app.add_subcommand("fin", "smallness checks for sets of tuples");
  fin->require_subcommand(1);
  CLI::App* tree = fin->add_subcommand("tree", "search for a splitting tree witness");
  tree->add_option("--set", set_text, "JSON array of integer tuples")->required();
  tree->add_option("--b", branching, "branching parameter");
  tree->add_option("--out", cfg.out, "output path");
  CLI::App* small = fin->add_subcommand("small", "thin a stream until the image is small");
  add_function_options(small, cfg, arity_opt, space_opt);
  small->add_option("--b", branching, "branching parameter");
  small->add_option("--base", cfg.base, "base stream descriptor");
  small->add_option("--levels", cfg.levels, "convergence levels for the case split");
  small->add_option("--prefix", cfg.prefix, "materialized stream length");
  small->add_option("--fuel-stream", cfg.fuel.max_materialize, "per-stream element budget");
  small->add_option("--fuel-oracle", cfg.fuel.max_oracle_calls, "function evaluation budget");
  small->add_option("--out", cfg.out, "output path");
  CLI::App* avoid = fin->add_subcommand("avoid", "check avoidance past a cut");
  avoid->add_option("--a", a_text, "JSON array of integer tuples")->required();
  avoid->add_option("--b-set", b_set_text, "JSON array, strictly increasing")->required();
  avoid->add_option("--cut", cut, "discard values below this");
  avoid->add_option("--out", cfg.out, "output path");

  CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "list builtin fixtures");
  fixtures_cmd->add_option("--out", cfg.out, "output path");

  CLI::App* corpus = app.add_subcommand("corpus", "emit a random DSL coloring corpus");
  corpus->add_option("--seed", corpus_seed, "corpus seed");
  corpus->add_option("--count", corpus_count, "number of colorings");
  corpus->add_option("--arity", corpus_arity, "tuple size r");
  corpus->add_option("--palette", corpus_palette, "number of colors");
  corpus->add_option("--out", cfg.out, "output path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      std::cout << app.help();
      return kExitOk;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    CLI::App* fn_sub = active;
    if (active == fin) fn_sub = fin->get_subcommands().front();
    finish_function_options(fn_sub, cfg, arity_opt, space_opt);
    if (!config_path.empty()) apply_config_file(config_path, cfg, fn_sub);

    if (active == ext) return cmd_extract(cfg);
    if (active == ver) return cmd_verify(cert_path, cfg);
    if (active == fin) {
      CLI::App* sub = fin->get_subcommands().front();
      if (sub == tree) return cmd_fin_tree(set_text, branching, cfg.out);
      if (sub == small) return cmd_fin_small(cfg, branching);
      if (sub == avoid) return cmd_fin_avoid(a_text, b_set_text, cut, cfg.out);
    }
    if (active == fixtures_cmd) return cmd_fixtures(cfg.out);
    if (active == corpus)
      return cmd_corpus(corpus_seed, corpus_count, corpus_arity, corpus_palette, cfg.out);
    return usage_error("no subcommand given");
  } catch (const Error& e) {
    return usage_error(e.what());
  }
}

}  // namespace ramsey
