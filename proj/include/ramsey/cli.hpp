#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/engine.hpp"

namespace ramsey {

// Exit codes: 0 success, 1 usage/parse error, 2 fuel exhausted (partial
// output still written), 3 verification failed.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitFuel = 2,
  kExitVerifyFailed = 3,
};

struct RunConfig {
  std::string fixture;
  std::string dsl;
  std::optional<unsigned> arity;
  std::optional<std::string> space;
  std::string base = "nat";
  std::uint32_t levels = 6;
  std::size_t prefix = 32;
  Fuel fuel{};
  std::uint64_t seed = 0;
  std::string engine = "cover";
  std::string out = "-";
};

TupleFunction resolve_function(const RunConfig& cfg);
NatStream resolve_base(const std::string& desc);

int cmd_extract(const RunConfig& cfg);
int cmd_verify(const std::string& cert_path, const RunConfig& fn);
int cmd_fin_tree(const std::string& set_text, unsigned b, const std::string& out);
int cmd_fin_small(const RunConfig& cfg, unsigned b);
int cmd_fin_avoid(const std::string& a_text, const std::string& b_set_text, Nat cut,
                  const std::string& out);
int cmd_fixtures(const std::string& out);
int cmd_corpus(std::uint64_t seed, std::size_t count, unsigned arity,
               std::uint64_t palette, const std::string& out);

// Full argument parsing; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace ramsey
