#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpsdlab/clifford.hpp"
#include "cpsdlab/error.hpp"
#include "cpsdlab/json_io.hpp"

namespace cpsdlab::cli {

struct CommonOptions {
  double tol = 1e-8;
  int cap = kDefaultCliffordCap;
};

struct GenerateParams {
  int n = 0;
  int r = 0;
  int t = 0;
};

struct BoundOptions {
  bool scale_search = false;
  int scale_iters = 50;
  bool graph = false;
  std::optional<Json> verify;  // a factorization to attach as the upper bound
};

struct BehaviorOptions {
  bool simulate = false;
  bool validate = false;
};

enum class Status { Ok, InvalidInput, CapExceeded, VerificationFailed };

struct CommandResult {
  Status status = Status::Ok;
  Json payload = Json::object();
  std::vector<std::string> provenance;
  std::optional<double> max_residual;
  std::string message;

  int exit_code() const;
  Json to_json() const;
};

std::string to_string(Status s);

CommandResult cmd_generate(const std::string& kind, const GenerateParams& params,
                           const CommonOptions& opts = {});
CommandResult cmd_factorize(const Json& input, const CommonOptions& opts = {});
CommandResult cmd_bound(const Json& input, const BoundOptions& bound, const CommonOptions& opts = {});
CommandResult cmd_behavior(const Json& input, const BehaviorOptions& behavior,
                           const CommonOptions& opts = {});
CommandResult cmd_graph(const Json& input, const CommonOptions& opts = {});

}  // namespace cpsdlab::cli
