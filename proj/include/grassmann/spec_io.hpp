#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "grassmann/automorphism.hpp"

namespace grassmann {

// Malformed or unreadable spec input. Validation failures of the
// constructions themselves surface as ConstructionError instead.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepted documents:
//   {"kind":"homogeneous","variant":"k"|"kstar"|"infty"|"canonical"|"trivial","k":2}
//   {"kind":"methodA","Iplus":SET,"Iminus":SET,"d":{"1":"e2e3e4"}}
//   {"kind":"methodB","k":0,"t":1,"lambda":"2","lambdas":{"5":"3"}}
//   {"kind":"methodC"}
//   {"kind":"custom","images":{"1":"-e1+e2e3e4"},"defaultSign":1}
// where SET is a finite list [2,5], {"from":n} for {n,n+1,...}, or
// {"complement":[...]} for a cofinite set.
AutomorphismSpec spec_from_json(const nlohmann::json& doc);

// Parses JSON text; syntax errors report line and column.
AutomorphismSpec parse_spec(std::string_view text);

AutomorphismSpec load_spec_file(const std::filesystem::path& path);

}  // namespace grassmann
