#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "grassmann/element.hpp"

namespace grassmann {

enum class Status {
  Holds,           // verified for every case up to the bound
  Counterexample,  // a concrete failure was found
  NotFalsified,    // search finished without finding a failure
  Rejected,        // the check does not apply (e.g. not an endomorphism)
};

std::string to_string(Status s);

struct Counterexample {
  std::vector<Index> indices{};
  Element residual{};
  std::optional<Element> actual{};
  std::optional<Element> expected{};
  // Variable substitutions for identity checks, in variable order.
  std::vector<std::pair<std::string, Element>> assignment{};
};

struct Verdict {
  std::string check;
  Status status = Status::Holds;
  std::uint64_t bound = 0;
  std::optional<Counterexample> counterexample;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::string note;

  bool holds() const { return status == Status::Holds; }
  bool failed() const {
    return status == Status::Counterexample || status == Status::Rejected;
  }
};

Verdict holds(std::string check, std::uint64_t bound);
Verdict counterexample(std::string check, std::uint64_t bound, Counterexample cex);

// {check, bound, status, counterexample?}; elements are rendered as text.
nlohmann::json to_json(const Verdict& v);
std::string to_string(const Verdict& v);

}  // namespace grassmann
