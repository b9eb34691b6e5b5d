#include "grassmann/verdict.hpp"

#include <sstream>

namespace grassmann {

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Counterexample: return "Counterexample";
    case Status::NotFalsified: return "NotFalsified";
    case Status::Rejected: return "Rejected";
  }
  return "?";
}

Verdict holds(std::string check, std::uint64_t bound) {
  Verdict v;
  v.check = std::move(check);
  v.status = Status::Holds;
  v.bound = bound;
  return v;
}

Verdict counterexample(std::string check, std::uint64_t bound, Counterexample cex) {
  Verdict v;
  v.check = std::move(check);
  v.status = Status::Counterexample;
  v.bound = bound;
  v.counterexample = std::move(cex);
  return v;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["check"] = v.check;
  j["bound"] = v.bound;
  j["status"] = to_string(v.status);
  if (v.trials) j["trials"] = *v.trials;
  if (v.seed) j["seed"] = *v.seed;
  if (!v.note.empty()) j["note"] = v.note;
  if (v.counterexample) {
    const auto& c = *v.counterexample;
    nlohmann::json cj;
    cj["indices"] = c.indices;
    cj["residual"] = to_string(c.residual);
    if (c.actual) cj["actual"] = to_string(*c.actual);
    if (c.expected) cj["expected"] = to_string(*c.expected);
    if (!c.assignment.empty()) {
      nlohmann::json a = nlohmann::json::object();
      for (const auto& [name, value] : c.assignment) a[name] = to_string(value);
      cj["assignment"] = std::move(a);
    }
    j["counterexample"] = std::move(cj);
  }
  return j;
}

std::string to_string(const Verdict& v) {
  std::ostringstream out;
  out << v.check << ": " << to_string(v.status) << " (bound " << v.bound;
  if (v.trials) out << ", trials " << *v.trials;
  if (v.seed) out << ", seed " << *v.seed;
  out << ")";
  if (v.counterexample) {
    const auto& c = *v.counterexample;
    if (!c.indices.empty()) {
      out << " at (";
      for (std::size_t k = 0; k < c.indices.size(); ++k) {
        out << (k ? ", " : "") << c.indices[k];
      }
      out << ")";
    }
    for (const auto& [name, value] : c.assignment) {
      out << "\n  " << name << " = " << to_string(value);
    }
    if (c.actual && c.expected) {
      out << "\n  got " << to_string(*c.actual) << ", expected " << to_string(*c.expected);
    }
    out << "\n  residual " << to_string(c.residual);
  }
  if (!v.note.empty()) out << "\n  " << v.note;
  return out.str();
}

}  // namespace grassmann
