#include "grassmann/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "grassmann/construction.hpp"

namespace grassmann {

namespace {

using nlohmann::json;

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw SpecError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint32_t unsigned_field(const json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 0xFFFFFFFFLL) {
    throw SpecError(what + " must be a nonnegative integer");
  }
  return static_cast<std::uint32_t>(v.get<long long>());
}

Index index_key(const std::string& key) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(key, &used);
    if (used != key.size() || v == 0 || v > 0xFFFFFFFFULL) throw std::invalid_argument(key);
    return static_cast<Index>(v);
  } catch (const std::exception&) {
    throw SpecError("\"" + key + "\" is not a generator index");
  }
}

Scalar scalar_field(const json& v, const std::string& what) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_scalar(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SpecError(what + ": " + e.what());
    }
  }
  throw SpecError(what + " must be an integer or a rational string");
}

Element element_field(const json& v, const std::string& what) {
  if (!v.is_string()) throw SpecError(what + " must be an element string");
  try {
    return parse_element(v.get<std::string>());
  } catch (const ParseError& e) {
    throw SpecError(what + ": " + e.what());
  }
}

int sign_field(const json& v, const std::string& what) {
  if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1)) {
    throw SpecError(what + " must be 1 or -1");
  }
  return v.get<int>();
}

std::set<Index> index_list(const json& v, const std::string& what) {
  if (!v.is_array()) throw SpecError(what + " must be an array of indices");
  std::set<Index> out;
  for (const json& x : v) {
    Index i = unsigned_field(x, what);
    if (i == 0) throw SpecError(what + ": generator indices start at 1");
    out.insert(i);
  }
  return out;
}

IndexSet index_set(const json& v, const std::string& what) {
  if (v.is_array()) return IndexSet::finite(index_list(v, what));
  if (v.is_object()) {
    if (v.contains("from")) {
      Index n = unsigned_field(v.at("from"), what + ".from");
      if (n == 0) throw SpecError(what + ".from must be >= 1");
      IndexSet s = IndexSet::from(n);
      if (v.contains("except")) {
        std::set<Index> excluded = s.listed();
        for (Index i : index_list(v.at("except"), what + ".except")) excluded.insert(i);
        s = IndexSet::cofinite(std::move(excluded));
      }
      return s;
    }
    if (v.contains("complement")) return IndexSet::cofinite(index_list(v.at("complement"), what + ".complement"));
  }
  throw SpecError(what + " must be a list, {\"from\":n} or {\"complement\":[...]}");
}

AutomorphismSpec homogeneous_from(const json& doc) {
  using V = HomogeneousKind::Variant;
  const json& variant = field(doc, "variant");
  if (!variant.is_string()) throw SpecError("variant must be a string");
  const std::string name = variant.get<std::string>();
  HomogeneousKind kind;
  if (name == "k" || name == "kstar") {
    kind.variant = name == "k" ? V::K : V::KStar;
    kind.k = unsigned_field(field(doc, "k"), "k");
  } else if (name == "infty") {
    kind.variant = V::Infty;
  } else if (name == "canonical") {
    kind.variant = V::Canonical;
  } else if (name == "trivial") {
    kind.variant = V::Trivial;
  } else {
    throw SpecError("unknown homogeneous variant \"" + name + "\"");
  }
  return homogeneous(kind);
}

AutomorphismSpec method_a_from(const json& doc) {
  MethodAData data;
  data.plus = doc.contains("Iplus") ? index_set(doc.at("Iplus"), "Iplus") : IndexSet();
  data.minus = doc.contains("Iminus") ? index_set(doc.at("Iminus"), "Iminus") : IndexSet();
  const json& d = field(doc, "d");
  if (!d.is_object()) throw SpecError("d must be an object mapping indices to elements");
  for (const auto& [key, value] : d.items()) {
    data.d[index_key(key)] = element_field(value, "d." + key);
  }
  return method_a(data);
}

AutomorphismSpec method_b_from(const json& doc) {
  MethodBData data;
  data.k = unsigned_field(field(doc, "k"), "k");
  data.t = unsigned_field(field(doc, "t"), "t");
  if (doc.contains("lambda")) data.lambda = scalar_field(doc.at("lambda"), "lambda");
  if (doc.contains("lambdas")) {
    const json& overrides = doc.at("lambdas");
    if (!overrides.is_object()) throw SpecError("lambdas must be an object");
    for (const auto& [key, value] : overrides.items()) {
      data.lambda_overrides[index_key(key)] = scalar_field(value, "lambdas." + key);
    }
  }
  return method_b(data);
}

AutomorphismSpec custom_from(const json& doc) {
  CustomFinite rule;
  if (doc.contains("defaultSign")) rule.default_sign = sign_field(doc.at("defaultSign"), "defaultSign");
  const json& images = field(doc, "images");
  if (!images.is_object()) throw SpecError("images must be an object mapping indices to elements");
  for (const auto& [key, value] : images.items()) {
    rule.images[index_key(key)] = element_field(value, "images." + key);
  }
  AutomorphismSpec spec;
  spec.name = doc.contains("name") && doc.at("name").is_string() ? doc.at("name").get<std::string>() : "custom";
  spec.rule = std::move(rule);
  return spec;
}

}  // namespace

AutomorphismSpec spec_from_json(const json& doc) {
  if (!doc.is_object()) throw SpecError("spec must be a JSON object");
  const json& kind = field(doc, "kind");
  if (!kind.is_string()) throw SpecError("kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "homogeneous") return homogeneous_from(doc);
  if (k == "methodA") return method_a_from(doc);
  if (k == "methodB") return method_b_from(doc);
  if (k == "methodC") return method_c();
  if (k == "custom") return custom_from(doc);
  throw SpecError("unknown spec kind \"" + k + "\"");
}

AutomorphismSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SpecError("JSON syntax error at line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + e.what());
  }
  return spec_from_json(doc);
}

AutomorphismSpec load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

}  // namespace grassmann
