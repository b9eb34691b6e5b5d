#include "grassmann/automorphism.hpp"

#include <stdexcept>
#include <unordered_map>

#include "grassmann/construction.hpp"

namespace grassmann {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Element signed_generator(int sign, Index i) {
  return Element(Scalar(sign), Monomial::generator(i));
}

void require_bound(Index bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
}

// Memoizes generator images for the duration of one computation.
class ImageCache {
 public:
  explicit ImageCache(const AutomorphismSpec& spec) : spec_(spec) {}

  const Element& operator()(Index i) {
    auto it = cache_.find(i);
    if (it == cache_.end()) it = cache_.emplace(i, image_of_generator(spec_, i)).first;
    return it->second;
  }

 private:
  const AutomorphismSpec& spec_;
  std::unordered_map<Index, Element> cache_;
};

Element apply_with(ImageCache& images, const Element& a) {
  Element out;
  for (const auto& [m, c] : a.terms()) {
    Element prod = Element::one();
    for (Index i : m.indices()) {
      prod = prod * images(i);
      if (prod.is_zero()) break;
    }
    if (!prod.is_zero()) out += c * prod;
  }
  return out;
}

}  // namespace

int SignRule::sign(Index i) const {
  if (auto it = exceptions.find(i); it != exceptions.end()) return it->second;
  return i % 2 == 0 ? even_default : odd_default;
}

Scalar TailRule::lambda(Index n) const {
  if (auto it = lambda_overrides.find(n); it != lambda_overrides.end()) return it->second;
  return default_lambda;
}

std::string to_string(Certification::Kind k) {
  switch (k) {
    case Certification::Kind::Unverified: return "unverified";
    case Certification::Kind::BoundedEvidence: return "bounded-evidence";
    case Certification::Kind::Structural: return "structural";
  }
  return "?";
}

std::string rule_kind(const AutomorphismSpec& spec) {
  return std::visit(Overloaded{
                        [](const SignRule&) { return "sign"; },
                        [](const PerturbedSignRule&) { return "perturbed-sign"; },
                        [](const TailRule&) { return "tail"; },
                        [](const EpsilonRule&) { return "epsilon"; },
                        [](const CustomFinite&) { return "custom"; },
                        [](const ComposedRule&) { return "composed"; },
                    },
                    spec.rule);
}

TailBehaviour tail_behaviour(const AutomorphismSpec& spec) {
  using K = TailBehaviour::Kind;
  return std::visit(
      Overloaded{
          [](const SignRule& r) {
            return TailBehaviour{K::Homogeneous, r.exceptions.empty() ? 0 : r.exceptions.rbegin()->first};
          },
          [](const PerturbedSignRule& r) {
            Index h = r.base.exceptions.empty() ? 0 : r.base.exceptions.rbegin()->first;
            if (!r.perturbations.empty()) h = std::max(h, r.perturbations.rbegin()->first);
            return TailBehaviour{K::Homogeneous, h};
          },
          [](const TailRule& r) {
            // Overrides that disagree with the default about lambda_n = 0
            // push the horizon out past them.
            Index h = r.threshold;
            for (const auto& [n, l] : r.lambda_overrides) {
              if (n > r.threshold && (l == 0) != (r.default_lambda == 0)) h = std::max(h, n);
            }
            return TailBehaviour{r.default_lambda == 0 ? K::Homogeneous : K::NonHomogeneous, h};
          },
          [](const EpsilonRule&) { return TailBehaviour{K::NonHomogeneous, 0}; },
          [](const CustomFinite& r) {
            return TailBehaviour{K::Homogeneous, r.images.empty() ? 0 : r.images.rbegin()->first};
          },
          [](const ComposedRule&) { return TailBehaviour{K::Unknown, 0}; },
      },
      spec.rule);
}

Element image_of_generator(const AutomorphismSpec& spec, Index i) {
  if (i < 1) throw std::invalid_argument("generator index must be >= 1");
  return std::visit(
      Overloaded{
          [i](const SignRule& r) { return signed_generator(r.sign(i), i); },
          [i](const PerturbedSignRule& r) {
            Element img = signed_generator(r.base.sign(i), i);
            if (auto it = r.perturbations.find(i); it != r.perturbations.end()) img += it->second;
            return img;
          },
          [i](const TailRule& r) {
            if (i <= r.threshold) return signed_generator(r.head.sign(i), i);
            Element img = signed_generator(r.tail_sign, i);
            img += r.lambda(i) * (Element(r.prefix) * Element::generator(i));
            return img;
          },
          [i](const EpsilonRule&) {
            Element img = signed_generator(epsilon(i), i);
            img += Element(Monomial::prefix(2 * i + 1));
            return img;
          },
          [i](const CustomFinite& r) {
            if (auto it = r.images.find(i); it != r.images.end()) return it->second;
            return signed_generator(r.default_sign, i);
          },
          [i](const ComposedRule& r) {
            return apply(*r.outer, image_of_generator(*r.inner, i));
          },
      },
      spec.rule);
}

Index image_support_bound(const AutomorphismSpec& spec, Index bound) {
  Index out = 0;
  for (Index i = 1; i <= bound; ++i) {
    out = std::max(out, support_bound(image_of_generator(spec, i)));
  }
  return out;
}

Element apply(const AutomorphismSpec& spec, const Element& a) {
  ImageCache images(spec);
  return apply_with(images, a);
}

Element anticommutator(const AutomorphismSpec& spec, Index i, Index j) {
  Element li = image_of_generator(spec, i);
  Element lj = image_of_generator(spec, j);
  return li * lj + lj * li;
}

Verdict check_anticommute(const AutomorphismSpec& spec, Index bound) {
  require_bound(bound);
  ImageCache images(spec);
  for (Index i = 1; i <= bound; ++i) {
    for (Index j = i; j <= bound; ++j) {
      const Element& li = images(i);
      const Element& lj = images(j);
      Element residual = li * lj + lj * li;
      if (!residual.is_zero()) {
        return counterexample("check_anticommute", bound,
                              Counterexample{.indices = {i, j}, .residual = std::move(residual)});
      }
    }
  }
  return holds("check_anticommute", bound);
}

Verdict check_involution(const AutomorphismSpec& spec, Index bound) {
  require_bound(bound);
  if (Verdict endo = check_anticommute(spec, bound); !endo.holds()) {
    endo.check = "check_involution";
    endo.status = Status::Rejected;
    endo.note = "not an endomorphism: generator images fail to anticommute";
    return endo;
  }
  ImageCache images(spec);
  for (Index i = 1; i <= bound; ++i) {
    Element twice = apply_with(images, images(i));
    Element expected = Element::generator(i);
    if (twice != expected) {
      return counterexample("check_involution", bound,
                            Counterexample{.indices = {i},
                                           .residual = twice - expected,
                                           .actual = twice,
                                           .expected = expected});
    }
  }
  return holds("check_involution", bound);
}

Verdict is_canonical_type(const AutomorphismSpec& spec, Index bound) {
  require_bound(bound);
  for (Index i = 1; i <= bound; ++i) {
    Element even = parity_split(image_of_generator(spec, i)).even;
    if (!even.is_zero()) {
      return counterexample("is_canonical_type", bound,
                            Counterexample{.indices = {i}, .residual = std::move(even)});
    }
  }
  return holds("is_canonical_type", bound);
}

Projection project(const AutomorphismSpec& spec, const Element& a) {
  const Scalar half(1, 2);
  Element image = apply(spec, a);
  return {half * (a + image), half * (a - image)};
}

Element fixed_component(const AutomorphismSpec& spec, Index i) {
  return project(spec, Element::generator(i)).a0;
}

AutomorphismSpec compose(const AutomorphismSpec& s1, const AutomorphismSpec& s2) {
  AutomorphismSpec out;
  out.name = s1.name + " o " + s2.name;
  out.rule = ComposedRule{std::make_shared<const AutomorphismSpec>(s1),
                          std::make_shared<const AutomorphismSpec>(s2)};
  return out;
}

}  // namespace grassmann
