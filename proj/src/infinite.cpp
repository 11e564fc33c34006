#include "hiso/infinite.hpp"

#include <random>
#include <stdexcept>

#include "hiso/halfiso.hpp"

namespace hiso {

namespace {

constexpr int kSampleIndexBound = 12;

CayleyTable relabel_identity_to_one(const CayleyTable& t, Permutation& g) {
  const auto cls = classify(t);
  if (cls.kind != AlgebraKind::Loop)
    throw std::invalid_argument("table is not a loop");
  const int e = *cls.identity;
  std::vector<int> images(static_cast<size_t>(t.order()));
  for (int i = 1; i <= t.order(); ++i) images[static_cast<size_t>(i - 1)] = i;
  if (e != 1) std::swap(images[0], images[static_cast<size_t>(e - 1)]);
  g = Permutation(std::move(images));
  return e == 1 ? t : apply_iso(t, g);  // the transposition is self-inverse
}

}  // namespace

LoopPair::LoopPair(CayleyTable star, CayleyTable dot, Permutation f)
    : star_(1, {1}), dot_(1, {1}), f_(Permutation::identity(1)), witness_{0, 0} {
  if (star.order() != dot.order() || star.order() != f.degree())
    throw std::invalid_argument("loops and mapping must share one order");
  Permutation g_star = Permutation::identity(star.order());
  Permutation g_dot = g_star;
  star_ = relabel_identity_to_one(star, g_star);
  dot_ = relabel_identity_to_one(dot, g_dot);
  f_ = compose(g_dot, compose(f, g_star));  // g_star⁻¹ = g_star

  const auto v = specialness(star_, dot_, f_);
  if (!v.is_half_iso)
    throw std::invalid_argument("mapping is not a half-isomorphism");
  if (v.is_special)
    throw std::invalid_argument(
        "mapping is special; the construction needs a non-special one");
  witness_ = *v.nonspecial_witness;
  if (f_(1) != 1)
    throw std::logic_error("half-isomorphism moved the identity");
}

FinSuppElement product(const LoopPair& p, const FinSuppElement& a,
                       const FinSuppElement& b) {
  FinSuppElement out;
  auto value = [](const FinSuppElement& e, int j) {
    auto it = e.support.find(j);
    return it == e.support.end() ? 1 : it->second;
  };
  auto consider = [&](int j) {
    if (out.support.count(j)) return;
    const int x = value(a, j), y = value(b, j);
    const int z = j % 2 == 1 ? p.star().at(x, y) : p.dot().at(x, y);
    if (z != 1) out.support.emplace(j, z);
  };
  for (const auto& kv : a.support) consider(kv.first);
  for (const auto& kv : b.support) consider(kv.first);
  return out;
}

FinSuppElement phi(const LoopPair& p, const FinSuppElement& a) {
  FinSuppElement out;
  for (const auto& [j, v] : a.support) {
    if (j == 1) {
      const int w = p.f()(v);
      if (w != 1) out.support.emplace(2, w);
    } else if (j % 2 == 1) {
      out.support.emplace(j - 2, v);
    } else {
      out.support.emplace(j + 2, v);
    }
  }
  return out;
}

FinSuppElement phi_inverse(const LoopPair& p, const FinSuppElement& a) {
  FinSuppElement out;
  const Permutation finv = p.f().inverse();
  for (const auto& [j, v] : a.support) {
    if (j == 2) {
      const int w = finv(v);
      if (w != 1) out.support.emplace(1, w);
    } else if (j % 2 == 1) {
      out.support.emplace(j + 2, v);
    } else {
      out.support.emplace(j - 2, v);
    }
  }
  return out;
}

namespace {

FinSuppElement draw_element(std::mt19937_64& rng, int n) {
  FinSuppElement e;
  for (int j = 1; j <= kSampleIndexBound; ++j) {
    const int v = 1 + static_cast<int>(rng() % static_cast<uint64_t>(n));
    if (v != 1) e.support.emplace(j, v);
  }
  return e;
}

bool membership_holds(const LoopPair& p, const FinSuppElement& a,
                      const FinSuppElement& b) {
  const FinSuppElement lhs = phi(p, product(p, a, b));
  return lhs == product(p, phi(p, a), phi(p, b)) ||
         lhs == product(p, phi(p, b), phi(p, a));
}

}  // namespace

std::optional<std::pair<FinSuppElement, FinSuppElement>>
find_half_automorphism_violation(const LoopPair& p, long long samples,
                                 uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (long long i = 0; i < samples; ++i) {
    FinSuppElement a = draw_element(rng, p.order());
    FinSuppElement b = draw_element(rng, p.order());
    if (!membership_holds(p, a, b)) return std::pair{std::move(a), std::move(b)};
  }
  return std::nullopt;
}

bool verify_half_automorphism(const LoopPair& p, long long samples,
                              uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  return !find_half_automorphism_violation(p, samples, seed);
}

std::pair<FinSuppElement, FinSuppElement> nonspecial_witness_infinite(
    const LoopPair& p) {
  const auto [u, v] = p.witness();
  FinSuppElement a, b;
  a.support.emplace(2, u);
  b.support.emplace(2, v);

  // At index 2 the product multiplies with dot and phi_inverse applies f⁻¹
  // into index 1, so the stored inverse violation reappears verbatim.
  const FinSuppElement lhs = phi_inverse(p, product(p, a, b));
  const bool violates =
      lhs != product(p, phi_inverse(p, a), phi_inverse(p, b)) &&
      lhs != product(p, phi_inverse(p, b), phi_inverse(p, a));
  if (!violates)
    throw std::logic_error("stored witness no longer violates the inverse map");
  return {a, b};
}

}  // namespace hiso
