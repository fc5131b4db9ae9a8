#include "kmbraid/factory.hpp"

namespace kmbraid {

namespace {

// built algebras are shared: repeated CLI/test lookups reuse one instance
std::shared_ptr<const ChevalleyAlgebra> finite_cached(const std::string& spec) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const ChevalleyAlgebra>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(spec);
  if (it != cache.end()) return it->second;
  auto alg = ChevalleyAlgebra::build(named_gcm(spec), spec);
  cache[spec] = alg;
  return alg;
}

} // namespace

std::shared_ptr<const ChevalleyAlgebra> make_finite(std::string_view spec) {
  return finite_cached(std::string(spec));
}

std::shared_ptr<const AffineLoopAlgebra> make_affine(std::string_view finite_spec) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const AffineLoopAlgebra>> cache;
  std::string key(finite_spec);
  std::scoped_lock lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto alg = AffineLoopAlgebra::build(make_finite(finite_spec), "affine:" + key);
  cache[key] = alg;
  return alg;
}

std::shared_ptr<const Algebra> make_algebra(std::string_view spec) {
  constexpr std::string_view prefix = "affine:";
  if (spec.substr(0, prefix.size()) == prefix) return make_affine(spec.substr(prefix.size()));
  return make_finite(spec);
}

} // namespace kmbraid
