/*
  Copyright (c) 2026 The rkcd Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "rkcd/model_zoo.hpp"

#include <cmath>
#include <cstdlib>

#include "rkcd/errors.hpp"
#include "rkcd/linalg.hpp"

namespace rkcd {

namespace {

void require_degree(int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "degree must be non-negative");
}

double parse_number(const std::string& text, const std::string& token) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size())
    throw Error(ErrorCode::InvalidArgument, "bad number in component token '" + token + "'");
  return v;
}

// Weights of a rank-one base token ("szego", "bergman", "bergman<alpha>", "exp").
std::vector<double> base_weights(const std::string& base, int degree, const std::string& token) {
  if (base == "szego") return bergman_weights(1.0, degree);
  if (base == "exp") return exp_weights(degree);
  if (base.rfind("bergman", 0) == 0) {
    const std::string rest = base.substr(7);
    return bergman_weights(rest.empty() ? 2.0 : parse_number(rest, token), degree);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown component '" + token + "'");
}

}  // namespace

KernelSeries diagonal_kernel(std::span<const double> weights) {
  if (weights.empty()) throw Error(ErrorCode::InvalidArgument, "diagonal kernel needs at least one weight");
  const int degree = static_cast<int>(weights.size()) - 1;
  KernelSeries k(1, degree);
  for (int m = 0; m <= degree; ++m) {
    const double a = weights[static_cast<std::size_t>(m)];
    if (!(a > 0.0)) throw Error(ErrorCode::InvalidArgument, "weight a_" + std::to_string(m) + " is not positive");
    k.set(m, m, ComplexMatrix::Constant(1, 1, a));
  }
  return k;
}

std::vector<double> bergman_weights(double alpha, int degree) {
  require_degree(degree);
  if (!(alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, "Bergman parameter must be positive");
  std::vector<double> w(static_cast<std::size_t>(degree + 1));
  w[0] = 1.0;
  for (int k = 1; k <= degree; ++k) w[static_cast<std::size_t>(k)] = w[static_cast<std::size_t>(k - 1)] * (alpha - 1.0 + k) / k;
  return w;
}

std::vector<double> exp_weights(int degree) {
  require_degree(degree);
  std::vector<double> w(static_cast<std::size_t>(degree + 1));
  w[0] = 1.0;
  for (int k = 1; k <= degree; ++k) w[static_cast<std::size_t>(k)] = w[static_cast<std::size_t>(k - 1)] / k;
  return w;
}

KernelSeries szego_kernel(int degree) { return diagonal_kernel(bergman_weights(1.0, degree)); }

KernelSeries bergman_kernel(int degree, double alpha) { return diagonal_kernel(bergman_weights(alpha, degree)); }

KernelSeries exp_kernel(int degree) { return diagonal_kernel(exp_weights(degree)); }

KernelSeries jet_kernel(std::span<const double> weights, int degree) {
  if (degree < 2) throw Error(ErrorCode::InvalidArgument, "jet kernel needs degree >= 2");
  if (weights.size() < static_cast<std::size_t>(degree + 2))
    throw Error(ErrorCode::InvalidArgument, "jet kernel of degree " + std::to_string(degree) + " needs " +
                                                std::to_string(degree + 2) + " weights");
  auto a = [&](int k) { return weights[static_cast<std::size_t>(k)]; };
  KernelSeries k(2, degree);
  for (int m = 0; m <= degree; ++m)
    for (int q = 0; q <= degree; ++q) {
      ComplexMatrix c = ComplexMatrix::Zero(2, 2);
      if (m == q) {
        c(0, 0) = a(m);
        c(1, 1) = (m + 1.0) * (m + 1.0) * a(m + 1);
      }
      if (m == q + 1) c(0, 1) = (q + 1.0) * a(q + 1);
      if (q == m + 1) c(1, 0) = (m + 1.0) * a(m + 1);
      k.set(m, q, c);
    }
  return k;
}

ComponentSpec parse_component(const std::string& token, int degree) {
  std::string name = token;
  int multiplicity = 1;
  if (const auto star = token.find('*'); star != std::string::npos) {
    name = token.substr(0, star);
    const double m = parse_number(token.substr(star + 1), token);
    if (m < 1 || m != std::floor(m))
      throw Error(ErrorCode::InvalidArgument, "multiplicity in '" + token + "' must be a positive integer");
    multiplicity = static_cast<int>(m);
  }
  if (name.rfind("jet-", 0) == 0) {
    const std::vector<double> w = base_weights(name.substr(4), degree + 1, token);
    return {jet_kernel(w, degree), multiplicity};
  }
  return {diagonal_kernel(base_weights(name, degree, token)), multiplicity};
}

KernelSeries direct_sum(std::span<const ComponentSpec> components) {
  std::vector<KernelSeries> parts;
  for (const ComponentSpec& c : components)
    for (int i = 0; i < c.multiplicity; ++i) parts.push_back(c.kernel);
  return direct_sum(std::span<const KernelSeries>(parts));
}

DisguisedInstance disguised_direct_sum(std::span<const ComponentSpec> components, std::uint64_t seed) {
  std::vector<ComponentSpec> merged;
  for (const ComponentSpec& c : components) {
    bool found = false;
    for (ComponentSpec& m : merged)
      if (m.kernel.rank() == c.kernel.rank() && m.kernel.degree() == c.kernel.degree() &&
          relative_residual(m.kernel, c.kernel) == 0.0) {
        m.multiplicity += c.multiplicity;
        found = true;
        break;
      }
    if (!found) merged.push_back(c);
  }
  const KernelSeries plain = direct_sum(std::span<const ComponentSpec>(merged));
  Rng rng(seed);
  DisguisedInstance out;
  out.truth.unitary = haar_unitary(plain.rank(), rng);
  out.kernel = conjugated(plain, out.truth.unitary);
  out.truth.t = static_cast<int>(merged.size());
  for (const ComponentSpec& c : merged) {
    out.truth.ranks.push_back(c.kernel.rank());
    out.truth.multiplicities.push_back(c.multiplicity);
  }
  return out;
}

KernelSeries random_psd_kernel(int n, int r, int degree, std::uint64_t seed, double decay) {
  require_degree(degree);
  if (n < 1 || r < n) throw Error(ErrorCode::InvalidArgument, "random_psd_kernel needs 1 <= n <= r");
  Rng rng(seed);
  std::vector<ComplexMatrix> f;
  for (int m = 0; m <= degree; ++m) f.push_back(std::pow(decay, m) * complex_gaussian(n, r, rng));
  // Extra columns sqrt(eps) I at degree 0 only.
  std::vector<ComplexMatrix> g;
  for (int m = 0; m <= degree; ++m) {
    ComplexMatrix c = ComplexMatrix::Zero(n, r + n);
    c.leftCols(r) = f[static_cast<std::size_t>(m)];
    if (m == 0) c.rightCols(n) = std::sqrt(kRandomPsdShift) * ComplexMatrix::Identity(n, n);
    g.push_back(std::move(c));
  }
  KernelSeries k(n, degree);
  for (int m = 0; m <= degree; ++m)
    for (int q = 0; q <= degree; ++q) k.set(m, q, g[static_cast<std::size_t>(m)] * g[static_cast<std::size_t>(q)].adjoint());
  return k;
}

HoloSeries random_holo(int n, int degree, std::uint64_t seed, double decay) {
  require_degree(degree);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "random_holo needs n >= 1");
  Rng rng(seed);
  HoloSeries phi(n, n, degree);
  phi.set(0, haar_unitary(n, rng) + 0.2 * complex_gaussian(n, n, rng));
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (int m = 1; m <= degree; ++m) phi.set(m, std::pow(decay, m) * s * complex_gaussian(n, n, rng));
  return phi;
}

std::optional<GeneratorKind> parse_generator_kind(const std::string& name) {
  if (name == "szego") return GeneratorKind::Szego;
  if (name == "bergman") return GeneratorKind::Bergman;
  if (name == "exp") return GeneratorKind::Exp;
  if (name == "diagonal") return GeneratorKind::DiagonalWeights;
  if (name == "jet") return GeneratorKind::Jet;
  if (name == "direct-sum") return GeneratorKind::DirectSum;
  if (name == "disguised") return GeneratorKind::Disguised;
  if (name == "random-psd") return GeneratorKind::RandomPsd;
  return std::nullopt;
}

const char* to_string(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::Szego: return "szego";
    case GeneratorKind::Bergman: return "bergman";
    case GeneratorKind::Exp: return "exp";
    case GeneratorKind::DiagonalWeights: return "diagonal";
    case GeneratorKind::Jet: return "jet";
    case GeneratorKind::DirectSum: return "direct-sum";
    case GeneratorKind::Disguised: return "disguised";
    case GeneratorKind::RandomPsd: return "random-psd";
  }
  return "unknown";
}

GeneratedKernel generate(const GeneratorSpec& spec) {
  auto components = [&] {
    if (spec.components.empty()) throw Error(ErrorCode::InvalidArgument, "no components given");
    std::vector<ComponentSpec> out;
    for (const std::string& token : spec.components) out.push_back(parse_component(token, spec.degree));
    return out;
  };
  switch (spec.kind) {
    case GeneratorKind::Szego: return {szego_kernel(spec.degree), std::nullopt};
    case GeneratorKind::Bergman: return {bergman_kernel(spec.degree, spec.alpha), std::nullopt};
    case GeneratorKind::Exp: return {exp_kernel(spec.degree), std::nullopt};
    case GeneratorKind::DiagonalWeights: return {diagonal_kernel(spec.weights), std::nullopt};
    case GeneratorKind::Jet: {
      if (spec.base.find('*') != std::string::npos)
        throw Error(ErrorCode::InvalidArgument, "jet base takes no multiplicity");
      return {parse_component("jet-" + spec.base, spec.degree).kernel, std::nullopt};
    }
    case GeneratorKind::DirectSum: {
      const std::vector<ComponentSpec> c = components();
      return {direct_sum(std::span<const ComponentSpec>(c)), std::nullopt};
    }
    case GeneratorKind::Disguised: {
      const std::vector<ComponentSpec> c = components();
      DisguisedInstance d = disguised_direct_sum(c, spec.seed);
      return {std::move(d.kernel), std::move(d.truth)};
    }
    case GeneratorKind::RandomPsd:
      return {random_psd_kernel(spec.rank, spec.width == 0 ? spec.rank + 2 : spec.width, spec.degree, spec.seed),
              std::nullopt};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown generator kind");
}

}  // namespace rkcd
