#pragma once

#include <bit>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "inducibility/iso_table.hpp"
#include "inducibility/profile.hpp"

namespace inducibility {

/// Fourier transform of a labeled repetitive profile over the group of
/// labeled t-graphs under symmetric difference:
///   hat(H) = sum over H' of (-1)^{|E(H) & E(H')|} r(H').
/// No normalization on the forward transform; the inverse carries 2^{-m}.
template <typename Scalar>
struct SpectralProfile {
  int t = 0;
  Vector<Scalar> values;

  const Scalar& operator[](LabeledMask mask) const { return values(mask); }
};

namespace detail {

template <typename Scalar>
void walsh_hadamard(Vector<Scalar>& x) {
  const Eigen::Index n = x.size();
  for (Eigen::Index len = 1; len < n; len <<= 1) {
    for (Eigen::Index i = 0; i < n; i += len << 1) {
      for (Eigen::Index j = i; j < i + len; ++j) {
        Scalar a = x(j);
        Scalar b = x(j + len);
        x(j) = a + b;
        x(j + len) = a - b;
      }
    }
  }
}

inline void require_same_order(int a, int b) {
  if (a != b) throw std::invalid_argument("profiles of different orders cannot be combined");
}

}  // namespace detail

template <typename Scalar>
SpectralProfile<Scalar> fourier(const LabeledProfile<Scalar>& r) {
  SpectralProfile<Scalar> hat{r.t, r.values};
  detail::walsh_hadamard(hat.values);
  return hat;
}

template <typename Scalar>
LabeledProfile<Scalar> inverse_fourier(const SpectralProfile<Scalar>& hat) {
  LabeledProfile<Scalar> r{hat.t, Flavor::Repetitive, hat.values};
  detail::walsh_hadamard(r.values);
  r.values /= Scalar(labeled_count(hat.t));
  return r;
}

/// Group convolution: (a * b)(H) = sum over H' of a(H') b(H xor H').
/// The repetitive profile of a tensor product is the convolution of the
/// factors' profiles.
template <typename Scalar>
LabeledProfile<Scalar> convolve(const LabeledProfile<Scalar>& a, const LabeledProfile<Scalar>& b) {
  detail::require_same_order(a.t, b.t);
  const Eigen::Index n = a.values.size();
  LabeledProfile<Scalar> out{a.t, Flavor::Repetitive, Vector<Scalar>::Zero(n)};
  for (Eigen::Index x = 0; x < n; ++x) {
    if (a.values(x) == Scalar(0)) continue;
    for (Eigen::Index y = 0; y < n; ++y) {
      if (b.values(y) == Scalar(0)) continue;
      out.values(x ^ y) += a.values(x) * b.values(y);
    }
  }
  return out;
}

/// Entrywise product: the spectral profile of a tensor product.
template <typename Scalar>
SpectralProfile<Scalar> pointwise_product(const std::vector<SpectralProfile<Scalar>>& hats) {
  if (hats.empty()) throw std::invalid_argument("need at least one spectral profile");
  SpectralProfile<Scalar> out = hats.front();
  for (std::size_t i = 1; i < hats.size(); ++i) {
    detail::require_same_order(out.t, hats[i].t);
    out.values = out.values.cwiseProduct(hats[i].values);
  }
  return out;
}

/// Spectral value per isomorphism type (constant on orbits; the
/// representative's value is reported).
template <typename Scalar>
Vector<Scalar> by_type(const SpectralProfile<Scalar>& hat) {
  const IsoTable& table = iso_table(hat.t);
  Vector<Scalar> out(table.size());
  for (int i = 0; i < table.size(); ++i) out(i) = hat.values(table[i].representative);
  return out;
}

/// Labeled coefficients c with  sum_H a(H) r(H) = sum_H c(H) hat(H).
template <typename Scalar>
Vector<Scalar> spectral_coefficients(const Vector<Scalar>& weights_per_mask, int t) {
  SpectralProfile<Scalar> tmp{t, weights_per_mask};
  return inverse_fourier(tmp).values;
}

namespace detail {

template <typename Scalar>
Vector<Scalar> aggregate_by_type(const Vector<Scalar>& per_mask, int t) {
  const IsoTable& table = iso_table(t);
  Vector<Scalar> out = Vector<Scalar>::Zero(table.size());
  for (Eigen::Index m = 0; m < per_mask.size(); ++m) out(table.type_of(static_cast<LabeledMask>(m))) += per_mask(m);
  return out;
}

// Weight of each labeled graph in the quantum combination; `labeled`
// spreads each coefficient over the orbit (density of one labeled copy).
template <typename Scalar>
Vector<Scalar> quantum_mask_weights(const QuantumGraph& q, bool labeled) {
  if (q.t < 2 || q.t > kMaxOrder) throw std::invalid_argument("quantum graph order must lie in 2..5");
  const IsoTable& table = iso_table(q.t);
  Vector<Scalar> a = Vector<Scalar>::Zero(labeled_count(q.t));
  for (LabeledMask m = 0; m < labeled_count(q.t); ++m) {
    const int type = table.type_of(m);
    for (const auto& [idx, coeff] : q.terms) {
      if (idx != type) continue;
      Scalar c = from_rational<Scalar>(coeff);
      if (labeled) c /= Scalar(table[type].orbit_size);
      a(m) += c;
    }
  }
  return a;
}

}  // namespace detail

/// Per-type coefficients c_U with r(Q, G) = sum_U c_U hat(U, G), where r is
/// the labeled density (each term counts one labeled copy of its type).
/// For K4 + A4 this is (1 + K4 + 3 M4 + 3 C4 + 12 Q4 + 12 V4) / 32.
template <typename Scalar = Rational>
Vector<Scalar> quantum_functional(const QuantumGraph& q) {
  return detail::aggregate_by_type<Scalar>(
      spectral_coefficients<Scalar>(detail::quantum_mask_weights<Scalar>(q, true), q.t), q.t);
}

/// Per-type coefficients for the unlabeled density R(Q, G).
template <typename Scalar = Rational>
Vector<Scalar> density_functional(const QuantumGraph& q) {
  return detail::aggregate_by_type<Scalar>(
      spectral_coefficients<Scalar>(detail::quantum_mask_weights<Scalar>(q, false), q.t), q.t);
}

/// R(Q, ·) of the tensor product whose factors have the given spectral
/// profiles; nested spectral profiles give the limit of the nested chain.
template <typename Scalar = Rational>
Scalar product_limit_density(const QuantumGraph& q,
                             const std::vector<SpectralProfile<std::type_identity_t<Scalar>>>& hats) {
  const SpectralProfile<Scalar> product = pointwise_product(hats);
  detail::require_same_order(q.t, product.t);
  const Vector<Scalar> c =
      spectral_coefficients<Scalar>(detail::quantum_mask_weights<Scalar>(q, false), q.t);
  return c.dot(product.values);
}

}  // namespace inducibility
