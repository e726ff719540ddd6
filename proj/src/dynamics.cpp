#include "abchain/dynamics.hpp"

#include <cmath>
#include <utility>

#include "abchain/errors.hpp"

namespace abchain {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_same_basis(const BasisPtr& a, const BasisPtr& b) {
  if (!a || !b || a->n_sites() != b->n_sites() || a->dimension() != b->dimension()) {
    throw InvalidInputError("state and operator were built on different bases");
  }
}

// M v for real M and complex v, as two real products.
ComplexVector apply_real(const Matrix& m, const ComplexVector& v) {
  ComplexVector out(m.rows());
  out.real() = m * v.real();
  out.imag() = m * v.imag();
  return out;
}

}  // namespace

QuantumState zero_state(BasisPtr basis) {
  QuantumState psi;
  psi.amplitudes = ComplexVector::Zero(basis->dimension());
  psi.basis = std::move(basis);
  return psi;
}

QuantumState vacuum_state(BasisPtr basis) {
  QuantumState psi = zero_state(std::move(basis));
  psi.amplitudes[0] = Complex{1.0, 0.0};
  return psi;
}

SpectralDecomposition decompose(const SectorHamiltonian& h) {
  SpectralDecomposition sd;
  sd.basis = h.basis;
  sd.eigenvalues.reserve(h.blocks.size());
  sd.eigenvectors.reserve(h.blocks.size());
  for (const Matrix& block : h.blocks) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(block);
    if (solver.info() != Eigen::Success) {
      throw NumericalError("symmetric eigensolver failed to converge on a " +
                           std::to_string(block.rows()) + "x" +
                           std::to_string(block.cols()) + " block");
    }
    sd.eigenvalues.push_back(solver.eigenvalues());
    sd.eigenvectors.push_back(solver.eigenvectors());
  }
  return sd;
}

QuantumState evolve(const SpectralDecomposition& sd, const QuantumState& psi, Real t) {
  require_same_basis(sd.basis, psi.basis);
  if (!(t >= 0.0)) throw InvalidInputError("evolution time must be >= 0");
  if (t == 0.0) return psi;

  QuantumState out = psi;
  const SectorBasis& basis = *sd.basis;
  for (int k = 0; k < basis.n_sectors(); ++k) {
    const Index off = basis.sector_offset(k);
    const Index len = basis.sector_size(k);
    auto segment = out.amplitudes.segment(off, len);
    if (segment.isZero(0.0)) continue;

    const Matrix& v = sd.eigenvectors[static_cast<std::size_t>(k)];
    const Vector& lambda = sd.eigenvalues[static_cast<std::size_t>(k)];
    ComplexVector coeffs = apply_real(v.transpose(), segment);
    coeffs.array() *= (-kI * t * lambda.array().cast<Complex>()).exp();
    segment = apply_real(v, coeffs);
  }
  return out;
}

Real occupation_probability(const QuantumState& psi, int site) {
  const SectorBasis& basis = *psi.basis;
  if (site < 0 || site >= basis.n_sites()) {
    throw InvalidInputError("site index out of range");
  }
  const SiteMask bit = SiteMask{1} << site;
  Real p = 0.0;
  for (Index i = 0; i < basis.dimension(); ++i) {
    if (basis.mask_at(i) & bit) p += std::norm(psi.amplitudes[i]);
  }
  return p;
}

Real energy_expectation(const SectorHamiltonian& h, const QuantumState& psi) {
  require_same_basis(h.basis, psi.basis);
  const SectorBasis& basis = *h.basis;
  Real e = 0.0;
  for (int k = 0; k < basis.n_sectors(); ++k) {
    const auto segment = psi.amplitudes.segment(basis.sector_offset(k), basis.sector_size(k));
    e += (segment.adjoint() * apply_real(h.blocks[static_cast<std::size_t>(k)], segment))
             .value()
             .real();
  }
  return e;
}

QuantumState inject_at_c(const QuantumState& psi, Protocol protocol,
                         Real occupation_threshold) {
  if (protocol == Protocol::bell_centre) {
    throw InvalidInputError("centre-injection protocol has no second injection");
  }
  const SectorBasis& basis = *psi.basis;
  if (basis.max_excitations() < 2) {
    throw InvalidInputError("second injection needs the two-excitation sector");
  }
  const int site_c = basis.n_sites() - 1;
  const Real occ = occupation_probability(psi, site_c);
  if (occ > occupation_threshold) {
    throw InjectionError("site C occupation " + std::to_string(occ) +
                         " exceeds the injection validity threshold " +
                         std::to_string(occupation_threshold));
  }
  const SiteMask bit_c = SiteMask{1} << site_c;

  if (protocol == Protocol::bell_ends) {
    // Move every one-excitation amplitude c_i onto the pair {i, C}; the
    // negligible amplitude already on C has no pair state and is dropped.
    QuantumState out = zero_state(psi.basis);
    out.amplitudes[0] = psi.amplitudes[0];
    const auto& pairs = basis.sector_states(2);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      out.amplitudes[basis.sector_offset(2) + static_cast<Index>(p)] =
          psi.amplitudes[basis.sector_offset(2) + static_cast<Index>(p)];
    }
    for (int i = 0; i < site_c; ++i) {
      const Complex c_i = psi.amplitudes[basis.sector_offset(1) + i];
      out.amplitudes[basis.index_of((SiteMask{1} << i) | bit_c)] += c_i;
    }
    return out;
  }

  // Cluster protocol: |0>_C -> (|0>_C + |1>_C)/sqrt(2) on the whole state.
  // Raising C on a two-excitation state would leave the truncated space, so
  // that sector must be (and for the single-injection start, is) empty.
  const auto sector2 = psi.amplitudes.segment(basis.sector_offset(2), basis.sector_size(2));
  if (sector2.squaredNorm() > occupation_threshold) {
    throw InjectionError("two-excitation sector is occupied before the second injection");
  }
  const Real inv_sqrt2 = 1.0 / std::sqrt(2.0);
  QuantumState out = psi;
  out.amplitudes *= inv_sqrt2;
  out.amplitudes[basis.index_of(bit_c)] += inv_sqrt2 * psi.amplitudes[0];
  for (int i = 0; i < site_c; ++i) {
    const Complex c_i = psi.amplitudes[basis.sector_offset(1) + i];
    out.amplitudes[basis.index_of((SiteMask{1} << i) | bit_c)] += inv_sqrt2 * c_i;
  }
  return out;
}

QuantumState delayed_protocol_state(const SpectralDecomposition& sd, Protocol protocol,
                                    Real delay_fraction, Real t_entangle,
                                    Real occupation_threshold, Real max_delay_fraction) {
  if (protocol == Protocol::bell_centre) {
    throw InvalidInputError("centre-injection protocol has no second injection");
  }
  if (!(delay_fraction >= 0.0) || delay_fraction > max_delay_fraction) {
    throw InvalidInputError("delay fraction must lie in [0, " +
                            std::to_string(max_delay_fraction) + "]");
  }
  if (!(t_entangle > 0.0)) {
    throw InvalidInputError("entangling time must be positive");
  }

  QuantumState start = zero_state(sd.basis);
  const Index site_a_index = sd.basis->sector_offset(1);  // one excitation at site 0
  if (protocol == Protocol::cluster) {
    const Real inv_sqrt2 = 1.0 / std::sqrt(2.0);
    start.amplitudes[0] = inv_sqrt2;
    start.amplitudes[site_a_index] = inv_sqrt2;
  } else {
    start.amplitudes[site_a_index] = 1.0;
  }

  const Real t_delay = delay_fraction * t_entangle;
  QuantumState before = evolve(sd, start, t_delay);
  QuantumState after = inject_at_c(before, protocol, occupation_threshold);
  return evolve(sd, after, t_entangle - t_delay);
}

}  // namespace abchain
