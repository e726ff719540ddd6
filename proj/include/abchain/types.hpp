#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

namespace abchain {

using Real = double;
using Complex = std::complex<Real>;

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;
using Index = Eigen::Index;

// Occupation bitmask: bit i set <=> site i excited, sites 0..N-1 left to right.
using SiteMask = std::uint32_t;

// The three entangling protocols: cluster-state generation from |+> injections
// at both ends, Bell-state generation from excitations at both ends, and
// Bell-state generation from a single excitation at the centre site.
enum class Protocol { cluster, bell_ends, bell_centre };

// Conventional CLI spellings "i", "ii", "iii".
Protocol parse_protocol(const std::string& name);
std::string to_string(Protocol p);

}  // namespace abchain
