// Copyright (c) 2026 The rpf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rpf/linalg.hpp"

namespace rpf {

/// Dense matrices are only materialized up to this many qubits.
inline constexpr int kMaxDenseQubits = 12;

enum class PauliAxis : int { X = 0, Y = 1, Z = 2 };

struct PauliFactor {
  int site;  // 1-based
  PauliAxis axis;
};

/// Tensor product of single-site Pauli matrices, identity elsewhere.
/// Factors are kept with strictly increasing sites (canonical form); the
/// represented operator is Hermitian with spectral norm exactly 1.
struct PauliString {
  int n = 0;
  std::vector<PauliFactor> factors;
};

/// Throws unless sites are strictly increasing and within [1, n].
void validate_pauli_string(const PauliString& p);

/// One summand H_j = coefficient * body.
struct HamiltonianTerm {
  int id = 0;  // 1-based position in the term list
  std::variant<PauliString, ComplexMatrix> body;
  double coefficient = 0.0;
  double norm = 0.0;  // |coefficient| * ||body||

  bool is_pauli() const { return std::holds_alternative<PauliString>(body); }
  const PauliString& pauli() const { return std::get<PauliString>(body); }
};

struct Hamiltonian {
  int n = 0;
  std::vector<HamiltonianTerm> terms;
  double lambda_max = 0.0;  // max_j ||H_j||

  // Construction parameters, kept so instances serialize reproducibly.
  double field_strength = 0.0;
  std::uint64_t seed = 0;

  int term_count() const { return static_cast<int>(terms.size()); }
  Eigen::Index dim() const { return Eigen::Index(1) << n; }
};

HamiltonianTerm make_pauli_term(int id, PauliString body, double coefficient);
HamiltonianTerm make_dense_term(int id, ComplexMatrix body, double coefficient);

/// One-dimensional nearest-neighbor Heisenberg chain with periodic boundary
/// and a random longitudinal field: sum_j (sigma_j . sigma_{j+1} + h_j sigma_j^z)
/// with h_j uniform on [-h, h]. Terms are ordered as all xx couplings
/// (including the wrap-around), then yy, then zz, then the n field terms,
/// for L = 4n in total. Field draws consume the seeded stream in term order.
Hamiltonian build_heisenberg(int n, double h, std::uint64_t seed);

/// coefficient * (tensor product with the 2x2 Pauli factors at their sites).
/// Site 1 is the most significant index bit.
ComplexMatrix term_matrix(const HamiltonianTerm& term, int n);

/// Sum of all term matrices.
ComplexMatrix dense_sum(const Hamiltonian& h);

/// exp(-i t sum_j H_j).
ComplexMatrix ideal_evolution(const Hamiltonian& h, double t);

/// JSON form {n, h, seed, terms:[{id, kind, sites, axes, coefficient}]}.
/// Floating values are written with 10 significant digits.
std::string hamiltonian_to_json(const Hamiltonian& h);
Hamiltonian hamiltonian_from_json(const std::string& text);

}  // namespace rpf
