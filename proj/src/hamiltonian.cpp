// Copyright (c) 2026 The rpf Authors.
// SPDX-License-Identifier: Apache-2.0

#include "rpf/hamiltonian.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "rpf/rng.hpp"

namespace rpf {

namespace {

Eigen::Matrix2cd pauli_matrix(PauliAxis axis) {
  const std::complex<double> i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (axis) {
    case PauliAxis::X: m << 0, 1, 1, 0; break;
    case PauliAxis::Y: m << 0, -i, i, 0; break;
    case PauliAxis::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

char axis_char(PauliAxis a) { return a == PauliAxis::X ? 'x' : (a == PauliAxis::Y ? 'y' : 'z'); }

PauliAxis axis_from_char(char c) {
  switch (c) {
    case 'x': return PauliAxis::X;
    case 'y': return PauliAxis::Y;
    case 'z': return PauliAxis::Z;
    default: throw std::invalid_argument("axis must be one of x, y, z");
  }
}

}  // namespace

void validate_pauli_string(const PauliString& p) {
  if (p.n < 1) throw std::invalid_argument("PauliString: qubit count must be positive");
  int prev = 0;
  for (const auto& f : p.factors) {
    if (f.site <= prev) throw std::invalid_argument("PauliString: sites must be strictly increasing");
    if (f.site > p.n) throw std::invalid_argument("PauliString: site index exceeds qubit count");
    prev = f.site;
  }
}

HamiltonianTerm make_pauli_term(int id, PauliString body, double coefficient) {
  validate_pauli_string(body);
  HamiltonianTerm t;
  t.id = id;
  t.coefficient = coefficient;
  t.norm = std::abs(coefficient);  // Pauli strings have unit spectral norm
  t.body = std::move(body);
  return t;
}

HamiltonianTerm make_dense_term(int id, ComplexMatrix body, double coefficient) {
  HamiltonianTerm t;
  t.id = id;
  t.coefficient = coefficient;
  t.norm = std::abs(coefficient) * spectral_norm(body);
  t.body = std::move(body);
  return t;
}

Hamiltonian build_heisenberg(int n, double h, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("build_heisenberg: need n >= 3 for a periodic chain");
  if (h < 0) throw std::invalid_argument("build_heisenberg: field strength must be >= 0");

  Hamiltonian ham;
  ham.n = n;
  ham.field_strength = h;
  ham.seed = seed;
  ham.terms.reserve(4 * n);

  int id = 1;
  for (PauliAxis axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
    for (int j = 1; j <= n; ++j) {
      const int a = j;
      const int b = (j == n) ? 1 : j + 1;
      PauliString ps;
      ps.n = n;
      ps.factors = {{std::min(a, b), axis}, {std::max(a, b), axis}};
      ham.terms.push_back(make_pauli_term(id++, std::move(ps), 1.0));
    }
  }
  Rng64 rng(seed);
  for (int j = 1; j <= n; ++j) {
    PauliString ps;
    ps.n = n;
    ps.factors = {{j, PauliAxis::Z}};
    ham.terms.push_back(make_pauli_term(id++, std::move(ps), rng.next_symmetric(h)));
  }

  ham.lambda_max = 0.0;
  for (const auto& t : ham.terms) ham.lambda_max = std::max(ham.lambda_max, t.norm);
  return ham;
}

ComplexMatrix term_matrix(const HamiltonianTerm& term, int n) {
  if (n > kMaxDenseQubits) throw std::invalid_argument("term_matrix: dimension above dense cap");
  if (term.is_pauli()) {
    const PauliString& ps = term.pauli();
    for (const auto& f : ps.factors) {
      if (f.site > n) throw std::invalid_argument("term_matrix: site index exceeds qubit count");
    }
    ComplexMatrix acc = ComplexMatrix::Identity(1, 1);
    std::size_t next = 0;
    for (int site = 1; site <= n; ++site) {
      ComplexMatrix factor;
      if (next < ps.factors.size() && ps.factors[next].site == site) {
        factor = pauli_matrix(ps.factors[next].axis);
        ++next;
      } else {
        factor = ComplexMatrix::Identity(2, 2);
      }
      ComplexMatrix out(acc.rows() * 2, acc.cols() * 2);
      for (Eigen::Index r = 0; r < acc.rows(); ++r)
        for (Eigen::Index c = 0; c < acc.cols(); ++c)
          out.block(2 * r, 2 * c, 2, 2) = acc(r, c) * factor;
      acc.swap(out);
    }
    return term.coefficient * acc;
  }
  const ComplexMatrix& body = std::get<ComplexMatrix>(term.body);
  if (body.rows() != (Eigen::Index(1) << n)) {
    throw std::invalid_argument("term_matrix: dense body dimension mismatch");
  }
  return term.coefficient * body;
}

ComplexMatrix dense_sum(const Hamiltonian& h) {
  ComplexMatrix acc = ComplexMatrix::Zero(h.dim(), h.dim());
  for (const auto& t : h.terms) acc += term_matrix(t, h.n);
  return acc;
}

ComplexMatrix ideal_evolution(const Hamiltonian& h, double t) {
  if (h.n > kMaxDenseQubits) {
    throw std::invalid_argument("ideal_evolution: dimension above dense cap");
  }
  return herm_exp(dense_sum(h), std::complex<double>(0.0, -t));
}

std::string hamiltonian_to_json(const Hamiltonian& h) {
  char buf[64];
  std::string out = "{";
  out += "\"n\": " + std::to_string(h.n) + ", ";
  std::snprintf(buf, sizeof buf, "%.10g", h.field_strength);
  out += std::string("\"h\": ") + buf + ", ";
  out += "\"seed\": " + std::to_string(h.seed) + ", \"terms\": [";
  for (std::size_t i = 0; i < h.terms.size(); ++i) {
    const auto& t = h.terms[i];
    if (!t.is_pauli()) {
      throw std::invalid_argument("hamiltonian_to_json: only Pauli terms serialize");
    }
    if (i) out += ", ";
    out += "{\"id\": " + std::to_string(t.id) + ", \"kind\": \"pauli\", \"sites\": [";
    const auto& f = t.pauli().factors;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (j) out += ", ";
      out += std::to_string(f[j].site);
    }
    out += "], \"axes\": [";
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (j) out += ", ";
      out += std::string("\"") + axis_char(f[j].axis) + "\"";
    }
    std::snprintf(buf, sizeof buf, "%.10g", t.coefficient);
    out += std::string("], \"coefficient\": ") + buf + "}";
  }
  out += "]}";
  return out;
}

Hamiltonian hamiltonian_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Hamiltonian h;
  h.n = j.at("n").get<int>();
  h.field_strength = j.at("h").get<double>();
  h.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& jt : j.at("terms")) {
    PauliString ps;
    ps.n = h.n;
    const auto& sites = jt.at("sites");
    const auto& axes = jt.at("axes");
    if (sites.size() != axes.size()) {
      throw std::invalid_argument("hamiltonian_from_json: sites/axes length mismatch");
    }
    for (std::size_t i = 0; i < sites.size(); ++i) {
      ps.factors.push_back({sites[i].get<int>(), axis_from_char(axes[i].get<std::string>().at(0))});
    }
    h.terms.push_back(
        make_pauli_term(jt.at("id").get<int>(), std::move(ps), jt.at("coefficient").get<double>()));
  }
  for (const auto& t : h.terms) h.lambda_max = std::max(h.lambda_max, t.norm);
  return h;
}

}  // namespace rpf
