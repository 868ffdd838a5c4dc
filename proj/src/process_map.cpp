// Copyright 2026 The ddlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ddlab/process_map.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ddlab/eig.hpp"

namespace ddlab {

namespace {

CMat hermitian_part(const CMat& m) {
  CMat h = m + m.adjoint();
  h *= 0.5;
  return h;
}

}  // namespace

double ChiProcess::hermiticity_residual() const {
  return max_abs_diff(chi, chi.adjoint());
}

double ChiProcess::min_eigenvalue() const {
  return min_eigenvalue_hermitian(hermitian_part(chi));
}

double ChiProcess::tp_residual() const {
  const std::size_t n2 = basis.size();
  CMat acc(basis.dim(), basis.dim());
  for (std::size_t a = 0; a < n2; ++a) {
    for (std::size_t b = 0; b < n2; ++b) {
      const cplx w = chi(a, b);
      if (w == cplx(0, 0)) continue;
      CMat t = basis.element(b).adjoint_times(basis.element(a));
      kernels::active().axpy(acc.data(), w, t.data(), acc.size());
    }
  }
  return max_abs_diff(acc, CMat::identity(basis.dim()));
}

ChiProcess ChiProcess::identity(std::size_t n_qubits) {
  ChiProcess p{OperatorBasis::pauli_basis(n_qubits),
               CMat(std::size_t(1) << (2 * n_qubits), std::size_t(1) << (2 * n_qubits)), 0};
  p.chi(0, 0) = 1;
  return p;
}

bool is_density_matrix(const CMat& rho, double tol) {
  if (!rho.is_square()) return false;
  if (std::abs(rho.trace() - cplx(1, 0)) > tol) return false;
  if (!is_hermitian(rho, tol)) return false;
  return min_eigenvalue_hermitian(rho) > -tol;
}

CMat apply_chi(const ChiProcess& p, const CMat& rho, double tol) {
  if (rho.rows() != p.basis.dim() || rho.cols() != p.basis.dim())
    throw std::invalid_argument("apply_chi: dimension mismatch");
  if (!is_density_matrix(rho, tol))
    throw std::invalid_argument("apply_chi: input is not a density matrix");
  const std::size_t n2 = p.basis.size();
  const std::size_t d = p.basis.dim();
  CMat out(d, d);
  for (std::size_t a = 0; a < n2; ++a) {
    const CMat ta = p.basis.element(a) * rho;
    // acc_b = sum_a chi_ab Ta, applied as acc_b * Kb^dag
    for (std::size_t b = 0; b < n2; ++b) {
      const cplx w = p.chi(a, b);
      if (w == cplx(0, 0)) continue;
      CMat t = ta.times_adjoint(p.basis.element(b));
      kernels::active().axpy(out.data(), w, t.data(), out.size());
    }
  }
  return out;
}

CMat Channel::apply(const CMat& rho) const {
  if (kraus.empty()) throw std::invalid_argument("Channel: no Kraus operators");
  CMat out(rho.rows(), rho.cols());
  for (const auto& k : kraus) {
    CMat t = (k * rho).times_adjoint(k);
    out += t;
  }
  return out;
}

double Channel::completeness_residual() const {
  CMat acc(kraus[0].cols(), kraus[0].cols());
  for (const auto& k : kraus) acc += k.adjoint_times(k);
  return max_abs_diff(acc, CMat::identity(acc.rows()));
}

CMat Channel::superoperator() const {
  // vec(K rho K^dag) = (conj(K) kron K) vec(rho)
  const std::size_t d = kraus[0].rows();
  CMat s(d * d, d * d);
  for (const auto& k : kraus) s += k.conj().kron(k);
  return s;
}

Channel random_cptp_channel(std::size_t n_qubits, std::size_t n_kraus, std::uint64_t seed) {
  const std::size_t d = std::size_t(1) << n_qubits;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<CMat> gs;
  gs.reserve(n_kraus);
  CMat m(d, d);
  for (std::size_t i = 0; i < n_kraus; ++i) {
    CMat g(d, d);
    for (std::size_t j = 0; j < d * d; ++j) g.data()[j] = cplx(gauss(rng), gauss(rng));
    m += g.adjoint_times(g);
    gs.push_back(std::move(g));
  }
  // K_i = G_i m^{-1/2} guarantees sum Ki^dag Ki = I.
  auto ed = eigh(m);
  CMat isqrt(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    const double w = 1.0 / std::sqrt(ed.eigenvalues[a]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        isqrt(i, j) += ed.eigenvectors(i, a) * w * std::conj(ed.eigenvectors(j, a));
  }
  Channel c;
  for (auto& g : gs) c.kraus.push_back(g * isqrt);
  return c;
}

CMat random_density_matrix(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat g(dim, dim);
  for (std::size_t i = 0; i < dim * dim; ++i) g.data()[i] = cplx(gauss(rng), gauss(rng));
  CMat rho = g.times_adjoint(g);
  rho *= cplx(1.0, 0) / rho.trace();
  return rho;
}

namespace {

CVec basis_state(std::size_t d, std::size_t j) {
  CVec v(d);
  v[j] = 1;
  return v;
}

}  // namespace

TomographyResult tomography(const DensityMap& map, const OperatorBasis& basis,
                            const ShotNoise& noise, double time) {
  const std::size_t d = basis.dim();
  CMat s(d * d, d * d);
  auto set_col = [&](std::size_t col, const CMat& out) {
    const CVec v = vec(out);
    for (std::size_t r = 0; r < d * d; ++r) s(r, col) = v[r];
  };
  std::vector<CMat> diag_out(d);
  for (std::size_t j = 0; j < d; ++j) {
    const CVec ej = basis_state(d, j);
    diag_out[j] = map(outer(ej, ej));
    set_col(j + d * j, diag_out[j]);
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) {
      CVec plus(d), yplus(d);
      plus[j] = inv_sqrt2;
      plus[k] = inv_sqrt2;
      yplus[j] = inv_sqrt2;
      yplus[k] = cplx(0, inv_sqrt2);
      const CMat lp = map(outer(plus, plus));
      const CMat ly = map(outer(yplus, yplus));
      // E_jk = P + iY - (1+i)/2 (E_jj + E_kk), and E_kj with i -> -i.
      CMat sum_jk = diag_out[j] + diag_out[k];
      CMat e_jk = lp + cplx(0, 1) * ly - cplx(0.5, 0.5) * sum_jk;
      CMat e_kj = lp - cplx(0, 1) * ly - cplx(0.5, -0.5) * sum_jk;
      set_col(j + d * k, e_jk);
      set_col(k + d * j, e_kj);
    }
  }

  if (noise.sigma > 0) {
    std::mt19937_64 rng(noise.seed);
    std::normal_distribution<double> gauss(0.0, noise.sigma);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double re = gauss(rng), im = gauss(rng);
      s.data()[i] += cplx(re, im);
    }
  }

  TomographyResult result;
  result.superop = s;
  result.process = ChiProcess{basis, chi_of_superop(s, basis), time};
  result.tp_residual = result.process.tp_residual();
  result.trace_preserving = result.tp_residual < 1e-8 + 10 * noise.sigma * d * d;
  return result;
}

TomographyResult tomography(const Channel& c, const OperatorBasis& basis,
                            const ShotNoise& noise, double time) {
  return tomography([&c](const CMat& rho) { return c.apply(rho); }, basis, noise, time);
}

CMat superop_of_chi(const ChiProcess& p) {
  const std::size_t n2 = p.basis.size();
  const std::size_t d = p.basis.dim();
  CMat s(d * d, d * d);
  for (std::size_t a = 0; a < n2; ++a)
    for (std::size_t b = 0; b < n2; ++b) {
      const cplx w = p.chi(a, b);
      if (w == cplx(0, 0)) continue;
      CMat t = p.basis.element(b).conj().kron(p.basis.element(a));
      kernels::active().axpy(s.data(), w, t.data(), s.size());
    }
  return s;
}

CMat choi_of_superop(const CMat& superop, std::size_t d) {
  // C[r*d + r', c*d + c'] = S[r' + d*c', r + d*c]
  CMat c(d * d, d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t rp = 0; rp < d; ++rp)
      for (std::size_t cc = 0; cc < d; ++cc)
        for (std::size_t cp = 0; cp < d; ++cp)
          c(r * d + rp, cc * d + cp) = superop(rp + d * cp, r + d * cc);
  return c;
}

CMat chi_of_superop(const CMat& superop, const OperatorBasis& basis) {
  const std::size_t d = basis.dim();
  if (superop.rows() != d * d || superop.cols() != d * d)
    throw std::invalid_argument("chi_of_superop: dimension mismatch");
  // Guard against a pathological basis (cannot happen for the Pauli basis).
  // chi = W^dag C W / d^2 with W[:,a] = vec(Ka); this is exact inversion
  // because tr(Ka^dag Kb) = d delta_ab.
  const CMat choi = choi_of_superop(superop, d);
  CMat w(d * d, basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const CVec va = vec(basis.element(a));
    for (std::size_t r = 0; r < d * d; ++r) w(r, a) = va[r];
  }
  CMat gram = w.adjoint_times(w);
  if (max_abs_diff(gram, static_cast<cplx>(static_cast<double>(d)) * CMat::identity(basis.size())) > 1e-9)
    throw std::runtime_error("chi_of_superop: singular basis reconstruction");
  CMat chi = w.adjoint_times(choi * w);
  chi *= cplx(1.0 / static_cast<double>(d * d), 0);
  return chi;
}

CMat ShortTimeGenerator::reconstruct() const {
  CMat s(basis.dim(), basis.dim());
  for (std::size_t a = 1; a < basis.size(); ++a)
    kernels::active().axpy(s.data(), cplx(chi_bar[a - 1], 0), basis.element(a).data(),
                           s.size());
  return s;
}

ShortTimeGenerator short_time_generator(const std::function<ChiProcess(double)>& family,
                                        const std::vector<double>& tau_points,
                                        double residual_threshold) {
  if (tau_points.size() < 2)
    throw std::invalid_argument("short_time_generator: need at least 2 tau points");
  for (double t : tau_points)
    if (t <= 0) throw std::invalid_argument("short_time_generator: tau points must be > 0");

  std::vector<ChiProcess> procs;
  procs.reserve(tau_points.size());
  for (double t : tau_points) procs.push_back(family(t));
  const OperatorBasis& basis = procs.front().basis;
  const std::size_t n2 = basis.size();

  ShortTimeGenerator out;
  out.basis = basis;
  out.tau = tau_points.front();
  out.chi_bar.assign(n2 - 1, 0.0);

  double den = 0;
  for (double t : tau_points) den += t * t;
  double max_resid = 0, scale = 0;
  for (std::size_t a = 1; a < n2; ++a) {
    double num = 0;
    for (std::size_t i = 0; i < tau_points.size(); ++i)
      num += tau_points[i] * procs[i].chi(a, 0).imag();
    const double slope = num / den;
    out.chi_bar[a - 1] = slope * out.tau;
    for (std::size_t i = 0; i < tau_points.size(); ++i) {
      const double v = procs[i].chi(a, 0).imag();
      max_resid = std::max(max_resid, std::abs(v - slope * tau_points[i]));
      scale = std::max(scale, std::abs(v));
    }
  }
  out.fit_residual = max_resid;
  out.expansion_valid = scale == 0 || max_resid <= residual_threshold * std::max(scale, 1e-300);
  return out;
}

CommutatorForm commutator_form(const ChiProcess& p) {
  const std::size_t n2 = p.basis.size();
  const std::size_t d = p.basis.dim();
  CommutatorForm f;
  f.s = CMat(d, d);
  for (std::size_t a = 1; a < n2; ++a) {
    // (i/2) (chi_a0 Ka - chi_0a Ka^dag); basis elements are Hermitian.
    const cplx w = cplx(0, 0.5) * (p.chi(a, 0) - p.chi(0, a));
    kernels::active().axpy(f.s.data(), w, p.basis.element(a).data(), f.s.size());
  }
  f.dissipator_block = CMat(n2 - 1, n2 - 1);
  for (std::size_t a = 1; a < n2; ++a)
    for (std::size_t b = 1; b < n2; ++b) f.dissipator_block(a - 1, b - 1) = p.chi(a, b);
  return f;
}

CMat apply_commutator_form(const CommutatorForm& f, const OperatorBasis& basis,
                           const CMat& rho) {
  // rho + (-i)[S, rho] + sum_{a,b>=1} chi_ab (Ka rho Kb^dag - (1/2){Kb^dag Ka, rho})
  CMat out = rho;
  CMat c = commutator(f.s, rho);
  kernels::active().axpy(out.data(), cplx(0, -1), c.data(), out.size());
  const std::size_t n2 = basis.size();
  for (std::size_t a = 1; a < n2; ++a) {
    const CMat ta = basis.element(a) * rho;
    for (std::size_t b = 1; b < n2; ++b) {
      const cplx w = f.dissipator_block(a - 1, b - 1);
      if (w == cplx(0, 0)) continue;
      CMat jump = ta.times_adjoint(basis.element(b));
      CMat kk = basis.element(b).adjoint_times(basis.element(a));
      CMat anti = anticommutator(kk, rho);
      kernels::active().axpy(jump.data(), cplx(-0.5, 0), anti.data(), jump.size());
      kernels::active().axpy(out.data(), w, jump.data(), out.size());
    }
  }
  return out;
}

std::string chi_to_json(const ChiProcess& p) {
  nlohmann::json j;
  j["n_qubits"] = p.basis.n_qubits();
  j["basis"] = "pauli";
  j["time"] = p.time;
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < p.chi.size(); ++i) {
    const cplx v = p.chi.data()[i];
    entries.push_back({v.real(), v.imag()});
  }
  j["chi"] = std::move(entries);
  return j.dump();
}

ChiProcess chi_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("basis").get<std::string>() != "pauli")
    throw std::invalid_argument("chi_from_json: unsupported basis");
  const std::size_t n = j.at("n_qubits").get<std::size_t>();
  ChiProcess p{OperatorBasis::pauli_basis(n), CMat(), j.at("time").get<double>()};
  const std::size_t n2 = p.basis.size();
  const auto& entries = j.at("chi");
  if (entries.size() != n2 * n2) throw std::invalid_argument("chi_from_json: wrong chi size");
  p.chi = CMat(n2, n2);
  for (std::size_t i = 0; i < n2 * n2; ++i)
    p.chi.data()[i] = cplx(entries[i][0].get<double>(), entries[i][1].get<double>());
  return p;
}

}  // namespace ddlab
