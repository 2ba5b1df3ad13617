#include "cpsdlab/quantum.hpp"

#include <cmath>
#include <string>

#include "cpsdlab/error.hpp"

namespace cpsdlab {
namespace {

constexpr double kSpectrumTol = 1e-9;
constexpr double kTraceTol = 1e-10;
constexpr double kUnitTol = 1e-8;

double real_part(Complex z) {
  if (std::abs(z.imag()) > 1e-9 * std::max(1.0, std::abs(z.real()))) {
    fail(ErrorKind::Numerical, "expectation value has a non-negligible imaginary part");
  }
  return z.real();
}

// T(j, i) = sum_kl B(k, l) rho(j d + l, i d + k), so <A (x) B> = Tr(A T).
ComplexMatrix contract_right(const ComplexMatrix& b, const ComplexMatrix& rho, Index d) {
  ComplexMatrix t = ComplexMatrix::Zero(d, d);
  for (Index j = 0; j < d; ++j) {
    for (Index i = 0; i < d; ++i) {
      Complex s = 0.0;
      for (Index k = 0; k < d; ++k)
        for (Index l = 0; l < d; ++l) s += b(k, l) * rho(j * d + l, i * d + k);
      t(j, i) = s;
    }
  }
  return t;
}

double pair_expectation(const ComplexMatrix& a, const ComplexMatrix& t) {
  return real_part((a.array() * t.transpose().array()).sum());
}

SimulationPath resolve(const QuantumRepresentation& rep, SimulationPath path) {
  if (path == SimulationPath::Automatic) {
    path = rep.rho ? SimulationPath::ExplicitState : SimulationPath::TraceIdentity;
  }
  if (path == SimulationPath::TraceIdentity) {
    require(!rep.rho, "the trace identity applies to the maximally entangled state only");
    if (rep.d > kTraceIdentityCap) {
      fail(ErrorKind::CapExceeded, "local dimension " + std::to_string(rep.d) +
                                       " exceeds the trace-identity cap");
    }
  } else if (rep.d > kExplicitStateCap) {
    fail(ErrorKind::CapExceeded, "local dimension " + std::to_string(rep.d) +
                                     " exceeds the explicit-state cap");
  }
  return path;
}

struct Expectations {
  RealVector cx;
  RealVector cy;
  RealMatrix cxy;
};

Expectations expectations(const QuantumRepresentation& rep, SimulationPath path) {
  validate_representation(rep);
  path = resolve(rep, path);
  const auto m_a = static_cast<Index>(rep.row_observables.size());
  const auto m_b = static_cast<Index>(rep.col_observables.size());
  const Index d = rep.d;
  Expectations e{RealVector(m_a), RealVector(m_b), RealMatrix(m_a, m_b)};

  if (path == SimulationPath::TraceIdentity) {
    // Psi*(A (x) B) Psi = Tr(A B^T) / d = sum_ij A_ij B_ij / d.
    const double inv_d = 1.0 / static_cast<double>(d);
    for (Index x = 0; x < m_a; ++x) e.cx(x) = real_part(rep.row_observables[x].matrix().trace()) * inv_d;
    for (Index y = 0; y < m_b; ++y) e.cy(y) = real_part(rep.col_observables[y].matrix().trace()) * inv_d;
    for (Index x = 0; x < m_a; ++x) {
      for (Index y = 0; y < m_b; ++y) {
        const Complex s = (rep.row_observables[x].matrix().array() *
                           rep.col_observables[y].matrix().array())
                              .sum();
        e.cxy(x, y) = real_part(s) * inv_d;
      }
    }
    return e;
  }

  const ComplexMatrix rho = rep.rho ? rep.rho->matrix() : max_entangled_state(d).matrix();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix t_id = contract_right(id, rho, d);
  std::vector<ComplexMatrix> t_cols;
  t_cols.reserve(static_cast<std::size_t>(m_b));
  for (const auto& n : rep.col_observables) t_cols.push_back(contract_right(n.matrix(), rho, d));

  for (Index x = 0; x < m_a; ++x) e.cx(x) = pair_expectation(rep.row_observables[x].matrix(), t_id);
  for (Index y = 0; y < m_b; ++y) e.cy(y) = pair_expectation(id, t_cols[y]);
  for (Index x = 0; x < m_a; ++x)
    for (Index y = 0; y < m_b; ++y)
      e.cxy(x, y) = pair_expectation(rep.row_observables[x].matrix(), t_cols[y]);
  return e;
}

}  // namespace

void validate_representation(const QuantumRepresentation& rep) {
  require(rep.d >= 1, "representation dimension must be positive");
  require(!rep.row_observables.empty() && !rep.col_observables.empty(),
          "representation needs observables for both parties");
  for (const auto* side : {&rep.row_observables, &rep.col_observables}) {
    for (const auto& m : *side) {
      require(m.size() == rep.d, "observable size does not match the local dimension");
      const SpectralReport s = spectral(m);
      if (s.lambda_min() < -1.0 - kSpectrumTol || s.lambda_max() > 1.0 + kSpectrumTol) {
        fail(ErrorKind::InvalidInput, "observable spectrum leaves [-1, 1]");
      }
    }
  }
  if (rep.rho) {
    require(rep.rho->size() == rep.d * rep.d, "state size must be d^2");
    require(is_psd(*rep.rho), "state is not psd");
    require(std::abs(rep.rho->matrix().trace().real() - 1.0) <= kTraceTol, "state trace is not 1");
  }
}

RealVector max_entangled(Index d) {
  require(d >= 1, "maximally entangled state needs d >= 1");
  RealVector psi = RealVector::Zero(d * d);
  const double w = 1.0 / std::sqrt(static_cast<double>(d));
  for (Index i = 0; i < d; ++i) psi(i * d + i) = w;
  return psi;
}

HermMatrix max_entangled_state(Index d) {
  const RealVector psi = max_entangled(d);
  return HermMatrix(RealMatrix(psi * psi.transpose()));
}

std::pair<double, double> entangled_trace_identity(const HermMatrix& a, const HermMatrix& b) {
  require(a.size() == b.size(), "trace identity needs operators of equal size");
  const Index d = a.size();
  if (d > kKronIdentityCap) {
    fail(ErrorKind::CapExceeded, "explicit Kronecker product beyond d = " +
                                     std::to_string(kKronIdentityCap));
  }
  const ComplexVector psi = max_entangled(d).cast<Complex>();
  const Complex lhs = psi.dot(kron(a.matrix(), b.matrix()) * psi);
  const Complex rhs = (a.matrix() * b.matrix().transpose()).trace() / static_cast<double>(d);
  return {real_part(lhs), real_part(rhs)};
}

QuantumRepresentation representation_from_vectors(const std::vector<RealVector>& u,
                                                  const std::vector<RealVector>& v, int cap) {
  require(!u.empty() && !v.empty(), "representation needs vectors for both parties");
  const Index k = u.front().size();
  for (const auto* side : {&u, &v}) {
    for (const auto& w : *side) {
      require(w.size() == k, "representation vectors have different lengths");
      require(std::abs(w.norm() - 1.0) <= kUnitTol, "representation vectors must have unit norm");
    }
  }
  const CliffordBasis basis = clifford_basis(static_cast<int>(k), cap);
  QuantumRepresentation rep;
  rep.d = basis.d();
  for (const auto& w : u) rep.row_observables.push_back(gamma(basis, w));
  // Bob's observables carry the transpose; gamma(v) is complex in general.
  for (const auto& w : v) rep.col_observables.push_back(gamma(basis, w).transpose());
  return rep;
}

Behavior simulate_behavior(const QuantumRepresentation& rep, SimulationPath path) {
  const Expectations e = expectations(rep, path);
  const auto m_a = static_cast<int>(e.cx.size());
  const auto m_b = static_cast<int>(e.cy.size());
  std::vector<double> table(static_cast<std::size_t>(4 * m_a * m_b));
  // <(I + aM)/2 (x) (I + bN)/2> expanded by linearity.
  for (int ai = 0; ai < 2; ++ai) {
    for (int bi = 0; bi < 2; ++bi) {
      const double a = outcome_sign(ai);
      const double b = outcome_sign(bi);
      for (int x = 0; x < m_a; ++x) {
        for (int y = 0; y < m_b; ++y) {
          double p = (1.0 + a * e.cx(x) + b * e.cy(y) + a * b * e.cxy(x, y)) / 4.0;
          if (p < 0.0 && p > -kProbabilityTol) p = 0.0;
          table[static_cast<std::size_t>(((ai * 2 + bi) * m_a + x) * m_b + y)] = p;
        }
      }
    }
  }
  return Behavior(m_a, m_b, std::move(table));
}

FullCorrelation full_correlation_of(const QuantumRepresentation& rep, SimulationPath path) {
  Expectations e = expectations(rep, path);
  return {std::move(e.cx), std::move(e.cy), std::move(e.cxy)};
}

}  // namespace cpsdlab
