#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cpsdlab/bell.hpp"
#include "cpsdlab/clifford.hpp"
#include "cpsdlab/matcore.hpp"

namespace cpsdlab {

inline constexpr Index kExplicitStateCap = 64;
inline constexpr Index kTraceIdentityCap = 4096;
inline constexpr Index kKronIdentityCap = 32;

/// ±1-valued observables M_x (Alice) and N_y (Bob) of local dimension d acting
/// on either the maximally entangled state (rho unset) or an explicit d^2 x d^2
/// density matrix rho.
struct QuantumRepresentation {
  Index d = 1;
  std::vector<HermMatrix> row_observables;
  std::vector<HermMatrix> col_observables;
  std::optional<HermMatrix> rho;
};

/// Throws InvalidInput unless observables have size d and spectrum in
/// [-1, 1], and rho (when present) is psd with unit trace.
void validate_representation(const QuantumRepresentation& rep);

/// (1/sqrt d) sum_i e_i (x) e_i.
RealVector max_entangled(Index d);
HermMatrix max_entangled_state(Index d);

/// (Psi*(A (x) B) Psi, Tr(A B^T) / d); the first through an explicit
/// Kronecker product, for d <= kKronIdentityCap.
std::pair<double, double> entangled_trace_identity(const HermMatrix& a, const HermMatrix& b);

/// M_x = gamma(u_x), N_y = gamma(v_y)^T on the maximally entangled state.
QuantumRepresentation representation_from_vectors(const std::vector<RealVector>& u,
                                                  const std::vector<RealVector>& v,
                                                  int cap = kDefaultCliffordCap);

enum class SimulationPath {
  Automatic,      // trace identity for the implicit state, explicit otherwise
  TraceIdentity,  // implicit state only, d <= kTraceIdentityCap
  ExplicitState,  // Tr((A (x) B) rho), d <= kExplicitStateCap
};

/// p(ab|xy) = Tr((M_{a|x} (x) N_{b|y}) rho) with M_{a|x} = (I + a M_x)/2.
Behavior simulate_behavior(const QuantumRepresentation& rep,
                           SimulationPath path = SimulationPath::Automatic);

/// c_x = <M_x (x) I>, c_y = <I (x) N_y>, c_xy = <M_x (x) N_y>.
FullCorrelation full_correlation_of(const QuantumRepresentation& rep,
                                    SimulationPath path = SimulationPath::Automatic);

}  // namespace cpsdlab
