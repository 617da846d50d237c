#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qbc {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 14;
// Tolerance for norms and orthogonality checks.
inline constexpr double kNormTol = 1e-10;
// Tolerance for exact algebraic identities (closed-form probabilities etc.).
inline constexpr double kAlgebraTol = 1e-12;

// Exact statevector over n qubits.
//
// Qubit 0 is the leftmost ket symbol, so the basis index is the big-endian
// reading of the bitstring: |q0 q1 ... q_{n-1}> sits at index
// q0*2^{n-1} + q1*2^{n-2} + ... + q_{n-1}.  States are immutable values;
// gates and measurements return new states.
class StateVector {
 public:
  explicit StateVector(int n_qubits);
  StateVector(int n_qubits, std::vector<Amplitude> amps);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
  std::span<const Amplitude> amps() const { return amps_; }

  double norm_sq() const;
  // <this|other>
  Amplitude inner_product(const StateVector& other) const;

  // Bit of `qubit` within basis index i.
  int bit(std::size_t i, int qubit) const {
    return static_cast<int>((i >> (n_qubits_ - 1 - qubit)) & 1u);
  }

  // Throws if any amplitude is non-finite or the norm drifted beyond tol.
  void check_invariants(double tol = kNormTol) const;

  std::vector<Amplitude>& mutable_amps() { return amps_; }

 private:
  int n_qubits_;
  std::vector<Amplitude> amps_;
};

// |bits>, e.g. "010" -> 3-qubit basis state.
StateVector make_basis_state(std::string_view bits);

enum class Gate { I, X, IY, Z, H };

struct GateMatrix {
  Amplitude m[2][2];
};

// IY is i*sigma_y = |0><1| - |1><0|, so IY|0> = -|1> and IY|1> = |0>.
GateMatrix gate_matrix(Gate g);

StateVector apply_gate(const StateVector& state, Gate g, int qubit);
StateVector apply_gate(const StateVector& state, const GateMatrix& u, int qubit);
StateVector apply_cnot(const StateVector& state, int control, int target);

// Applies a dense 2^k x 2^k unitary (row-major) to the listed qubits; the
// first listed qubit is the most significant bit of the local index.
StateVector apply_unitary(const StateVector& state, std::span<const int> qubits,
                          const std::vector<Amplitude>& u);

// a (x) b; b's qubits are renumbered to follow a's.
StateVector tensor(const StateVector& a, const StateVector& b);

// True iff |<a|b>| >= 1 - tol.
bool states_equal_up_to_phase(const StateVector& a, const StateVector& b,
                              double tol = kNormTol);

}  // namespace qbc
