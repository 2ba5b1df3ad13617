#include "cpsdlab/clifford.hpp"

#include <string>

#include "cpsdlab/error.hpp"

namespace cpsdlab {
namespace {

HermMatrix make_pauli(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return HermMatrix(m);
}

HermMatrix word(const std::vector<const HermMatrix*>& letters) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (const HermMatrix* p : letters) out = kron(out, p->matrix());
  return HermMatrix(out);
}

}  // namespace

const HermMatrix& pauli_i() {
  static const HermMatrix m = make_pauli(1.0, 0.0, 0.0, 1.0);
  return m;
}
const HermMatrix& pauli_x() {
  static const HermMatrix m = make_pauli(0.0, 1.0, 1.0, 0.0);
  return m;
}
const HermMatrix& pauli_y() {
  static const HermMatrix m = make_pauli(0.0, Complex(0, -1), Complex(0, 1), 0.0);
  return m;
}
const HermMatrix& pauli_z() {
  static const HermMatrix m = make_pauli(1.0, 0.0, 0.0, -1.0);
  return m;
}

Index clifford_dimension(int n) {
  require(n >= 1, "Clifford map needs a source dimension >= 1");
  if (n == 1) return 2;
  return Index{1} << (n / 2);
}

CliffordBasis clifford_basis(int n, int cap) {
  require(n >= 1, "Clifford map needs a source dimension >= 1");
  if (n > cap) {
    fail(ErrorKind::CapExceeded, "Clifford dimension " + std::to_string(n) +
                                     " exceeds the size cap " + std::to_string(cap));
  }
  if (n == 1) {
    // A 1x1 generator cannot be traceless; use X from the n = 2 basis.
    return CliffordBasis(2, {pauli_x()});
  }
  const int half = n / 2;
  std::vector<HermMatrix> gens;
  gens.reserve(static_cast<std::size_t>(n));
  for (const HermMatrix* middle : {&pauli_x(), &pauli_y()}) {
    for (int i = 1; i <= half; ++i) {
      std::vector<const HermMatrix*> letters;
      for (int k = 1; k < i; ++k) letters.push_back(&pauli_z());
      letters.push_back(middle);
      for (int k = i; k < half; ++k) letters.push_back(&pauli_i());
      gens.push_back(word(letters));
    }
  }
  if (n % 2 == 1) {
    gens.push_back(word(std::vector<const HermMatrix*>(static_cast<std::size_t>(half), &pauli_z())));
  }
  return CliffordBasis(clifford_dimension(n), std::move(gens));
}

HermMatrix gamma(const CliffordBasis& basis, const RealVector& x) {
  require(x.size() == basis.n(), "gamma: vector length does not match the Clifford basis");
  ComplexMatrix out = ComplexMatrix::Zero(basis.d(), basis.d());
  for (int i = 0; i < basis.n(); ++i) {
    if (x(i) != 0.0) out += x(i) * basis.generator(i).matrix();
  }
  return HermMatrix(out);
}

}  // namespace cpsdlab
