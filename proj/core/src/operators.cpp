#include "atomsep/operators.hpp"

#include <stdexcept>

#include "atomsep/couplings.hpp"

namespace atomsep {

namespace {

Operator4 make_sigma_minus(int atom) {
  Operator4 m = Operator4::Zero();
  if (atom == 1) {
    m(0, 2) = 1.0;  // |gg><eg|
    m(1, 3) = 1.0;  // |ge><ee|
  } else {
    m(0, 1) = 1.0;  // |gg><ge|
    m(2, 3) = 1.0;  // |eg><ee|
  }
  return m;
}

int check_atom(int atom) {
  if (atom != 1 && atom != 2) {
    throw std::domain_error("atom index must be 1 or 2");
  }
  return atom;
}

}  // namespace

const Operator4& sigma_minus(int atom) {
  static const Operator4 s1 = make_sigma_minus(1);
  static const Operator4 s2 = make_sigma_minus(2);
  return check_atom(atom) == 1 ? s1 : s2;
}

const Operator4& sigma_plus(int atom) {
  static const Operator4 s1 = make_sigma_minus(1).adjoint();
  static const Operator4 s2 = make_sigma_minus(2).adjoint();
  return check_atom(atom) == 1 ? s1 : s2;
}

Operator4 excitation_number(int atom) {
  return sigma_plus(atom) * sigma_minus(atom);
}

Vec16 vectorize(const Operator4& m) {
  return Eigen::Map<const Vec16>(m.data());
}

Operator4 unvectorize(const Vec16& v) {
  return Eigen::Map<const Operator4>(v.data());
}

SuperOp kron(const Operator4& a, const Operator4& b) {
  SuperOp k;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      k.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
    }
  }
  return k;
}

SuperOp left_mul(const Operator4& a) {
  return kron(Operator4::Identity(), a);
}

SuperOp right_mul(const Operator4& b) {
  return kron(b.transpose(), Operator4::Identity());
}

SuperOp sandwich(const Operator4& a, const Operator4& b) {
  return kron(b.transpose(), a);
}

Operator4 build_hamiltonian(const SystemConfig& config) {
  const CouplingValues c = couplings_for(config);
  Operator4 h = Operator4::Zero();
  h -= config.detuning * (excitation_number(1) + excitation_number(2));
  h += c.omega12 * (sigma_plus(1) * sigma_minus(2) + sigma_plus(2) * sigma_minus(1));
  h += 0.5 * c.rabi1 * (sigma_plus(1) + sigma_minus(1));
  h += 0.5 * c.rabi2 * (sigma_plus(2) + sigma_minus(2));
  return h;
}

}  // namespace atomsep
