// Builds V_3 in the equitable basis at q = 4, prints the standard rotator and
// Lusztig's T^{-1}, and compares T^{-1} with exp_q(n_z) R.

#include <iostream>

#include "uqsl2/uqsl2.hpp"

using namespace uqsl2;

static void print(const char* name, const Matrix& m) {
  std::cout << name << " (" << m.shape() << ")\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::cout << "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) std::cout << to_string(m(i, j)) << (j + 1 < m.cols() ? "  " : "");
    std::cout << "\n";
  }
}

int main() {
  const auto ctx = QContext::make(4, -2, ThetaMode::SquareIsQ, 0, IdentKind::Primary);
  const Module v3 = equitable_module(3, 1, ctx);

  const Matrix omega = standard_rotator(v3);
  print("Omega", omega);
  const auto cube = scalar_detect(omega * omega * omega);
  std::cout << "Omega^3 = " << (cube ? to_string(*cube) : "not scalar") << " * I\n";

  const Matrix t_inv = lusztig_T_inv(v3);
  print("T^-1", t_inv);
  const Matrix rhs = exp_q(v3[Symbol::n_z], ctx) * frak_r(v3);
  std::cout << "T^-1 == exp_q(nz) R: " << (t_inv == rhs ? "yes" : "no") << "\n";
  return t_inv == rhs ? 0 : 1;
}
