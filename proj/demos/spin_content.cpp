// Reads off spin and helicity from exact kernel dimensions, then solves the Dirac
// equation at one momentum and checks a conserved current on the solutions.

#include <iostream>

#include "lubanski/identities.hpp"

using namespace lubanski;

int main() {
  const MomentumSample p({Rational(3), Rational(1), Rational(2), Rational(0)}, Rational(4));
  std::cout << "massive momentum " << p.str() << ", m^2 = " << p.mass_squared() << "\n";
  for (RepKind k : {RepKind::dirac_bispinor, RepKind::vector, RepKind::sym_tensor}) {
    auto rep = std::make_shared<const Representation>(build_representation(k));
    SpinSpectrum s = spin_spectrum(rep, p);
    std::cout << "  " << to_string(k) << ":";
    for (std::size_t i = 0; i < s.multiplicities.size(); ++i)
      if (s.multiplicities[i]) std::cout << "  W^2 = " << s.eigenvalue_candidates[i] << " m^2 (x" << s.multiplicities[i] << ")";
    std::cout << "\n";
  }

  const MomentumSample n({Rational(1), Rational(0), Rational(0), Rational(1)}, Rational(0));
  auto weyl = std::make_shared<const Representation>(build_representation(RepKind::weyl_left));
  for (const auto& e : helicity_scan(weyl, n))
    if (e.kernel_dim) std::cout << "two-spinor helicity at " << n.str() << ": " << e.lambda << "\n";

  LinearSystem dirac = assemble(Family::dirac_gamma, p, Rational(2));
  KernelReport k = kernel_of(dirac);
  std::cout << "Dirac solutions at " << p.str() << ": " << k.kernel_dim << "\n";
  for (const auto& v : k.kernel_basis) std::cout << "  " << v.transpose() << "\n";

  const MomentumSample q({Rational(3), Rational(-1), Rational(-2), Rational(0)}, Rational(4));
  Report current = current_conservation(make_pair(Family::dirac_gamma, p, q, Rational(2)));
  std::cout << "current conserved between " << p.str() << " and " << q.str() << ": " << (current.passed() ? "yes" : "no")
            << "\n";
  return current.passed() ? 0 : 1;
}
