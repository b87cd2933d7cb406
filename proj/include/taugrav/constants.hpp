#pragma once

namespace taugrav {

// CODATA-2018 values, SI units throughout the whole library.
struct PhysicalConstants {
  double G;     // gravitational constant, m^3 kg^-1 s^-2
  double c;     // speed of light, m/s
  double hbar;  // reduced Planck constant, J s
  double eps0;  // vacuum permittivity, F/m
  double m_e;   // electron mass, kg
  double q_e;   // electron charge magnitude, C
};

constexpr PhysicalConstants codata2018() {
  return PhysicalConstants{
      6.67430e-11,       // G
      299792458.0,       // c (exact)
      1.054571817e-34,   // hbar
      8.8541878128e-12,  // eps0
      9.1093837015e-31,  // m_e
      1.602176634e-19,   // q_e (exact)
  };
}

}  // namespace taugrav
