#pragma once

// Closed-form chiral moments at beta-dependent level, used as golden values.

#include <cmath>
#include <complex>

namespace golden {

using cplx = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;

inline double F1_dphi(double r, double t, double b, int k) {
  double s = std::sin(k * pi * r);
  return 1 - b * b * t * t * s * s / (k * pi * pi);
}

inline double F1_11_11(double r, double t, double b) {
  double s = std::sin(pi * r);
  return 1 - 2 * b * b * t * t * s * s / (pi * pi) + std::pow(b * t * s, 4) / (2 * std::pow(pi, 4));
}

inline cplx F1_11_2(double r, double t, double b) {
  double s = std::sin(pi * r);
  return cplx(0, -std::pow(b * t / pi, 3) * s * s * s * std::cos(pi * r));
}

inline double F1_2_2(double r, double t, double b) {
  double s = std::sin(2 * pi * r);
  return 1 - b * b * t * t * s * s / (2 * pi * pi);
}

inline cplx delta_z1(double r, double t, double b) {
  double s = std::sin(pi * r), c = std::cos(pi * r);
  cplx bracket = -b * b * t * t * s * s / (pi * pi) + 4 + 4 * c * c + cplx(0, 2 * b * t / pi * std::sin(2 * pi * r));
  return -t * t * b * b / (4 * pi * pi) * s * s * bracket;
}

// F2({1},{1},{},{}; 0,0,a,a) / F2({},{},{},{}; 0,0,a,a)
inline cplx test2_bracket(double r, double t, double b, double a) {
  double s = std::sin(pi * r), c = std::cos(pi * r), h = std::sin(pi * r / 2);
  return -b * b * t * t * s * s / (4 * pi * pi) + cplx(0, b * t * a * h * h * s / pi) + (1 + c) / 2 +
         a * a * std::pow(h, 4);
}

inline double F2_dphi_vac(double r, double t, double b) {
  double c = std::cos(pi * r / 2);
  double s = std::sin(pi * r);
  return c * c - b * b * t * t * s * s / (4 * pi * pi);
}

inline double F2_1111(double r, double t, double b) {
  double s = std::sin(pi * r), c2 = std::cos(2 * pi * r);
  return std::pow(b * t * s, 4) / (16 * std::pow(pi, 4)) + b * b * t * t * s * s * (c2 - 9) / (16 * pi * pi) +
         (c2 + 7) * (c2 + 7) / 64;
}

inline double F2_11_11_11_11(double r, double t, double b) {
  double s = std::sin(pi * r);
  auto C = [&](int m) { return std::cos(m * pi * r); };
  double bt = b * t;
  return std::pow(bt, 8) / (1024 * std::pow(pi, 8)) * std::pow(s, 8) +
         std::pow(bt, 6) / (512 * std::pow(pi, 6)) * std::pow(s, 6) * (C(2) - 17) +
         std::pow(bt, 4) / (4096 * std::pow(pi, 4)) * std::pow(s, 4) * (5 * C(4) - 84 * C(2) + 1359) +
         bt * bt / (8192 * pi * pi) * s * s * (3 * C(6) + 142 * C(4) - 83 * C(2) - 8254) +
         (9 * C(8) + 1080 * C(6) + 4604 * C(4) + 37256 * C(2) + 88123) / 131072;
}

inline double F2_11_2_11_2(double r, double t, double b) {
  double s = std::sin(pi * r), c = std::cos(pi * r), c2 = std::cos(2 * pi * r);
  double bt = b * t, s6 = std::pow(s, 6);
  return -std::pow(bt, 6) * c * c * s6 / (64 * std::pow(pi, 6)) +
         std::pow(bt, 4) * (25 * c2 + 23) * s6 / (1024 * std::pow(pi, 4)) -
         bt * bt * 3 * (7 * c2 + 17) * s6 / (512 * pi * pi) + 3 * (9 * c2 + 71) * s6 / 1024;
}

inline double F2_11_11_2_2(double r, double t, double b) {
  double s = std::sin(pi * r), c = std::cos(pi * r);
  double S = std::sin(pi * r / 2), Ch = std::cos(pi * r / 2);
  auto C = [&](int m) { return std::cos(m * pi * r); };
  double bt = b * t;
  return -std::pow(bt, 6) / (64 * std::pow(pi, 6)) * c * c * std::pow(s, 6) +
         std::pow(bt, 4) / (8 * std::pow(pi, 4)) * std::pow(Ch, 6) * std::pow(S, 4) *
             (-2 * C(3) + 13 * C(2) + 8 * c + 17) -
         bt * bt / (32 * pi * pi) * std::pow(Ch, 6) * S * S * (C(4) - 34 * C(3) + 64 * C(2) - 46 * c + 143) +
         std::pow(Ch, 6) * (25 * C(4) - 118 * C(3) + 376 * C(2) - 778 * c + 623) / 128;
}

inline double F2_11_2_2_11(double r, double t, double b) {
  double s = std::sin(pi * r), c = std::cos(pi * r);
  double S = std::sin(pi * r / 2), Ch = std::cos(pi * r / 2);
  auto C = [&](int m) { return std::cos(m * pi * r); };
  double bt = b * t;
  return -std::pow(bt, 6) / (64 * std::pow(pi, 6)) * c * c * std::pow(s, 6) +
         std::pow(bt, 4) / (8 * std::pow(pi, 4)) * std::pow(Ch, 4) * std::pow(S, 6) *
             (2 * C(3) + 13 * C(2) - 8 * c + 17) -
         bt * bt / (32 * pi * pi) * Ch * Ch * std::pow(S, 6) * (C(4) + 34 * C(3) + 64 * C(2) + 46 * c + 143) +
         std::pow(S, 6) * (25 * C(4) + 118 * C(3) + 376 * C(2) + 778 * c + 623) / 128;
}

inline double F2_2_2_2_2(double r, double t, double b) {
  double s2 = std::sin(2 * pi * r);
  auto C = [&](int m) { return std::cos(m * pi * r); };
  double bt = b * t;
  return std::pow(bt, 4) / (64 * std::pow(pi, 4)) * std::pow(s2, 4) +
         bt * bt / (512 * pi * pi) * s2 * s2 * (9 * C(4) - 4 * C(2) - 133) +
         (81 * C(8) + 56 * C(6) + 1628 * C(4) + 8072 * C(2) + 22931) / 32768;
}

// The two odd forms are printed for beta = 1.
inline cplx F2_11_2_2_2(double r, double t) {
  double s = std::sin(pi * r), c = std::cos(pi * r);
  auto C = [&](int m) { return std::cos(m * pi * r); };
  double v = -std::pow(t * s, 3) * c / (1024 * std::pow(pi, 3)) * (4 * C(2) - 17 * C(4) + 141) +
             std::pow(t * s, 5) * c * c * c / (16 * std::pow(pi, 5)) -
             t * s * s * s / (2048 * pi) * (754 * c + 5 * C(3) + 9 * C(5));
  return cplx(0, v);
}

inline cplx F2_11_11_11_2(double r, double t) {
  double s = std::sin(pi * r), c = std::cos(pi * r);
  auto C = [&](int m) { return std::cos(m * pi * r); };
  double v = -std::pow(t * s, 7) * c / (256 * std::pow(pi, 7)) +
             std::pow(t * s, 5) / (1024 * std::pow(pi, 5)) * (67 * c - 3 * C(3)) -
             std::pow(t * s, 3) / (4096 * std::pow(pi, 3)) * (650 * c - 143 * C(3) + 5 * C(5)) -
             t * s * s * s / (4096 * pi) * (1466 * c + 73 * C(3) - 3 * C(5));
  return cplx(0, v);
}

// Imaginary part read with (1 - theta/pi)^2 (1 + theta/pi)^2; beta = 1 there.
inline cplx delta_z2(double r, double t, double b) {
  double s = std::sin(pi * r), c = std::cos(pi * r);
  auto C = [&](int m) { return std::cos(m * pi * r); };
  double bt = b * t;
  double re = std::pow(bt, 8) / (4096 * std::pow(pi, 8)) * std::pow(s, 8) -
              std::pow(bt, 6) / (2048 * std::pow(pi, 6)) * (41 + 23 * C(2)) * std::pow(s, 6) +
              std::pow(bt, 4) / (16384 * std::pow(pi, 4)) * (3129 + 1460 * C(2) + 19 * C(4)) * std::pow(s, 4) +
              bt * bt / (32768 * pi * pi) * (-24826 - 9417 * C(2) + 1386 * C(4) + 89 * C(6)) * s * s;
  double u = t / pi;
  double br = 3 * std::pow(u, 6) - 89 * std::pow(u, 4) + 681 * u * u +
              std::pow(1 - u, 2) * std::pow(1 + u, 2) * ((68 - 4 * u * u) * C(2) + (u * u + 15) * C(4)) + 1453;
  double im = -t * s * s * s * c / (2048 * pi) * br;
  return {re, im};
}

}  // namespace golden
