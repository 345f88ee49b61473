#pragma once

#include "smw/counting.hpp"
#include "smw/series.hpp"

#include <vector>

namespace smw {

enum class HeightWeight { None, Linear, Mixed2, Mixed4 };

// prefactor * base^n * n^power * weight(h, n) [* 2^{h/2}] [/ 2^h]
struct AsymptoticForm {
  ModelSpec model;
  Quantity quantity;
  Real prefactor;
  Real base;
  Real power;
  Real gaussian;  // scale g in exp(-g (h+1)^2 / n)
  HeightWeight weight = HeightWeight::None;
  bool half_power_of_two = false;
};

Real x0();                  // (-1 + sqrt 2) / 2
Real sigma();               // sqrt(2) x0 / 9
AsymptoticForm asymptotic_form(const ModelSpec& m, const Quantity& q);
Real asymptotic_value(const AsymptoticForm& f, int n, int h);
Real asymptotic_value(const AsymptoticForm& f, int n);

struct RatioRow {
  int n = 0;
  BigInt exact;
  Real asymptotic;
  Real ratio;
};

std::vector<RatioRow> asymptotic_ratio_scan(CountTable& table, const Quantity& q,
                                            const std::vector<int>& ns);

}  // namespace smw
