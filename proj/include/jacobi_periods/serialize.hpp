#pragma once

#include <string>

#include "json.hpp"

#include "jacobi_periods/arith.hpp"
#include "jacobi_periods/fourier.hpp"
#include "jacobi_periods/group_ring.hpp"

namespace jacobi::io {

// Numerators and denominators are JSON integers when they fit in 64 bits,
// decimal strings otherwise. Weight, index and qbound are "p/q" strings.
nlohmann::json rational_pair(const Rational& q);
Rational rational_from_pair(const nlohmann::json& num, const nlohmann::json& den);

// {kind:"jacobi", weight, index, scale, qbound, terms:[[n_scaled, r, num, den], ...]}
nlohmann::json to_json(const fourier::JacobiExpansion& f);
// {kind:"qseries", weight, scale, qbound, terms:[[n_scaled, num, den], ...]}
nlohmann::json to_json(const fourier::QSeries& f);
// Both throw UsageError on malformed input.
fourier::JacobiExpansion jacobi_from_json(const nlohmann::json& j);
fourier::QSeries qseries_from_json(const nlohmann::json& j);

// {max, values:[[N, num, den], ...]} for every N with H(N) != 0.
nlohmann::json to_json(const arith::ClassNumberTable& t);
// Header "N,numerator,denominator", one row per N with H(N) != 0.
std::string to_csv(const arith::ClassNumberTable& t);

// {orbits:[{matrix:[a,b,c,d], det, x, y, coefficient}, ...]}
nlohmann::json to_json(const ring::OrbitVector& v);

}  // namespace jacobi::io
