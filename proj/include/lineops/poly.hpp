#pragma once

// Dense univariate polynomials over Q, lowest degree first.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lineops {

using QPoly = std::vector<mpq_class>;

namespace poly {

void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for the zero polynomial
bool is_monic(const QPoly& p);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& c);
// a = q*b + r, deg r < deg b.  b must be nonzero.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly mod(const QPoly& a, const QPoly& b);
QPoly monic_gcd(QPoly a, QPoly b);
QPoly derivative(const QPoly& a);
mpq_class eval(const QPoly& a, const mpq_class& x);
double eval(const QPoly& a, double x);

// "x^2+x+1", "x^3 - 3/2*x + 5", "2x-1".  Variable name is x.
QPoly parse(std::string_view text);
std::string format(const QPoly& p);

// n-th cyclotomic polynomial, 2 <= n <= 30.
QPoly cyclotomic(int n);
// Minimal polynomial of 2cos(2*pi/n) for n >= 3 (degree phi(n)/2, possibly 1).
QPoly real_cyclotomic(int n);

std::vector<mpq_class> rational_roots(const QPoly& p);
// Real roots in increasing order, double precision.
std::vector<double> real_roots(const QPoly& p);

}  // namespace poly
}  // namespace lineops
