#include "polycommute/roots.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "polycommute/gaussian.hpp"

namespace polycommute {

namespace {

struct Complex {
  BigFloat re;
  BigFloat im;
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  const BigFloat n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
BigFloat modulus(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }
bool is_null(const Complex& a) { return a.re == 0 && a.im == 0; }

// value and first derivative by Horner
std::pair<Complex, Complex> eval_with_derivative(const std::vector<Complex>& c, const Complex& z) {
  Complex p = c.back();
  Complex d{0, 0};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    d = d * z + p;
    p = p * z + c[k];
  }
  return {p, d};
}

std::vector<Complex> derivative(const std::vector<Complex>& c) {
  std::vector<Complex> d;
  for (std::size_t k = 1; k < c.size(); ++k) {
    d.push_back(Complex{c[k].re * static_cast<long>(k), c[k].im * static_cast<long>(k)});
  }
  return d;
}

std::vector<Complex> aberth(const std::vector<Complex>& c) {
  const std::size_t n = c.size() - 1;
  const BigFloat lead = modulus(c.back());
  BigFloat radius = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const BigFloat ratio = modulus(c[k]) / lead;
    if (ratio == 0) continue;
    radius = std::max(radius, BigFloat(pow(ratio, BigFloat(1) / BigFloat(n - k))));
  }
  radius = radius == 0 ? BigFloat(1) : radius * 2;

  const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const BigFloat angle = two_pi * k / n + BigFloat("0.4");
    z[k] = {radius * cos(angle), radius * sin(angle)};
  }

  const BigFloat tolerance("1e-72");
  for (int iteration = 0; iteration < 5000; ++iteration) {
    BigFloat largest = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto [p, d] = eval_with_derivative(c, z[k]);
      if (is_null(p)) continue;
      Complex sum{0, 0};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        const Complex diff = z[k] - z[j];
        if (!is_null(diff)) sum = sum + Complex{1, 0} / diff;
      }
      Complex ratio = is_null(d) ? Complex{0, 0} : p / d;
      Complex denom = Complex{1, 0} - ratio * sum;
      Complex step = (is_null(d) || is_null(denom)) ? Complex{BigFloat("1e-20"), 0} : ratio / denom;
      z[k] = z[k] - step;
      largest = std::max(largest, modulus(step) / (1 + modulus(z[k])));
    }
    if (largest < tolerance) break;
  }
  return z;
}

Complex newton_polish(const std::vector<Complex>& c, Complex z) {
  if (c.size() < 2) return z;
  for (int i = 0; i < 200; ++i) {
    const auto [p, d] = eval_with_derivative(c, z);
    if (is_null(p) || is_null(d)) break;
    const Complex step = p / d;
    z = z - step;
    if (modulus(step) <= BigFloat("1e-75") * (1 + modulus(z))) break;
  }
  return z;
}

using Dense = std::vector<Scalar>;

void trim(Dense& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

/// Quotient and remainder of dense polynomials, b nonzero.
std::pair<Dense, Dense> divide(Dense a, const Dense& b) {
  trim(a);
  if (a.size() < b.size()) return {Dense{}, a};
  Dense quotient(a.size() - b.size() + 1, Scalar());
  const Scalar inverse = b.back().inverse();
  for (std::size_t shift = quotient.size(); shift-- > 0;) {
    const Scalar factor = a[shift + b.size() - 1] * inverse;
    quotient[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = a[shift + j] - factor * b[j];
  }
  a.resize(b.size() - 1);
  trim(a);
  return {quotient, a};
}

/// p / gcd(p, p'), which has the same roots as p, each simple.
UniPoly squarefree_part(const UniPoly& p) {
  const Dense dense = p.coefficients();
  Dense a = dense;
  Dense b = p.derivative().coefficients();
  while (!b.empty()) {
    Dense r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return UniPoly::from_coefficients(divide(dense, a).first);
}

mpz_class to_mpz(const BigFloat& integral) {
  return mpz_class(static_cast<boost::multiprecision::cpp_int>(integral).str());
}

}  // namespace

UniPoly deflate(const UniPoly& poly, const Scalar& root) {
  const auto dense = poly.coefficients();
  if (dense.size() < 2) return UniPoly();
  std::vector<Scalar> quotient(dense.size() - 1);
  Scalar carry = dense.back();
  for (std::size_t k = dense.size() - 1; k-- > 0;) {
    quotient[k] = carry;
    carry = carry * root + dense[k];
  }
  return UniPoly::from_coefficients(quotient);
}

std::vector<RootMultiplicity> gaussian_rational_roots(const UniPoly& poly) {
  if (poly.is_zero()) throw PreconditionError("the zero polynomial has no root profile");
  if (poly.poly().backend() != Backend::exact) throw BackendMismatch("exact root finding needs exact coefficients");

  std::vector<RootMultiplicity> roots;
  UniPoly current = poly;
  unsigned zero_mult = 0;
  while (current.coefficient(0).is_zero() && current.degree() > Degree(0)) {
    current = deflate(current, Scalar());
    ++zero_mult;
  }
  if (zero_mult != 0) roots.push_back({Scalar(), zero_mult});
  if (current.degree() == Degree(0)) return roots;

  // clear denominators
  const auto dense = current.coefficients();
  mpz_class common = 1;
  for (const auto& a : dense) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), a.real().get_den_mpz_t());
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), a.imag().get_den_mpz_t());
  }
  auto to_gaussian = [&](const Scalar& a) {
    const mpq_class re = a.real() * common;
    const mpq_class im = a.imag() * common;
    return GaussianInt{re.get_num(), im.get_num()};
  };
  const auto denominators = divisors_up_to_units(to_gaussian(dense.back()));

  // A root u/v in lowest terms has v dividing the leading coefficient, so
  // u is the Gaussian integer nearest to v times a numeric approximation.
  // Each pass deflates what it finds; clustered approximations are
  // resolved by the next pass.
  bool found = true;
  while (found && current.degree() > Degree(0)) {
    found = false;
    for (const auto& approximation : numeric_roots(squarefree_part(current), default_epsilon())) {
      const BigFloat re = approximation.root.float_real();
      const BigFloat im = approximation.root.float_imag();
      for (const auto& v : denominators) {
        const BigFloat vre(v.re.get_str()), vim(v.im.get_str());
        const BigFloat ure = round(vre * re - vim * im);
        const BigFloat uim = round(vre * im + vim * re);
        const Scalar candidate = Scalar(mpq_class(to_mpz(ure)), mpq_class(to_mpz(uim))) /
                                 Scalar(mpq_class(v.re), mpq_class(v.im));
        unsigned multiplicity = 0;
        while (current.degree() > Degree(0) && current(candidate).is_zero()) {
          current = deflate(current, candidate);
          ++multiplicity;
        }
        if (multiplicity == 0) continue;
        found = true;
        auto same = std::find_if(roots.begin(), roots.end(), [&](const auto& r) { return r.root == candidate; });
        if (same == roots.end()) {
          roots.push_back({candidate, multiplicity});
        } else {
          same->multiplicity += multiplicity;
        }
        break;
      }
      if (current.degree() == Degree(0)) break;
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return compare_canonical(a.root, b.root) < 0; });
  return roots;
}

std::vector<RootMultiplicity> numeric_roots(const UniPoly& poly, const BigFloat& eps) {
  if (poly.is_zero()) throw PreconditionError("the zero polynomial has no root profile");
  const auto dense = poly.coefficients();
  std::vector<Complex> c;
  c.reserve(dense.size());
  for (const auto& a : dense) c.push_back({a.float_real(), a.float_imag()});

  std::vector<RootMultiplicity> result;
  if (c.size() < 2) return result;
  const std::vector<Complex> z = aberth(c);

  // greedy clustering of nearby approximations
  std::vector<bool> used(z.size(), false);
  const BigFloat cluster_radius("1e-9");
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> members{i};
    used[i] = true;
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      if (!used[j] && modulus(z[j] - z[i]) <= cluster_radius * (1 + modulus(z[i]))) {
        members.push_back(j);
        used[j] = true;
      }
    }
    Complex center{0, 0};
    for (auto m : members) center = center + z[m];
    center = Complex{center.re / members.size(), center.im / members.size()};
    std::vector<Complex> target = c;
    for (std::size_t k = 1; k < members.size(); ++k) target = derivative(target);
    center = newton_polish(target, center);
    result.push_back({Scalar::floating(center.re, center.im, eps),
                      static_cast<unsigned>(members.size())});
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return compare_canonical(a.root, b.root) < 0; });
  return result;
}

}  // namespace polycommute
