#ifndef FREEJACOBI_SERIES_HPP
#define FREEJACOBI_SERIES_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fj {

using cplx = std::complex<double>;

// Power series c_0 + c_1 z + ... + c_N z^N truncated at a fixed order N.
// Values are immutable once built.
class Series {
 public:
  Series() : c_(1, cplx(0.0)) {}
  explicit Series(std::size_t order) : c_(order + 1, cplx(0.0)) {}
  explicit Series(std::vector<cplx> coeffs);

  static Series constant(cplx c, std::size_t order);
  // The series z (order >= 1).
  static Series identity(std::size_t order);
  // exp(a z) truncated at the given order.
  static Series exponential(cplx a, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const cplx& operator[](std::size_t k) const { return c_[k]; }
  std::span<const cplx> coeffs() const { return c_; }

  Series truncated(std::size_t order) const;
  Series derivative() const;
  cplx evaluate(cplx z) const;

  // Largest |c_k - other_k| over the common range.
  double max_abs_diff(const Series& other) const;

 private:
  std::vector<cplx> c_;
};

// Binary operations produce a result of the smaller order.
Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);
Series operator*(cplx s, const Series& a);

Series reciprocal(const Series& a);
Series compose(const Series& outer, const Series& inner);
Series invert_composition(const Series& f);

enum class Elementary { Exp, Log1p, Sqrt1p, Pow1p };

// exp(a), log(1+a), sqrt(1+a), (1+a)^p. log1p/sqrt1p/pow1p need a_0 = 0.
Series elementary(Elementary f, const Series& a, double p = 1.0);
Series exp(const Series& a);
Series log1p(const Series& a);
Series sqrt1p(const Series& a);
Series pow1p(const Series& a, double p);

}  // namespace fj

#endif
