#include "qes/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qes/error.hpp"

namespace qes {

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows) : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionMismatch("DenseMatrix: rows must form a square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

double DenseMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

DenseMatrix to_float(const RationalMatrix& m) {
  DenseMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const double x = m(i, j).to_double();
      if (!std::isfinite(x)) throw Error("to_float: entry " + m(i, j).str() + " is not representable");
      out(i, j) = x;
    }
  return out;
}

DenseMatrix to_float(const OperatorMatrix& m) { return to_float(m.entries); }

std::complex<double> Spectrum::sum() const {
  std::complex<double> s = 0.0;
  for (auto z : eigenvalues) s += z;
  return s;
}

std::complex<double> Spectrum::product() const {
  std::complex<double> p = 1.0;
  for (auto z : eigenvalues) p *= z;
  return p;
}

namespace {

// One-based square work array, as in the classic EISPACK formulations.
class Work {
 public:
  explicit Work(const DenseMatrix& m) : n_(m.dim()), a_((n_ + 1) * (n_ + 1), 0.0) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) (*this)(static_cast<int>(i + 1), static_cast<int>(j + 1)) = m(i, j);
  }
  int n() const { return static_cast<int>(n_); }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * (n_ + 1) + static_cast<std::size_t>(j)]; }

 private:
  std::size_t n_;
  std::vector<double> a_;
};

double sign_of(double magnitude, double s) { return s >= 0.0 ? std::fabs(magnitude) : -std::fabs(magnitude); }

void balance(Work& a) {
  constexpr double radix = 2.0;
  constexpr double sqrdx = radix * radix;
  const int n = a.n();
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 1; i <= n; ++i) {
      double r = 0.0, c = 0.0;
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        c += std::fabs(a(j, i));
        r += std::fabs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        g = 1.0 / f;
        for (int j = 1; j <= n; ++j) a(i, j) *= g;
        for (int j = 1; j <= n; ++j) a(j, i) *= f;
      }
    }
  }
}

void hessenberg(Work& h) {
  const int n = h.n();
  std::vector<double> ort(static_cast<std::size_t>(n) + 1, 0.0);
  for (int m = 2; m <= n - 1; ++m) {
    double scale = 0.0;
    for (int i = m; i <= n; ++i) scale += std::fabs(h(i, m - 1));
    if (scale == 0.0) continue;
    double hh = 0.0;
    for (int i = n; i >= m; --i) {
      ort[i] = h(i, m - 1) / scale;
      hh += ort[i] * ort[i];
    }
    double g = std::sqrt(hh);
    if (ort[m] > 0) g = -g;
    hh -= ort[m] * g;
    ort[m] -= g;
    for (int j = m; j <= n; ++j) {
      double f = 0.0;
      for (int i = n; i >= m; --i) f += ort[i] * h(i, j);
      f /= hh;
      for (int i = m; i <= n; ++i) h(i, j) -= f * ort[i];
    }
    for (int i = 1; i <= n; ++i) {
      double f = 0.0;
      for (int j = n; j >= m; --j) f += ort[j] * h(i, j);
      f /= hh;
      for (int j = m; j <= n; ++j) h(i, j) -= f * ort[j];
    }
    h(m, m - 1) = scale * g;
    for (int i = m + 1; i <= n; ++i) h(i, m - 1) = 0.0;
  }
}

}  // namespace

Spectrum eigenvalues(const DenseMatrix& m) {
  const int n = static_cast<int>(m.dim());
  if (n == 0) throw DimensionMismatch("eigenvalues: empty matrix");
  for (double x : m.data())
    if (!std::isfinite(x)) throw Error("eigenvalues: non-finite entry");

  Work a(m);
  balance(a);
  hessenberg(a);

  std::vector<double> wr(static_cast<std::size_t>(n) + 1, 0.0), wi(static_cast<std::size_t>(n) + 1, 0.0);
  double anorm = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::fabs(a(i, j));

  const std::size_t budget = kIterationsPerDim * static_cast<std::size_t>(n);
  std::size_t total = 0;
  double dropped = 0.0;
  int nn = n;
  double t = 0.0;
  while (nn >= 1) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l >= 2; --l) {
        double s = std::fabs(a(l - 1, l - 1)) + std::fabs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::fabs(a(l, l - 1)) <= kDeflationTolerance * s) {
          dropped = std::max(dropped, std::fabs(a(l, l - 1)));
          a(l, l - 1) = 0.0;
          break;
        }
      }
      double x = a(nn, nn);
      if (l == nn) {
        wr[nn] = x + t;
        wi[nn] = 0.0;
        --nn;
      } else {
        double y = a(nn - 1, nn - 1);
        double w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          const double p = 0.5 * (y - x);
          const double q = p * p + w;
          double z = std::sqrt(std::fabs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign_of(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (z != 0.0) wr[nn] = x - w / z;
            wi[nn - 1] = wi[nn] = 0.0;
          } else {
            wr[nn - 1] = wr[nn] = x + p;
            wi[nn - 1] = -z;
            wi[nn] = z;
          }
          nn -= 2;
        } else {
          if (total >= budget) throw NoConvergence("eigenvalues: iteration cap reached");
          if (its > 0 && its % 10 == 0) {
            // Exceptional shift.
            t += x;
            for (int i = 1; i <= nn; ++i) a(i, i) -= x;
            const double s = std::fabs(a(nn, nn - 1)) + std::fabs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          ++total;
          int mm = nn - 2;
          double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
          for (; mm >= l; --mm) {
            z = a(mm, mm);
            r = x - z;
            double s = y - z;
            p = (r * s - w) / a(mm + 1, mm) + a(mm, mm + 1);
            q = a(mm + 1, mm + 1) - z - r - s;
            r = a(mm + 2, mm + 1);
            s = std::fabs(p) + std::fabs(q) + std::fabs(r);
            p /= s;
            q /= s;
            r /= s;
            if (mm == l) break;
            const double u = std::fabs(a(mm, mm - 1)) * (std::fabs(q) + std::fabs(r));
            const double v = std::fabs(p) * (std::fabs(a(mm - 1, mm - 1)) + std::fabs(z) + std::fabs(a(mm + 1, mm + 1)));
            if (u <= kDeflationTolerance * v) break;
          }
          for (int i = mm + 2; i <= nn; ++i) {
            a(i, i - 2) = 0.0;
            if (i != mm + 2) a(i, i - 3) = 0.0;
          }
          for (int k = mm; k <= nn - 1; ++k) {
            if (k != mm) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0.0;
              if (k != nn - 1) r = a(k + 2, k - 1);
              x = std::fabs(p) + std::fabs(q) + std::fabs(r);
              if (x != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == mm) {
              if (l != mm) a(k, k - 1) = -a(k, k - 1);
            } else {
              a(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {
              p = a(k, j) + q * a(k + 1, j);
              if (k != nn - 1) {
                p += r * a(k + 2, j);
                a(k + 2, j) -= p * z;
              }
              a(k + 1, j) -= p * y;
              a(k, j) -= p * x;
            }
            const int mmin = std::min(nn, k + 3);
            for (int i = l; i <= mmin; ++i) {
              p = x * a(i, k) + y * a(i, k + 1);
              if (k != nn - 1) {
                p += z * a(i, k + 2);
                a(i, k + 2) -= p * r;
              }
              a(i, k + 1) -= p * q;
              a(i, k) -= p;
            }
          }
        }
      }
    } while (l < nn - 1);
  }

  Spectrum out;
  out.eigenvalues.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.eigenvalues.emplace_back(wr[i], wi[i]);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), [](const auto& l, const auto& r) {
    if (l.real() != r.real()) return l.real() < r.real();
    return l.imag() < r.imag();
  });
  const double norm = m.frobenius_norm();
  out.report.iterations = total;
  out.report.residual_bound = std::max(dropped, kDeflationTolerance * anorm);
  out.report.trace_error = std::abs(out.sum() - m.trace()) / std::max(1.0, norm);
  return out;
}

namespace {

using cplx = std::complex<double>;

// Solves (m - shift I) x = rhs in place of rhs by LU with partial pivoting;
// pivots below floor are replaced by floor.
class ShiftedLu {
 public:
  ShiftedLu(const DenseMatrix& m, cplx shift, double floor) : n_(m.dim()), lu_(n_ * n_), piv_(n_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) lu_[i * n_ + j] = m(i, j) - (i == j ? shift : 0.0);
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n_; ++i)
        if (std::abs(at(i, k)) > std::abs(at(p, k))) p = i;
      piv_[k] = p;
      if (p != k)
        for (std::size_t j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
      if (std::abs(at(k, k)) < floor) at(k, k) = floor;
      for (std::size_t i = k + 1; i < n_; ++i) {
        at(i, k) /= at(k, k);
        for (std::size_t j = k + 1; j < n_; ++j) at(i, j) -= at(i, k) * at(k, j);
      }
    }
  }

  void solve(std::vector<cplx>& b) const {
    for (std::size_t k = 0; k < n_; ++k) {
      std::swap(b[k], b[piv_[k]]);
      for (std::size_t i = k + 1; i < n_; ++i) b[i] -= at(i, k) * b[k];
    }
    for (std::size_t k = n_; k-- > 0;) {
      for (std::size_t j = k + 1; j < n_; ++j) b[k] -= at(k, j) * b[j];
      b[k] /= at(k, k);
    }
  }

 private:
  cplx& at(std::size_t i, std::size_t j) { return lu_[i * n_ + j]; }
  const cplx& at(std::size_t i, std::size_t j) const { return lu_[i * n_ + j]; }

  std::size_t n_;
  std::vector<cplx> lu_;
  std::vector<std::size_t> piv_;
};

double normalize(std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  s = std::sqrt(s);
  if (s > 0.0)
    for (auto& x : v) x /= s;
  return s;
}

double residual(const DenseMatrix& m, const std::vector<cplx>& v, cplx lambda) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    cplx r = -lambda * v[i];
    for (std::size_t j = 0; j < m.dim(); ++j) r += m(i, j) * v[j];
    s += std::norm(r);
  }
  return std::sqrt(s);
}

}  // namespace

std::vector<std::complex<double>> eigenvector(const DenseMatrix& m, std::complex<double> lambda) {
  const std::size_t n = m.dim();
  if (n == 0) throw DimensionMismatch("eigenvector: empty matrix");
  const double norm = m.frobenius_norm();
  const double scale = std::max(norm, std::abs(lambda));
  const double floor = std::max(scale, 1.0) * 1e-15;
  const double target = 1e-8 * norm;

  std::mt19937 rng(20021);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& x : v) x = dist(rng);
  normalize(v);

  const ShiftedLu lu(m, lambda, floor);
  for (int it = 0; it < 50; ++it) {
    lu.solve(v);
    if (normalize(v) == 0.0 || !std::isfinite(std::abs(v[0]))) break;
    if (residual(m, v, lambda) <= target) {
      std::size_t big = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (std::abs(v[i]) > std::abs(v[big]) * (1.0 + 1e-12)) big = i;
      const cplx phase = std::abs(v[big]) > 0.0 ? std::conj(v[big]) / std::abs(v[big]) : cplx(1.0);
      for (auto& x : v) x *= phase;
      v[big] = std::abs(v[big]);
      return v;
    }
  }
  throw NoConvergence("eigenvector: inverse iteration did not reach the residual target");
}

bool conjugate_paired(const Spectrum& s, double tol) {
  const auto& ev = s.eigenvalues;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const double im = ev[i].imag();
    if (std::fabs(im) <= tol * (1.0 + std::abs(ev[i]))) continue;
    if (im < 0.0) {
      if (i + 1 >= ev.size()) return false;
      const auto& next = ev[i + 1];
      const double slack = tol * (1.0 + std::abs(ev[i]));
      if (std::fabs(next.real() - ev[i].real()) > slack || std::fabs(next.imag() + im) > slack) return false;
      ++i;
    } else {
      return false;
    }
  }
  return true;
}

}  // namespace qes
