#include "framescope/windows.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <unsupported/Eigen/Polynomials>

#include "framescope/errors.hpp"

namespace framescope {

namespace {

using std::numbers::pi;

constexpr double kCoverTolerance = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double horner(const std::vector<double>& poly, double x) {
  double acc = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<double> derivative(const std::vector<double>& poly) {
  if (poly.size() <= 1) return {};
  std::vector<double> out(poly.size() - 1);
  for (std::size_t j = 1; j < poly.size(); ++j) out[j - 1] = static_cast<double>(j) * poly[j];
  return out;
}

// All derivatives p, p', p'', ... until the zero polynomial.
std::vector<std::vector<double>> derivative_chain(const std::vector<double>& poly) {
  std::vector<std::vector<double>> chain;
  for (auto p = poly; !p.empty(); p = derivative(p)) chain.push_back(p);
  return chain;
}

std::vector<double> trimmed(std::vector<double> poly) {
  while (!poly.empty() && poly.back() == 0.0) poly.pop_back();
  return poly;
}

cplx trig_value(const TrigPoly& t, double x) {
  cplx acc = 0.0;
  for (const auto& [n, b] : t.coeffs) acc += b * cis_pi(2.0 * n * x);
  return acc;
}

cplx trig_derivative(const TrigPoly& t, double x, int order) {
  cplx acc = 0.0;
  for (const auto& [n, b] : t.coeffs) {
    cplx factor = std::pow(cplx(0.0, 2.0 * pi * n), order);
    acc += factor * b * cis_pi(2.0 * n * x);
  }
  return acc;
}

int trig_degree(const TrigPoly& t) {
  int d = 0;
  for (const auto& [n, b] : t.coeffs) d = std::max(d, std::abs(n));
  return d;
}

// Extremes of a real trig polynomial: dense grid plus safeguarded Newton on g'.
IntervalHull trig_real_hull(const TrigPoly& t) {
  if (t.coeffs.empty()) return {0.0, 0.0};
  const int degree = trig_degree(t);
  const double step = 1.0 / (64.0 * (degree + 1));
  const auto count = static_cast<std::size_t>(std::ceil(1.0 / step));
  const double h = 1.0 / static_cast<double>(count);

  auto g = [&](double x) { return trig_value(t, x).real(); };
  auto dg = [&](double x) { return trig_derivative(t, x, 1).real(); };
  auto d2g = [&](double x) { return trig_derivative(t, x, 2).real(); };

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  auto consider = [&](double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  };

  double x0 = -0.5;
  double d0 = dg(x0);
  consider(g(x0));
  for (std::size_t j = 1; j <= count; ++j) {
    const double x1 = -0.5 + static_cast<double>(j) * h;
    const double d1 = dg(x1);
    consider(g(x1));
    if (d0 == 0.0 || d0 * d1 < 0.0) {
      double left = x0, right = x1, fl = d0;
      double x = 0.5 * (left + right);
      for (int it = 0; it < 60; ++it) {
        const double fx = dg(x);
        if (fx == 0.0) break;
        if ((fx < 0.0) == (fl < 0.0)) {
          left = x;
          fl = fx;
        } else {
          right = x;
        }
        const double curv = d2g(x);
        double next = curv != 0.0 ? x - fx / curv : 0.5 * (left + right);
        if (!(next > left && next < right)) next = 0.5 * (left + right);
        if (std::abs(next - x) < 1e-16) {
          x = next;
          break;
        }
        x = next;
      }
      consider(g(x));
    }
    x0 = x1;
    d0 = d1;
  }
  return {lo, hi};
}

// Extremes of each polynomial piece from endpoint values and critical points.
IntervalHull piecewise_real_hull(const PiecewisePoly& pw) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  auto consider = [&](double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  };
  for (const auto& piece : pw.pieces) {
    if (!(piece.b > piece.a)) continue;  // null set
    consider(horner(piece.poly, piece.a));
    consider(horner(piece.poly, piece.b));
    const auto dp = trimmed(derivative(piece.poly));
    if (dp.size() == 2) {
      const double root = -dp[0] / dp[1];
      if (root > piece.a && root < piece.b) consider(horner(piece.poly, root));
    } else if (dp.size() > 2) {
      Eigen::VectorXd c(static_cast<Eigen::Index>(dp.size()));
      for (std::size_t j = 0; j < dp.size(); ++j) c(static_cast<Eigen::Index>(j)) = dp[j];
      Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(c);
      // Any point of [a, b] is a valid candidate, so near-real roots are kept.
      for (const auto& root : solver.roots()) {
        double x = root.real();
        if (!(x >= piece.a && x <= piece.b)) continue;
        const auto d2p = derivative(dp);
        for (int it = 0; it < 8; ++it) {
          const double curv = horner(d2p, x);
          if (curv == 0.0) break;
          const double next = x - horner(dp, x) / curv;
          if (!(next >= piece.a && next <= piece.b)) break;
          x = next;
        }
        consider(horner(piece.poly, x));
      }
    }
  }
  if (lo > hi) return {0.0, 0.0};
  return {lo, hi};
}

// Golden-section refinement of a local maximum of f on [a, b].
template <class F>
double golden_max(F f, double a, double b) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 80 && (b - a) > 1e-15; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return std::max({fc, fd, f(a), f(b)});
}

double trig_sup_norm(const TrigPoly& t) {
  if (t.coeffs.empty()) return 0.0;
  const int degree = trig_degree(t);
  const auto count = static_cast<std::size_t>(64 * (degree + 1));
  const double h = 1.0 / static_cast<double>(count);
  auto mod2 = [&](double x) { return std::norm(trig_value(t, x)); };
  std::vector<double> values(count);
  for (std::size_t j = 0; j < count; ++j) values[j] = mod2(-0.5 + static_cast<double>(j) * h);
  double best = 0.0;
  for (std::size_t j = 0; j < count; ++j) {
    const double prev = values[(j + count - 1) % count];
    const double next = values[(j + 1) % count];
    best = std::max(best, values[j]);
    if (values[j] >= prev && values[j] >= next) {
      const double x = -0.5 + static_cast<double>(j) * h;
      best = std::max(best, golden_max(mod2, x - h, x + h));
    }
  }
  return std::sqrt(best);
}

bool trig_is_real(const TrigPoly& t) {
  double scale = 0.0;
  for (const auto& [n, b] : t.coeffs) scale = std::max(scale, std::abs(b));
  const double tol = 1e-14 * std::max(scale, 1.0);
  for (const auto& [n, b] : t.coeffs) {
    auto it = t.coeffs.find(-n);
    const cplx mirror = it == t.coeffs.end() ? cplx(0.0) : it->second;
    if (std::abs(mirror - std::conj(b)) > tol) return false;
  }
  return true;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(Errc::InvalidWindow, std::string(what) + " must be finite");
}

cplx piecewise_coeff(const PiecewisePoly& pw, std::int64_t n) {
  if (n == 0) {
    double acc = 0.0;
    for (const auto& piece : pw.pieces) {
      double pa = piece.a, pb = piece.b;
      for (std::size_t j = 0; j < piece.poly.size(); ++j) {
        acc += piece.poly[j] * (pb - pa) / static_cast<double>(j + 1);
        pa *= piece.a;
        pb *= piece.b;
      }
    }
    return acc;
  }
  // ∫_a^b p(x) e^{ωx} dx = [e^{ωx} Σ_k (-1)^k p^{(k)}(x) / ω^{k+1}]_a^b, ω = -2πin.
  const cplx omega(0.0, -2.0 * pi * static_cast<double>(n));
  cplx total = 0.0;
  for (const auto& piece : pw.pieces) {
    if (!(piece.b > piece.a)) continue;
    const auto chain = derivative_chain(piece.poly);
    cplx at_a = 0.0, at_b = 0.0;
    cplx inv_pow = 1.0 / omega;
    double sign = 1.0;
    for (const auto& dk : chain) {
      at_a += sign * horner(dk, piece.a) * inv_pow;
      at_b += sign * horner(dk, piece.b) * inv_pow;
      inv_pow /= omega;
      sign = -sign;
    }
    total += cis_pi(-2.0 * static_cast<double>(n) * piece.b) * at_b -
             cis_pi(-2.0 * static_cast<double>(n) * piece.a) * at_a;
  }
  return total;
}

// D_k = Σ over breakpoints (periodic wrap included) of |jump in p^{(k)}|.
std::vector<double> piecewise_jump_sums(const PiecewisePoly& pw) {
  std::size_t depth = 0;
  for (const auto& piece : pw.pieces) depth = std::max(depth, piece.poly.size());
  std::vector<double> sums(depth, 0.0);
  const auto count = pw.pieces.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto& left = pw.pieces[i];
    const auto& right = pw.pieces[(i + 1) % count];
    const double x_left = left.b;
    const double x_right = (i + 1 == count) ? right.a : left.b;
    auto cl = derivative_chain(left.poly);
    auto cr = derivative_chain(right.poly);
    for (std::size_t k = 0; k < depth; ++k) {
      const double vl = k < cl.size() ? horner(cl[k], x_left) : 0.0;
      const double vr = k < cr.size() ? horner(cr[k], x_right) : 0.0;
      sums[k] += std::abs(vr - vl);
    }
  }
  return sums;
}

}  // namespace

double sinc(double u) {
  if (std::abs(u) < 1e-8) {
    const double t = pi * u;
    return 1.0 - t * t / 6.0;
  }
  return cis_pi(u).imag() / (pi * u);
}

cplx cis_pi(double t) {
  double r = std::remainder(t, 2.0);  // in [-1, 1]
  if (r == 0.0) return {1.0, 0.0};
  if (r == 0.5) return {0.0, 1.0};
  if (r == -0.5) return {0.0, -1.0};
  if (r == 1.0 || r == -1.0) return {-1.0, 0.0};
  return {std::cos(pi * r), std::sin(pi * r)};
}

WindowSpec::WindowSpec(WindowKind kind, std::string name) : kind_(std::move(kind)), name_(std::move(name)) {
  std::visit(overloaded{
                 [&](const TrigPoly& t) {
                   is_real_ = trig_is_real(t);
                   if (is_real_) {
                     auto hull = trig_real_hull(t);
                     sup_norm_ = std::max(std::abs(hull.lo), std::abs(hull.hi));
                   } else {
                     sup_norm_ = trig_sup_norm(t);
                   }
                 },
                 [&](const PiecewisePoly& pw) {
                   is_real_ = true;
                   auto hull = piecewise_real_hull(pw);
                   sup_norm_ = std::max(std::abs(hull.lo), std::abs(hull.hi));
                 },
                 [&](const Modulated& m) {
                   is_real_ = m.xi.value() == 0.0;
                   sup_norm_ = 1.0;
                 },
                 [&](const Constant& c) {
                   is_real_ = c.value.imag() == 0.0;
                   sup_norm_ = std::abs(c.value);
                 },
             },
             kind_);
}

WindowSpec WindowSpec::trig_poly(std::map<int, cplx> coeffs) {
  TrigPoly t;
  for (const auto& [n, b] : coeffs) {
    require_finite(b.real(), "trigpoly coefficient");
    require_finite(b.imag(), "trigpoly coefficient");
    if (b != cplx(0.0)) t.coeffs.emplace(n, b);
  }
  return WindowSpec(std::move(t), "trigpoly");
}

WindowSpec WindowSpec::piecewise_poly(std::vector<Piece> pieces) {
  if (pieces.empty()) throw Error(Errc::InvalidWindow, "piecewise_poly needs at least one piece");
  std::sort(pieces.begin(), pieces.end(), [](const Piece& l, const Piece& r) { return l.a < r.a; });
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    auto& piece = pieces[i];
    require_finite(piece.a, "piece endpoint");
    require_finite(piece.b, "piece endpoint");
    for (double c : piece.poly) require_finite(c, "polynomial coefficient");
    if (piece.poly.empty()) piece.poly = {0.0};
    if (piece.b < piece.a) throw Error(Errc::InvalidWindow, "piece has b < a");
    if (i == 0) {
      if (std::abs(piece.a + 0.5) > kCoverTolerance)
        throw Error(Errc::InvalidWindow, "pieces must start at -1/2");
      piece.a = -0.5;
    } else {
      if (std::abs(piece.a - pieces[i - 1].b) > kCoverTolerance)
        throw Error(Errc::InvalidWindow, "pieces must be contiguous (gap or overlap near x = " +
                                             std::to_string(piece.a) + ")");
      piece.a = pieces[i - 1].b;
    }
  }
  if (std::abs(pieces.back().b - 0.5) > kCoverTolerance) throw Error(Errc::InvalidWindow, "pieces must end at 1/2");
  pieces.back().b = 0.5;
  return WindowSpec(PiecewisePoly{std::move(pieces)}, "piecewise_poly");
}

WindowSpec WindowSpec::modulated(Xi xi) {
  require_finite(xi.value(), "xi");
  return WindowSpec(Modulated{xi}, "modulated");
}

WindowSpec WindowSpec::constant(cplx value) {
  require_finite(value.real(), "constant");
  require_finite(value.imag(), "constant");
  return WindowSpec(Constant{value}, "constant");
}

WindowSpec WindowSpec::sawtooth() {
  auto w = piecewise_poly({Piece{-0.5, 0.5, {0.0, 1.0}}});
  w.name_ = "sawtooth";
  return w;
}

WindowSpec WindowSpec::sign() {
  auto w = piecewise_poly({Piece{-0.5, 0.0, {-1.0}}, Piece{0.0, 0.5, {1.0}}});
  w.name_ = "sign";
  return w;
}

std::optional<std::int64_t> WindowSpec::support_radius() const {
  if (auto t = get_if<TrigPoly>()) return trig_degree(*t);
  if (get_if<Constant>()) return 0;
  if (auto m = get_if<Modulated>(); m && m->xi.is_integer()) return std::abs(std::llround(m->xi.value()));
  return std::nullopt;
}

cplx fourier_coeff(const WindowSpec& w, std::int64_t n) {
  return std::visit(overloaded{
                        [&](const TrigPoly& t) -> cplx {
                          if (n < std::numeric_limits<int>::min() || n > std::numeric_limits<int>::max()) return 0.0;
                          auto it = t.coeffs.find(static_cast<int>(n));
                          return it == t.coeffs.end() ? cplx(0.0) : it->second;
                        },
                        [&](const PiecewisePoly& pw) -> cplx { return piecewise_coeff(pw, n); },
                        [&](const Modulated& m) -> cplx {
                          if (m.xi.is_integer()) {
                            return m.xi.compare_twice(2 * n) == 0 ? cplx(1.0) : cplx(0.0);
                          }
                          return sinc(m.xi.value() - static_cast<double>(n));
                        },
                        [&](const Constant& c) -> cplx { return n == 0 ? c.value : cplx(0.0); },
                    },
                    w.kind());
}

std::vector<cplx> fourier_coeffs(const WindowSpec& w, std::int64_t first, std::int64_t count) {
  std::vector<cplx> out(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
  for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fourier_coeff(w, first + i);
  return out;
}

cplx evaluate(const WindowSpec& w, double x) {
  if (!(x >= -0.5 && x <= 0.5)) {
    throw Error(Errc::DomainViolation, "x = " + std::to_string(x) + " outside [-1/2, 1/2]");
  }
  return std::visit(overloaded{
                        [&](const TrigPoly& t) -> cplx { return trig_value(t, x); },
                        [&](const PiecewisePoly& pw) -> cplx {
                          for (std::size_t i = 0; i < pw.pieces.size(); ++i) {
                            const auto& piece = pw.pieces[i];
                            const bool last = i + 1 == pw.pieces.size();
                            if (x >= piece.a && (x < piece.b || (last && x <= piece.b))) {
                              return horner(piece.poly, x);
                            }
                          }
                          return horner(pw.pieces.back().poly, x);
                        },
                        [&](const Modulated& m) -> cplx { return cis_pi(2.0 * m.xi.value() * x); },
                        [&](const Constant& c) -> cplx { return c.value; },
                    },
                    w.kind());
}

WindowSpec reflect_conj(const WindowSpec& w) {
  return std::visit(overloaded{
                        [&](const TrigPoly& t) {
                          std::map<int, cplx> out;
                          for (const auto& [n, b] : t.coeffs) out.emplace(n, std::conj(b));
                          return WindowSpec::trig_poly(std::move(out));
                        },
                        [&](const PiecewisePoly& pw) {
                          std::vector<Piece> out;
                          for (auto it = pw.pieces.rbegin(); it != pw.pieces.rend(); ++it) {
                            Piece p{-it->b, -it->a, it->poly};
                            for (std::size_t j = 1; j < p.poly.size(); j += 2) p.poly[j] = -p.poly[j];
                            out.push_back(std::move(p));
                          }
                          return WindowSpec::piecewise_poly(std::move(out));
                        },
                        [&](const Modulated& m) { return WindowSpec::modulated(m.xi); },
                        [&](const Constant& c) { return WindowSpec::constant(std::conj(c.value)); },
                    },
                    w.kind());
}

IntervalHull real_hull(const WindowSpec& w) {
  if (!w.is_real()) throw Error(Errc::NotRealValued, "window '" + w.name() + "' is not real-valued");
  return std::visit(overloaded{
                        [](const TrigPoly& t) { return trig_real_hull(t); },
                        [](const PiecewisePoly& pw) { return piecewise_real_hull(pw); },
                        [](const Modulated&) { return IntervalHull{1.0, 1.0}; },
                        [](const Constant& c) { return IntervalHull{c.value.real(), c.value.real()}; },
                    },
                    w.kind());
}

double coefficient_tail_bound(const WindowSpec& w, std::int64_t u0) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (u0 < 1) return inf;
  return std::visit(overloaded{
                        [&](const TrigPoly& t) {
                          double acc = 0.0;
                          for (const auto& [n, b] : t.coeffs)
                            if (n >= u0) acc += std::norm(b);
                          return acc;
                        },
                        [&](const PiecewisePoly& pw) {
                          // |b_u| ≤ Σ_k D_k / (2π|u|)^{k+1} ≤ E(u0) / (2πu) for u ≥ u0.
                          const auto jumps = piecewise_jump_sums(pw);
                          const double base = 2.0 * pi * static_cast<double>(u0);
                          double e = 0.0, scale = 1.0;
                          for (double d : jumps) {
                            e += d * scale;
                            scale /= base;
                          }
                          // Σ_{u ≥ u0} 1/u² ≤ 1/(u0 - 1/2) by convexity.
                          return e * e / (4.0 * pi * pi) / (static_cast<double>(u0) - 0.5);
                        },
                        [&](const Modulated& m) {
                          if (auto r = w.support_radius()) {
                            return static_cast<double>(u0) > static_cast<double>(*r) ? 0.0 : 1.0;
                          }
                          const double gap = static_cast<double>(u0) - m.xi.value() - 0.5;
                          return gap > 0.0 ? 1.0 / (pi * pi * gap) : inf;
                        },
                        [&](const Constant&) { return 0.0; },
                    },
                    w.kind());
}

}  // namespace framescope
