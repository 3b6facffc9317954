#pragma once

#include <functional>
#include <string>
#include <vector>

#include "superfock/algebra.hpp"
#include "superfock/mode_engine.hpp"
#include "superfock/report.hpp"

namespace superfock {

/// Pair (u, v) of g-eigenvectors for a Jacobi sweep. Modes of u live in
/// u_offset + Z, modes of v in v_offset + Z.
template <class VoaKey>
struct JacobiPair {
  std::string label;
  SparseVector<VoaKey> u, v;
  Rational wt_u, wt_v;
  int parity_u = 0, parity_v = 0;
  Rational u_offset = 0, v_offset = 0;
};

/// u_j x inside the vertex operator superalgebra itself.
template <class VoaKey>
using VoaModeFn = std::function<SparseVector<VoaKey>(const SparseVector<VoaKey>&, long, const SparseVector<VoaKey>&)>;

namespace detail {
inline std::vector<Rational> lattice_window(const Rational& offset, long window) {
  std::vector<Rational> out;
  for (long j = -window - 1; j <= window + 1; ++j) {
    Rational x = offset + j;
    if (abs(x) <= window) out.push_back(x);
  }
  return out;
}
}  // namespace detail

/// Component twisted Jacobi identity
///   Σ_i C(m,i) (u_{ℓ+i}v)_{m+n-i} w
///     = Σ_i (-1)^i C(ℓ,i) [u_{m+ℓ-i} v_{n+i} - (-1)^{|u||v|}(-1)^ℓ v_{n+ℓ-i} u_{m+i}] w
/// for every |m|, |n|, |ℓ| <= window on the lattices of the pair and every test vector.
template <class VoaKey, class ModKey, class Show>
CheckReport verify_jacobi(ModeEngine<VoaKey, ModKey>& module, const VoaModeFn<VoaKey>& voa_mode,
                          const JacobiPair<VoaKey>& pair, const std::vector<ModKey>& tests, long window,
                          Show&& show) {
  using ModVec = SparseVector<ModKey>;
  CheckReport report;
  report.suite = "jacobi " + pair.label;
  report.window = window;
  const bool odd_pair = pair.parity_u * pair.parity_v % 2 == 1;

  // u_{ℓ+i} v for i >= 0, nonzero only while wt(u) + wt(v) - ℓ - i - 1 >= 0.
  std::map<long, SparseVector<VoaKey>> products;
  auto product = [&](long j) -> const SparseVector<VoaKey>& {
    auto it = products.find(j);
    if (it == products.end()) it = products.emplace(j, voa_mode(pair.u, j, pair.v)).first;
    return it->second;
  };

  for (const ModKey& w : tests) {
    const Rational g = module.grade(w);
    const ModVec wv(w);
    for (const Rational& m : detail::lattice_window(pair.u_offset, window)) {
      for (const Rational& n : detail::lattice_window(pair.v_offset, window)) {
        for (long ell = -window; ell <= window; ++ell) {
          ModVec lhs;
          for (long i = 0; pair.wt_u + pair.wt_v - ell - i - 1 >= 0; ++i) {
            const auto& uv = product(ell + i);
            if (uv.is_zero()) continue;
            lhs.add_scaled(module.mode(uv, m + n - i, wv), Scalar(binomial(m, i)));
          }
          ModVec rhs;
          for (long i = 0; g + pair.wt_v - (n + i) - 1 >= 0; ++i) {
            ModVec y = module.mode(pair.v, n + i, wv);
            if (y.is_zero()) continue;
            Rational c = binomial(Rational(ell), i);
            if (i % 2 != 0) c = -c;
            rhs.add_scaled(module.mode(pair.u, m + ell - i, y), Scalar(c));
          }
          const bool eps_ell_positive = odd_pair == (ell % 2 != 0);  // ε(-1)^ℓ = +1
          for (long i = 0; g + pair.wt_u - (m + i) - 1 >= 0; ++i) {
            ModVec y = module.mode(pair.u, m + i, wv);
            if (y.is_zero()) continue;
            Rational c = binomial(Rational(ell), i);
            if (i % 2 != 0) c = -c;
            if (eps_ell_positive) c = -c;
            rhs.add_scaled(module.mode(pair.v, n + ell - i, y), Scalar(c));
          }
          ++report.checked;
          if (lhs != rhs) {
            record(report, {"jacobi",
                            {"m=" + m.get_str(), "n=" + n.get_str(), "l=" + std::to_string(ell), show(w)},
                            make_residual(lhs - rhs, show)});
          }
        }
      }
    }
  }
  return report;
}

/// Operators for the generators of a presentation, with C acting as `central`.
template <class ModKey>
struct Realization {
  std::function<SparseVector<ModKey>(const Generator&, const SparseVector<ModKey>&)> apply;
  Scalar central;
};

/// [X, Y] w == ρ([x, y]) w for every pair of windowed generators and test vector w,
/// with [X, Y] = XY - (-1)^{|x||y|} YX.
template <class ModKey, class Show>
CheckReport verify_representation(const Presentation& alg, const Realization<ModKey>& rho,
                                  const std::vector<ModKey>& tests, long window, const std::string& suite,
                                  Show&& show) {
  using ModVec = SparseVector<ModKey>;
  CheckReport report;
  report.suite = suite;
  report.window = window;
  std::vector<Generator> basis;
  for (const Generator& g : alg.window_basis(window)) {
    if (g.family != Family::C) basis.push_back(g);
  }
  auto act = [&](const AlgebraElement& e, const ModVec& w) {
    ModVec out;
    for (const auto& [g, c] : e.terms()) {
      out.add_scaled(g.family == Family::C ? w : rho.apply(g, w), g.family == Family::C ? c * rho.central : c);
    }
    return out;
  };
  for (const ModKey& w : tests) {
    const ModVec wv(w);
    std::vector<ModVec> images;
    images.reserve(basis.size());
    for (const Generator& g : basis) images.push_back(rho.apply(g, wv));
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = a; b < basis.size(); ++b) {
        const Generator& x = basis[a];
        const Generator& y = basis[b];
        ModVec lhs = rho.apply(x, images[b]);
        ModVec yx = rho.apply(y, images[a]);
        if (x.parity() * y.parity() == 1) lhs += yx;
        else lhs -= yx;
        ModVec rhs = act(alg.bracket(x, y), wv);
        ++report.checked;
        if (lhs != rhs) {
          record(report, {"bracket", {x.to_string(), y.to_string(), show(w)}, make_residual(lhs - rhs, show)});
        }
      }
    }
  }
  return report;
}

/// Operators of off-lattice generators vanish: for each family, indices in
/// (1/2)Z with |index| <= window that are off the family's lattice act as zero.
template <class ModKey, class Show>
CheckReport verify_lattice_vanishing(const Presentation& alg, const Realization<ModKey>& rho,
                                     const std::vector<ModKey>& tests, long window, const std::string& suite,
                                     Show&& show) {
  CheckReport report;
  report.suite = suite;
  report.window = window;
  for (Family f : alg.families()) {
    if (f == Family::C) continue;
    const Rational offset = *alg.lattice_offset(f);
    for (const Rational& idx : detail::lattice_window(offset + make_rational(1, 2), window)) {
      const Generator g{f, idx};
      for (const ModKey& w : tests) {
        auto image = rho.apply(g, SparseVector<ModKey>(w));
        ++report.checked;
        if (!image.is_zero()) record(report, {"lattice", {g.to_string(), show(w)}, make_residual(image, show)});
      }
    }
  }
  return report;
}

}  // namespace superfock
