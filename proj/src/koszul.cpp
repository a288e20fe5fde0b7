#include "kreg/koszul.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "kreg/degreewise.hpp"
#include "kreg/errors.hpp"

namespace kreg {

GeneratorList::GeneratorList(Ring ring, std::vector<Polynomial> elements) : ring_(std::move(ring)) {
  std::vector<std::pair<int, Polynomial>> tagged;
  for (auto& f : elements) {
    require_same_ring(ring_, f.ring());
    if (f.is_zero()) throw std::invalid_argument("generator list contains the zero polynomial");
    auto d = f.homogeneous_degree();
    if (!d) throw NotHomogeneous("generator " + f.to_string() + " is not homogeneous");
    tagged.emplace_back(*d, std::move(f));
  }
  std::stable_sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (auto& [d, f] : tagged) {
    degrees_.push_back(d);
    elements_.push_back(std::move(f));
  }
}

int GeneratorList::top_degree_sum(std::size_t m) const {
  if (m > degrees_.size()) throw std::out_of_range("degree sum index exceeds the number of generators");
  return std::accumulate(degrees_.begin(), degrees_.begin() + static_cast<std::ptrdiff_t>(m), 0);
}

std::vector<std::vector<std::size_t>> lex_subsets(std::size_t l, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  if (p > l) return out;
  std::vector<std::size_t> cur(p);
  std::iota(cur.begin(), cur.end(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = p;
    while (i > 0 && cur[i - 1] == l - p + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t k = i; k < p; ++k) cur[k] = cur[k - 1] + 1;
  }
  return out;
}

namespace {

std::uint32_t subset_mask(const std::vector<std::size_t>& T) {
  std::uint32_t m = 0;
  for (auto j : T) m |= 1u << j;
  return m;
}

}  // namespace

FreeComplex build_koszul(const GeneratorList& x) {
  const std::size_t l = x.size();
  if (l == 0) throw std::invalid_argument("Koszul complex needs at least one generator");
  if (l > 20) throw std::invalid_argument("too many generators for a Koszul complex");
  const Ring& ring = x.ring();
  const auto& F = ring->field();
  FreeComplex K;
  K.ring = ring;
  std::vector<std::vector<std::vector<std::size_t>>> subsets(l + 1);
  std::vector<std::map<std::uint32_t, std::size_t>> index(l + 1);
  for (std::size_t p = 0; p <= l; ++p) {
    subsets[p] = lex_subsets(l, p);
    GradedFreeModule mod;
    for (std::size_t k = 0; k < subsets[p].size(); ++k) {
      int tw = 0;
      for (auto j : subsets[p][k]) tw += x.degrees()[j];
      mod.twists.push_back(tw);
      index[p][subset_mask(subsets[p][k])] = k;
    }
    K.modules[static_cast<int>(p)] = std::move(mod);
  }
  for (std::size_t p = 1; p <= l; ++p) {
    GradedMap d{K.modules[static_cast<int>(p)], K.modules[static_cast<int>(p - 1)], {}};
    for (const auto& T : subsets[p]) {
      std::vector<VecTerm> terms;
      const std::uint32_t mask = subset_mask(T);
      for (std::size_t pos = 0; pos < T.size(); ++pos) {
        const std::size_t j = T[pos];
        const auto target = static_cast<std::uint32_t>(index[p - 1].at(mask & ~(1u << j)));
        for (const auto& t : x.elements()[j].terms())
          terms.push_back({t.mono, target, pos % 2 == 0 ? t.coeff : F.neg(t.coeff)});
      }
      d.columns.push_back(FreeVector::from_terms(ring, d.target.rank(), std::move(terms)));
    }
    K.differentials.emplace(static_cast<int>(p), std::move(d));
  }
  return K;
}

FreeComplex total_tensor(const FreeComplex& K, const FreeComplex& Fc) {
  require_same_ring(K.ring, Fc.ring);
  const Ring& ring = K.ring;
  const auto& field = ring->field();
  FreeComplex D;
  D.ring = ring;
  if (K.modules.empty() || Fc.modules.empty()) return D;
  const int pmin = K.min_index(), pmax = K.max_index();
  const int qmin = Fc.min_index(), qmax = Fc.max_index();

  // offsets[m][p] = start of the K_p ⊗ F_{m-p} block inside D_m
  std::map<int, std::map<int, std::size_t>> offsets;
  for (int m = pmin + qmin; m <= pmax + qmax; ++m) {
    GradedFreeModule mod;
    for (int p = pmin; p <= pmax; ++p) {
      const int q = m - p;
      if (q < qmin || q > qmax) continue;
      const GradedFreeModule Kp = K.module(p), Fq = Fc.module(q);
      offsets[m][p] = mod.rank();
      for (int a : Kp.twists)
        for (int b : Fq.twists) mod.twists.push_back(a + b);
    }
    if (!mod.is_zero()) D.modules[m] = std::move(mod);
  }

  for (int m = pmin + qmin + 1; m <= pmax + qmax; ++m) {
    if (!D.modules.count(m) || !D.modules.count(m - 1)) continue;
    GradedMap d{D.modules[m], D.modules[m - 1], {}};
    const std::size_t target_rank = d.target.rank();
    for (int p = pmin; p <= pmax; ++p) {
      const int q = m - p;
      if (q < qmin || q > qmax) continue;
      const std::size_t rk = K.module(p).rank(), rf = Fc.module(q).rank();
      const GradedMap dK = K.differential(p);
      const GradedMap dF = Fc.differential(q);
      const std::size_t rf_lower = Fc.module(q - 1).rank();
      for (std::size_t a = 0; a < rk; ++a)
        for (std::size_t b = 0; b < rf; ++b) {
          std::vector<VecTerm> terms;
          if (!K.module(p - 1).is_zero()) {
            const std::size_t base = offsets[m - 1].at(p - 1);
            for (const auto& t : dK.columns[a].terms())
              terms.push_back({t.mono, static_cast<std::uint32_t>(base + t.comp * rf + b), t.coeff});
          }
          if (!Fc.module(q - 1).is_zero()) {
            const std::size_t base = offsets[m - 1].at(p);
            const bool negate = (p % 2) != 0;
            for (const auto& t : dF.columns[b].terms())
              terms.push_back({t.mono, static_cast<std::uint32_t>(base + a * rf_lower + t.comp),
                               negate ? field.neg(t.coeff) : t.coeff});
          }
          d.columns.push_back(FreeVector::from_terms(ring, target_rank, std::move(terms)));
        }
    }
    D.differentials.emplace(m, std::move(d));
  }
  return D;
}

KoszulHomology koszul_homology(const GeneratorList& x, const ModulePresentation& M) {
  require_same_ring(x.ring(), M.ring);
  KoszulHomology out;
  out.koszul = build_koszul(x);
  out.resolution = minimal_free_resolution(M);
  out.total = total_tensor(out.koszul, out.resolution.complex);
  for (std::size_t k = 0; k <= x.size(); ++k) out.homology.push_back(homology_at(out.total, static_cast<int>(k)));
  return out;
}

std::vector<HilbertFunction> koszul_homology_hilbert_oracle(const GeneratorList& x, const ModulePresentation& M,
                                                            int d_min, int d_max) {
  return koszul_homology_hilbert_oracle(x, M, d_min, d_max, simd::best_isa(M.ring->characteristic()));
}

std::vector<HilbertFunction> koszul_homology_hilbert_oracle(const GeneratorList& x, const ModulePresentation& M,
                                                            int d_min, int d_max, simd::Isa isa) {
  require_same_ring(x.ring(), M.ring);
  if (d_min > d_max) throw std::invalid_argument("empty degree window");
  const std::size_t l = x.size();
  const auto& field = M.ring->field();
  std::vector<std::vector<std::vector<std::size_t>>> subsets(l + 1);
  for (std::size_t p = 0; p <= l; ++p) subsets[p] = lex_subsets(l, p);
  std::vector<std::map<std::uint32_t, std::size_t>> position(l + 1);
  for (std::size_t p = 0; p <= l; ++p)
    for (std::size_t k = 0; k < subsets[p].size(); ++k) position[p][subset_mask(subsets[p][k])] = k;

  std::map<int, QuotientPiece> pieces;
  auto piece = [&](int e) -> const QuotientPiece& {
    auto it = pieces.find(e);
    if (it == pieces.end()) it = pieces.emplace(e, QuotientPiece(M, e, isa)).first;
    return it->second;
  };
  auto subset_degree = [&](const std::vector<std::size_t>& T) {
    int s = 0;
    for (auto j : T) s += x.degrees()[j];
    return s;
  };

  std::vector<HilbertFunction> out(l + 1, HilbertFunction{d_min, {}});
  for (int d = d_min; d <= d_max; ++d) {
    // Block offsets of C_p,d = ⊕_T M_{d - deg T}.
    std::vector<std::vector<std::size_t>> offset(l + 1);
    std::vector<std::size_t> dim(l + 1, 0);
    for (std::size_t p = 0; p <= l; ++p) {
      for (const auto& T : subsets[p]) {
        offset[p].push_back(dim[p]);
        dim[p] += piece(d - subset_degree(T)).dim();
      }
    }
    std::vector<std::size_t> rank(l + 2, 0);
    for (std::size_t p = 1; p <= l; ++p) {
      if (dim[p] == 0 || dim[p - 1] == 0) continue;
      DenseEchelon ech(field, dim[p - 1], isa);
      for (std::size_t ti = 0; ti < subsets[p].size() && !ech.full(); ++ti) {
        const auto& T = subsets[p][ti];
        const int e = d - subset_degree(T);
        const QuotientPiece& src = piece(e);
        const std::uint32_t mask = subset_mask(T);
        for (std::size_t s = 0; s < src.dim() && !ech.full(); ++s) {
          const VecTerm& basis_elem = src.ambient().element(src.standard(s));
          std::vector<Coeff> row(dim[p - 1], 0);
          for (std::size_t pos = 0; pos < T.size(); ++pos) {
            const std::size_t j = T[pos];
            const QuotientPiece& dst = piece(e + x.degrees()[j]);
            if (dst.dim() == 0) continue;
            std::vector<VecTerm> prod;
            for (const auto& t : x.elements()[j].terms())
              prod.push_back({t.mono * basis_elem.mono, basis_elem.comp, pos % 2 == 0 ? t.coeff : field.neg(t.coeff)});
            auto cls = dst.classify(dst.ambient().coordinates(prod, field));
            const std::size_t base = offset[p - 1][position[p - 1].at(mask & ~(1u << j))];
            for (std::size_t k = 0; k < cls.size(); ++k) row[base + k] = field.add(row[base + k], cls[k]);
          }
          ech.insert(std::move(row));
        }
      }
      rank[p] = ech.rank();
    }
    for (std::size_t p = 0; p <= l; ++p)
      out[p].values.push_back(static_cast<std::int64_t>(dim[p] - rank[p] - rank[p + 1]));
  }
  return out;
}

}  // namespace kreg
