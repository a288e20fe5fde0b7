#include "gb_engine.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <tuple>

namespace kreg::detail {

void sort_terms(TermVec& v, const ModuleOrder& order) {
  std::sort(v.begin(), v.end(), [&](const VecTerm& a, const VecTerm& b) { return order(a, b) > 0; });
}

namespace {

// out = a + b for sorted a[from..] and b; equal terms are combined.
void merge_sum(const PrimeField& F, const ModuleOrder& order, const TermVec& a, std::size_t from, const TermVec& b,
               TermVec& out) {
  out.clear();
  out.reserve(a.size() - from + b.size());
  std::size_t i = from, j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = order(a[i], b[j]);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(b[j++]);
    } else {
      Coeff s = F.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, a[i].comp, s});
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
}

// Sum of sorted term vectors held in buckets of length at most 4^(k+2).
// Adding a short vector only touches a short bucket, so a long reduction
// does not re-copy the whole remainder at every step.
class Geobucket {
 public:
  Geobucket(const PrimeField& F, const ModuleOrder& order) : F_(F), order_(order) {}

  void add(TermVec p) {
    std::size_t k = 0;
    while (capacity(k) < p.size()) ++k;
    for (;; ++k) {
      if (k >= buckets_.size()) {
        buckets_.resize(k + 1);
        heads_.resize(k + 1, 0);
      }
      merge_sum(F_, order_, buckets_[k], heads_[k], p, scratch_);
      heads_[k] = 0;
      buckets_[k].swap(scratch_);
      if (buckets_[k].size() <= capacity(k)) return;
      p.swap(buckets_[k]);
      buckets_[k].clear();
    }
  }

  // Adds c * m * g[from..].
  void add_multiple(Coeff c, const Monomial& m, const TermVec& g, std::size_t from) {
    TermVec p(g.size() - from);
    for (std::size_t i = from; i < g.size(); ++i) p[i - from] = {g[i].mono * m, g[i].comp, F_.mul(g[i].coeff, c)};
    add(std::move(p));
  }

  // Removes the leading term; false once the sum is zero.
  bool pop_lead(VecTerm& out) {
    for (;;) {
      std::size_t best = buckets_.size();
      for (std::size_t k = 0; k < buckets_.size(); ++k) {
        if (heads_[k] == buckets_[k].size()) continue;
        if (best == buckets_.size() || order_(buckets_[k][heads_[k]], buckets_[best][heads_[best]]) > 0) best = k;
      }
      if (best == buckets_.size()) return false;
      out = buckets_[best][heads_[best]++];
      for (std::size_t k = 0; k < buckets_.size(); ++k) {
        if (k == best || heads_[k] == buckets_[k].size()) continue;
        const VecTerm& t = buckets_[k][heads_[k]];
        if (t.comp == out.comp && t.mono == out.mono) {
          out.coeff = F_.add(out.coeff, t.coeff);
          ++heads_[k];
        }
      }
      if (out.coeff != 0) return true;
    }
  }

  TermVec take_all() {
    TermVec acc;
    for (std::size_t k = 0; k < buckets_.size(); ++k) {
      merge_sum(F_, order_, buckets_[k], heads_[k], acc, scratch_);
      acc.swap(scratch_);
    }
    buckets_.clear();
    heads_.clear();
    return acc;
  }

 private:
  static std::size_t capacity(std::size_t k) { return std::size_t{16} << (2 * k); }

  const PrimeField& F_;
  const ModuleOrder& order_;
  std::vector<TermVec> buckets_;
  std::vector<std::size_t> heads_;
  TermVec scratch_;
};

const GbElement* find_reducer(const VecTerm& lead, const std::vector<GbElement>& basis) {
  for (const auto& g : basis) {
    const VecTerm& gl = g.v.front();
    if (gl.comp == lead.comp && gl.mono.divides(lead.mono)) return &g;
  }
  return nullptr;
}

void make_monic(const PrimeField& F, TermVec& v) {
  const Coeff inv = F.inv(v.front().coeff);
  if (inv == 1) return;
  for (auto& t : v) t.coeff = F.mul(t.coeff, inv);
}

class Engine {
 public:
  Engine(const PrimeField& field, const GbConfig& config) : F_(field), cfg_(config) {}

  GbResult run(std::vector<GbElement> inputs) {
    GbResult result;
    result.input_minimal.assign(inputs.size(), false);
    std::vector<std::size_t> order(inputs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return inputs[a].degree < inputs[b].degree; });

    std::size_t next = 0;
    while (!queue_.empty() || next < order.size()) {
      const int pair_deg = queue_.empty() ? INT_MAX : std::get<0>(*queue_.begin());
      const int input_deg = next < order.size() ? inputs[order[next]].degree : INT_MAX;
      if (std::min(pair_deg, input_deg) > cfg_.max_degree) break;
      if (pair_deg <= input_deg) {
        auto [deg, j, i] = *queue_.begin();
        queue_.erase(queue_.begin());
        set_pending(i, j, false);
        if (chain_criterion(i, j)) continue;
        TermVec s = s_vector(F_, cfg_.order, basis_[i], basis_[j]);
        process(std::move(s), deg, result);
      } else {
        std::size_t idx = order[next++];
        auto& in = inputs[idx];
        sort_terms(in.v, cfg_.order);
        result.input_minimal[idx] = process(std::move(in.v), in.degree, result);
      }
    }
    if (cfg_.interreduce) interreduce();
    result.basis = std::move(basis_);
    return result;
  }

 private:
  bool in_image(const VecTerm& t) const { return t.comp < cfg_.image_rank; }

  // Returns true if a new basis element was created.
  bool process(TermVec input, int degree, GbResult& result) {
    Geobucket sum(F_, cfg_.order);
    sum.add(std::move(input));
    VecTerm lead;
    bool nonzero = false;
    while ((nonzero = sum.pop_lead(lead))) {
      const GbElement* g = in_image(lead) ? find_reducer(lead, basis_) : nullptr;
      if (!g) break;
      sum.add_multiple(F_.neg(lead.coeff), lead.mono / g->v.front().mono, g->v, 1);
    }
    if (!nonzero) return false;
    TermVec v{lead};
    TermVec rest = sum.take_all();
    v.insert(v.end(), rest.begin(), rest.end());
    if (!in_image(v.front())) {
      result.kernel.push_back({std::move(v), degree});
      return false;
    }
    make_monic(F_, v);
    add_element({std::move(v), degree});
    return true;
  }

  void add_element(GbElement e) {
    const std::size_t t = basis_.size();
    basis_.push_back(std::move(e));
    pending_.emplace_back(t + 1, 0);
    const VecTerm& lt = basis_[t].v.front();
    for (std::size_t k = 0; k < t; ++k) {
      const VecTerm& lk = basis_[k].v.front();
      if (lk.comp != lt.comp) continue;
      if (cfg_.product_criterion && lk.mono.coprime(lt.mono)) continue;
      const int deg = lcm(lk.mono, lt.mono).degree() + cfg_.twists[lt.comp];
      queue_.insert({deg, static_cast<int>(t), static_cast<int>(k)});
      set_pending(static_cast<int>(k), static_cast<int>(t), true);
    }
  }

  void set_pending(int i, int j, bool on) {
    if (i > j) std::swap(i, j);
    pending_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = on ? 1 : 0;
  }
  bool pending(int i, int j) const {
    if (i > j) std::swap(i, j);
    return pending_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] != 0;
  }

  bool chain_criterion(int i, int j) const {
    const VecTerm& li = basis_[static_cast<std::size_t>(i)].v.front();
    const VecTerm& lj = basis_[static_cast<std::size_t>(j)].v.front();
    const Monomial l = lcm(li.mono, lj.mono);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
      const VecTerm& lk = basis_[k].v.front();
      if (lk.comp != li.comp || !lk.mono.divides(l)) continue;
      if (!pending(i, static_cast<int>(k)) && !pending(j, static_cast<int>(k))) return true;
    }
    return false;
  }

  void interreduce() {
    std::vector<bool> redundant(basis_.size(), false);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const VecTerm& li = basis_[i].v.front();
      for (std::size_t k = 0; k < basis_.size() && !redundant[i]; ++k) {
        if (k == i) continue;
        const VecTerm& lk = basis_[k].v.front();
        if (lk.comp == li.comp && lk.mono.divides(li.mono) && !(lk.mono == li.mono && k > i)) redundant[i] = true;
      }
    }
    std::vector<GbElement> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (!redundant[i]) minimal.push_back(std::move(basis_[i]));
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<GbElement> others;
      for (std::size_t k = 0; k < minimal.size(); ++k)
        if (k != i) others.push_back(minimal[k]);
      TermVec tail(minimal[i].v.begin() + 1, minimal[i].v.end());
      TermVec reduced = reduce_fully(F_, cfg_.order, std::move(tail), others);
      TermVec v{minimal[i].v.front()};
      v.insert(v.end(), reduced.begin(), reduced.end());
      minimal[i].v = std::move(v);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const GbElement& a, const GbElement& b) { return cfg_.order(a.v.front(), b.v.front()) > 0; });
    basis_ = std::move(minimal);
  }

  const PrimeField& F_;
  const GbConfig& cfg_;
  std::vector<GbElement> basis_;
  std::vector<std::vector<std::uint8_t>> pending_;
  std::set<std::tuple<int, int, int>> queue_;  // (degree, newer index, older index)
};

}  // namespace

TermVec s_vector(const PrimeField& field, const ModuleOrder& order, const GbElement& a, const GbElement& b) {
  const Monomial l = lcm(a.v.front().mono, b.v.front().mono);
  const Monomial ma = l / a.v.front().mono;
  const Monomial mb = l / b.v.front().mono;
  const Coeff minus_one = field.neg(1);
  TermVec av(a.v.size() - 1);
  for (std::size_t i = 1; i < a.v.size(); ++i) av[i - 1] = {a.v[i].mono * ma, a.v[i].comp, a.v[i].coeff};
  TermVec bv(b.v.size() - 1);
  for (std::size_t i = 1; i < b.v.size(); ++i)
    bv[i - 1] = {b.v[i].mono * mb, b.v[i].comp, field.mul(b.v[i].coeff, minus_one)};
  TermVec out;
  merge_sum(field, order, av, 0, bv, out);
  return out;
}

TermVec reduce_fully(const PrimeField& field, const ModuleOrder& order, TermVec v,
                     const std::vector<GbElement>& basis) {
  TermVec result;
  Geobucket sum(field, order);
  sum.add(std::move(v));
  VecTerm lead;
  while (sum.pop_lead(lead)) {
    if (const GbElement* g = find_reducer(lead, basis))
      sum.add_multiple(field.neg(lead.coeff), lead.mono / g->v.front().mono, g->v, 1);
    else
      result.push_back(lead);
  }
  return result;
}

GbResult run_buchberger(const PrimeField& field, const GbConfig& config, std::vector<GbElement> inputs) {
  for (const auto& in : inputs)
    if (in.v.empty()) throw std::invalid_argument("zero input to Buchberger engine");
  Engine engine(field, config);
  return engine.run(std::move(inputs));
}

}  // namespace kreg::detail
